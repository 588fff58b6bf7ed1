#include "subcube/compression.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace subcube {

QueryTree::QueryTree(int n, int depth, std::unique_ptr<QueryTreeNode> root)
    : n_(n), depth_(depth), root_(std::move(root)) {
  if (!root_) throw std::invalid_argument("QueryTree: null root");
}

namespace {

std::unique_ptr<QueryTreeNode> random_node(int n, int depthLeft, std::size_t maxSetSize,
                                           Rng& rng) {
  const std::size_t cube = std::size_t{1} << n;
  const std::size_t cap = std::min(maxSetSize, cube);
  const std::size_t size = 1 + rng.uniform_index(cap);
  // Reservoir-free subset draw: shuffle-select `size` distinct points.
  std::vector<std::uint32_t> all(cube);
  for (std::size_t i = 0; i < cube; ++i) all[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.uniform_index(cube - i);
    std::swap(all[i], all[j]);
  }
  auto node = std::make_unique<QueryTreeNode>();
  node->points.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(node->points.begin(), node->points.end());
  if (depthLeft > 1) {
    node->children.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      node->children.push_back(random_node(n, depthLeft - 1, maxSetSize, rng));
    }
  }
  return node;
}

double set_mass(const ExplicitDist& p, const std::vector<std::uint32_t>& points) {
  double mass = 0.0;
  for (std::uint32_t idx : points) mass += p.pmf[idx];
  return mass;
}

}  // namespace

QueryTree random_query_tree(int n, int depth, std::size_t maxSetSize, Rng& rng) {
  if (depth < 1) throw std::invalid_argument("random_query_tree: depth must be >= 1");
  return QueryTree(n, depth, random_node(n, depth, maxSetSize, rng));
}

std::vector<Sample> execute_tree(const ExplicitDist& p, const QueryTree& tree, Rng& rng) {
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(tree.depth()));
  const QueryTreeNode* node = &tree.root();
  for (int d = 0; d < tree.depth(); ++d) {
    const double mass = set_mass(p, node->points);
    if (mass <= 0.0) throw std::domain_error("execute_tree: zero-mass conditioning set");
    double u = rng.next_double() * mass;
    std::size_t pick = node->points.size() - 1;
    for (std::size_t i = 0; i < node->points.size(); ++i) {
      u -= p.pmf[node->points[i]];
      if (u <= 0.0) {
        pick = i;
        break;
      }
    }
    out.push_back(sample_from_index(node->points[pick], p.n));
    node = node->children.empty() ? nullptr : node->children[pick].get();
    if (node == nullptr && d + 1 < tree.depth()) {
      throw std::logic_error("execute_tree: tree shallower than its depth");
    }
  }
  return out;
}

std::optional<std::vector<Sample>> sample_walk(const ExplicitDist& p, const QueryTree& tree,
                                               double delta, Rng& rng) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("sample_walk: delta in (0,1]");
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(tree.depth()));
  double ratio = 1.0;  // E_p(path) / E_U(path)
  const QueryTreeNode* node = &tree.root();
  for (int d = 0; d < tree.depth(); ++d) {
    const double mass = set_mass(p, node->points);
    if (mass <= 0.0) throw std::domain_error("sample_walk: zero-mass conditioning set");
    const std::size_t pick = rng.uniform_index(node->points.size());
    const std::uint32_t idx = node->points[pick];
    // Per-step ratio: (p(x)/mass) / (1/|A|).
    ratio *= p.pmf[idx] * static_cast<double>(node->points.size()) / mass;
    out.push_back(sample_from_index(idx, p.n));
    node = node->children.empty() ? nullptr : node->children[pick].get();
  }
  if (rng.bernoulli(std::min(1.0, delta * ratio))) return out;
  return std::nullopt;
}

bool almost_uniform_check(const ExplicitDist& p, double eps) {
  const double u = 1.0 / static_cast<double>(p.pmf.size());
  for (double v : p.pmf) {
    if (std::fabs(v - u) > eps * u * (1.0 + 1e-12)) return false;
  }
  return true;
}

CompressionAudit compression_audit(const ExplicitDist& p, const QueryTree& tree, double delta,
                                   long trials, Rng& rng) {
  if (p.n > 6 || tree.depth() > 4) {
    throw dimension_cap_error("compression_audit: enumeration caps are n <= 6, q <= 4");
  }
  struct Leaf {
    double eu = 0.0;  // E_U(path)
    double ep = 0.0;  // E_p(path)
  };
  std::vector<Leaf> leaves;

  std::function<void(const QueryTreeNode*, int, double, double)> walk =
      [&](const QueryTreeNode* node, int depthLeft, double eu, double ep) {
        if (node->points.size() > 64) {
          throw dimension_cap_error("compression_audit: |A_v| cap is 64");
        }
        const double mass = set_mass(p, node->points);
        if (mass <= 0.0) throw std::domain_error("compression_audit: zero-mass conditioning set");
        for (std::size_t i = 0; i < node->points.size(); ++i) {
          const double eu2 = eu / static_cast<double>(node->points.size());
          const double ep2 = ep * p.pmf[node->points[i]] / mass;
          if (depthLeft == 1) {
            leaves.push_back(Leaf{eu2, ep2});
          } else {
            walk(node->children[i].get(), depthLeft - 1, eu2, ep2);
          }
        }
      };
  walk(&tree.root(), tree.depth(), 1.0, 1.0);

  CompressionAudit audit;
  // Accept region R = { path : E_p < E_U / delta }; off R the walk always
  // accepts.
  double alpha = 0.0, beta = 0.0;
  for (const Leaf& leaf : leaves) {
    if (leaf.ep < leaf.eu / delta) {
      alpha += leaf.eu;
      beta += leaf.ep;
    }
  }
  audit.alpha = alpha;
  audit.beta = beta;
  audit.rejectProbExact = alpha - delta * beta;

  const double normalizer = 1.0 - alpha + delta * beta;  // Pr[accept]
  double tv = 0.0;
  double worstClosedFormGap = 0.0;
  for (const Leaf& leaf : leaves) {
    const bool inR = leaf.ep < leaf.eu / delta;
    const double acceptMass = leaf.eu * std::min(1.0, delta * leaf.ep / leaf.eu);
    const double accepted = acceptMass / normalizer;
    const double closedForm =
        inR ? delta * leaf.ep / normalizer : leaf.eu / normalizer;
    worstClosedFormGap = std::max(worstClosedFormGap, std::fabs(accepted - closedForm));
    tv += std::fabs(accepted - leaf.ep);
  }
  audit.tvExact = 0.5 * tv;
  audit.closedFormConsistent = worstClosedFormGap <= 1e-12;

  long rejects = 0;
  for (long t = 0; t < trials; ++t) {
    if (!sample_walk(p, tree, delta, rng).has_value()) ++rejects;
  }
  audit.rejectRateEmpirical = trials > 0 ? static_cast<double>(rejects) / trials : 0.0;
  return audit;
}

}  // namespace subcube
