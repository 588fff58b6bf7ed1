#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "subcube/dist.hpp"
#include "subcube/rng.hpp"

namespace subcube {

/// A rooted depth-q adaptive conditioning strategy: each node conditions on
/// an explicit subset of {-1,1}^n (stored as sorted pmf indices) and has one
/// child per element of that subset.
struct QueryTreeNode {
  std::vector<std::uint32_t> points;                     // sorted, non-empty
  std::vector<std::unique_ptr<QueryTreeNode>> children;  // parallel to points; empty at depth q
};

class QueryTree {
 public:
  QueryTree(int n, int depth, std::unique_ptr<QueryTreeNode> root);
  int n() const { return n_; }
  int depth() const { return depth_; }
  const QueryTreeNode& root() const { return *root_; }

 private:
  int n_;
  int depth_;
  std::unique_ptr<QueryTreeNode> root_;
};

/// Random tree with every conditioning set a fresh non-empty subset of the
/// cube of size at most maxSetSize.
QueryTree random_query_tree(int n, int depth, std::size_t maxSetSize, Rng& rng);

/// One execution of the tree on p: at each node draw x ~ p conditioned on
/// x in A_v, descend through the child picked by x. Throws on a zero-mass
/// conditioning set.
std::vector<Sample> execute_tree(const ExplicitDist& p, const QueryTree& tree, Rng& rng);

/// The rejection-sampling walk: samples the path uniformly within each
/// conditioning set, then accepts with probability
/// min(1, delta * E_p(path) / E_U(path)). nullopt = reject.
std::optional<std::vector<Sample>> sample_walk(const ExplicitDist& p, const QueryTree& tree,
                                               double delta, Rng& rng);

/// Pointwise |p(x) - 2^-n| <= eps 2^-n for all x.
bool almost_uniform_check(const ExplicitDist& p, double eps);

/// Exact audit of the walk: enumerates every root-to-leaf path to obtain the
/// uniform-walk law E_U, the true execution law E_p, the accept region
/// R = { path : E_p < E_U / delta } with masses alpha (under E_U) and beta
/// (under E_p), the conditional-on-accept law, and the exact reject
/// probability alpha - delta beta. Also runs `trials` live walks for the
/// empirical reject rate.
struct CompressionAudit {
  double tvExact = 0.0;             // dtv(accepted law, E_p)
  double rejectProbExact = 0.0;     // Pr[reject]
  double rejectRateEmpirical = 0.0; // from live walks
  double alpha = 0.0;
  double beta = 0.0;
  bool closedFormConsistent = true; // accepted law matches the two-branch form
};
CompressionAudit compression_audit(const ExplicitDist& p, const QueryTree& tree, double delta,
                                   long trials, Rng& rng);

}  // namespace subcube
