#include "subcube/exact_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subcube {

namespace {

struct SortedBlock {
  std::vector<double> values;  // ascending
  std::vector<double> prefix;  // prefix[t] = sum of first t values
};

// Per-block minimizer of f(w) - lambda w with f(w) = sum |a - w|: the
// breakpoint a_(t) whose subgradient interval contains lambda.
double block_dual_value(const SortedBlock& blk, double lambda, double& wOut) {
  const long m = static_cast<long>(blk.values.size());
  long t = static_cast<long>(std::ceil((static_cast<double>(m) + lambda) / 2.0));
  t = std::clamp(t, 1L, m);
  const double w = blk.values[static_cast<std::size_t>(t - 1)];
  // f(w) = [t w - prefix(t)] + [suffix(t) - (m - t) w]
  const double pre = blk.prefix[static_cast<std::size_t>(t)];
  const double suf = blk.prefix[static_cast<std::size_t>(m)] - pre;
  const double f = (static_cast<double>(t) * w - pre) + (suf - static_cast<double>(m - t) * w);
  wOut = w;
  return f - lambda * w;
}

std::vector<int> complement_of(int n, const std::vector<int>& J) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int i : J) {
    if (i < 0 || i >= n) throw std::invalid_argument("coordinate outside [n]");
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

}  // namespace

double closest_junta_distance(const ExplicitDist& p, const std::vector<int>& J) {
  const int n = p.n;
  if (n > 12) throw dimension_cap_error("closest_junta_distance: n > 12");
  std::vector<int> vars = J;
  std::sort(vars.begin(), vars.end());
  const std::vector<int> off = complement_of(n, vars);
  const std::size_t blocks = std::size_t{1} << vars.size();
  const std::size_t m = std::size_t{1} << off.size();

  std::vector<SortedBlock> blk(blocks);
  for (std::size_t b = 0; b < blocks; ++b) blk[b].values.reserve(m);
  for (std::size_t idx = 0; idx < p.pmf.size(); ++idx) {
    std::size_t b = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if ((idx >> vars[t]) & 1u) b |= (std::size_t{1} << t);
    }
    blk[b].values.push_back(p.pmf[idx]);
  }
  for (auto& block : blk) {
    std::sort(block.values.begin(), block.values.end());
    block.prefix.assign(block.values.size() + 1, 0.0);
    for (std::size_t t = 0; t < block.values.size(); ++t) {
      block.prefix[t + 1] = block.prefix[t] + block.values[t];
    }
  }

  const double c = 1.0 / static_cast<double>(m);  // required sum of block levels

  // Strong duality: the optimum equals max over lambda of
  // sum_b min_w [f_b(w) - lambda w] + lambda c; the dual derivative is
  // c - sum_b w_b(lambda), nonincreasing, so bisect.
  double lo = -static_cast<double>(m) - 1.0, hi = static_cast<double>(m) + 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    double total = 0.0;
    for (const auto& block : blk) {
      double w;
      block_dual_value(block, mid, w);
      total += w;
    }
    if (total < c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lambda = 0.5 * (lo + hi);
  double dual = lambda * c;
  for (const auto& block : blk) {
    double w;
    dual += block_dual_value(block, lambda, w);
  }
  return std::max(0.0, 0.5 * dual);
}

double distance_to_k_junta(const ExplicitDist& p, int k) {
  const int n = p.n;
  if (n > 10) throw dimension_cap_error("distance_to_k_junta: n > 10");
  if (k > 4 && k < n) throw dimension_cap_error("distance_to_k_junta: k > 4");
  if (k >= n) return 0.0;
  std::vector<int> J(static_cast<std::size_t>(k));
  std::iota(J.begin(), J.end(), 0);
  double best = 1.0;
  // Lexicographic combinations of [n] choose k.
  while (true) {
    best = std::min(best, closest_junta_distance(p, J));
    int t = k - 1;
    while (t >= 0 && J[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) break;
    ++J[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) J[static_cast<std::size_t>(u)] = J[static_cast<std::size_t>(u - 1)] + 1;
  }
  return best;
}

CanonicalDistance canonical_junta_distance(const ExplicitDist& p, const std::vector<int>& J) {
  const int n = p.n;
  if (n > 12) throw dimension_cap_error("canonical_junta_distance: n > 12");
  std::vector<int> vars = J;
  std::sort(vars.begin(), vars.end());
  const std::vector<int> off = complement_of(n, vars);
  const std::size_t m = std::size_t{1} << off.size();

  // Route 1: build q (q_J = p_J, uniform off J) and take the TV directly.
  std::vector<double> blockMass(std::size_t{1} << vars.size(), 0.0);
  for (std::size_t idx = 0; idx < p.pmf.size(); ++idx) {
    std::size_t b = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if ((idx >> vars[t]) & 1u) b |= (std::size_t{1} << t);
    }
    blockMass[b] += p.pmf[idx];
  }
  double viaPmf = 0.0;
  for (std::size_t idx = 0; idx < p.pmf.size(); ++idx) {
    std::size_t b = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if ((idx >> vars[t]) & 1u) b |= (std::size_t{1} << t);
    }
    viaPmf += std::fabs(p.pmf[idx] - blockMass[b] / static_cast<double>(m));
  }
  viaPmf *= 0.5;

  // Route 2: E over rho ~ D_Jbar(p) of dtv(p_|rho, U). rho is determined by
  // the J-assignment, drawn with probability blockMass.
  double viaRestrictions = 0.0;
  for (std::size_t b = 0; b < blockMass.size(); ++b) {
    if (blockMass[b] <= 0.0) continue;
    double acc = 0.0;
    for (std::size_t w = 0; w < m; ++w) {
      std::size_t idx = 0;
      for (std::size_t t = 0; t < vars.size(); ++t) {
        if ((b >> t) & 1u) idx |= (std::size_t{1} << vars[t]);
      }
      for (std::size_t t = 0; t < off.size(); ++t) {
        if ((w >> t) & 1u) idx |= (std::size_t{1} << off[t]);
      }
      acc += std::fabs(p.pmf[idx] / blockMass[b] - 1.0 / static_cast<double>(m));
    }
    viaRestrictions += blockMass[b] * 0.5 * acc;
  }
  return CanonicalDistance{viaPmf, viaRestrictions};
}

double restricted_mean_norm_expectation(const ExplicitDist& h, double sigma) {
  const int m = h.n;
  if (m > 16) throw dimension_cap_error("restricted_mean_norm_expectation: m > 16");
  if (m == 0) return 0.0;
  const std::size_t size = h.pmf.size();
  double expectation = 0.0;
  const std::size_t subsets = std::size_t{1} << m;
  for (std::size_t starMask = 0; starMask < subsets; ++starMask) {
    const int starCount = __builtin_popcount(static_cast<unsigned>(starMask));
    const double pSubset = std::pow(sigma, starCount) * std::pow(1.0 - sigma, m - starCount);
    if (pSubset <= 0.0) continue;
    if (starCount == 0) continue;  // empty star set: zero-dimensional mean, norm 0

    // Enumerate fixed assignments w on the complement with their marginals.
    const std::size_t fixedMask = (subsets - 1) & ~starMask;
    double inner = 0.0;
    // Iterate over assignments of the fixed coordinates via subset trick.
    std::size_t w = 0;
    while (true) {
      double mass = 0.0;
      std::vector<double> mean(static_cast<std::size_t>(starCount), 0.0);
      for (std::size_t idx = 0; idx < size; ++idx) {
        if ((idx & fixedMask) != w) continue;
        const double pv = h.pmf[idx];
        if (pv == 0.0) continue;
        mass += pv;
        int t = 0;
        for (int i = 0; i < m; ++i) {
          if (!((starMask >> i) & 1u)) continue;
          mean[static_cast<std::size_t>(t)] += pv * (((idx >> i) & 1u) ? 1.0 : -1.0);
          ++t;
        }
      }
      if (mass > 0.0) {
        double norm2 = 0.0;
        for (double v : mean) norm2 += (v / mass) * (v / mass);
        inner += mass * std::sqrt(norm2);
      }
      if (w == fixedMask) break;
      w = (w - fixedMask) & fixedMask;  // next subset of fixedMask
    }
    expectation += pSubset * inner;
  }
  return expectation;
}

AuditReport structural_audit(const ExplicitDist& p, const std::vector<int>& J, double cExponent) {
  const int n = p.n;
  if (n > 6) throw dimension_cap_error("structural_audit: n > 6");
  std::vector<int> vars = J;
  std::sort(vars.begin(), vars.end());
  const std::vector<int> off = complement_of(n, vars);

  AuditReport report;
  report.lhs = closest_junta_distance(p, J);

  // Block masses and the conditional distributions h_y = p_|rho over Jbar.
  const std::size_t blocks = std::size_t{1} << vars.size();
  const std::size_t m = std::size_t{1} << off.size();
  std::vector<double> blockMass(blocks, 0.0);
  std::vector<std::vector<double>> h(blocks, std::vector<double>(m, 0.0));
  for (std::size_t idx = 0; idx < p.pmf.size(); ++idx) {
    std::size_t b = 0, w = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if ((idx >> vars[t]) & 1u) b |= (std::size_t{1} << t);
    }
    for (std::size_t t = 0; t < off.size(); ++t) {
      if ((idx >> off[t]) & 1u) w |= (std::size_t{1} << t);
    }
    blockMass[b] += p.pmf[idx];
    h[b][w] += p.pmf[idx];
  }

  const int jMax = static_cast<int>(std::ceil(std::log2(2.0 * n)));
  report.rhsTerms.assign(static_cast<std::size_t>(jMax), 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    if (blockMass[b] <= 0.0) continue;
    std::vector<double> cond = h[b];
    for (double& v : cond) v /= blockMass[b];
    const ExplicitDist hb{static_cast<int>(off.size()), cond};
    for (int j = 1; j <= jMax; ++j) {
      const double sigmaJ = std::ldexp(1.0, -j);
      report.rhsTerms[static_cast<std::size_t>(j - 1)] +=
          blockMass[b] * restricted_mean_norm_expectation(hb, sigmaJ);
    }
  }
  report.rhsSum = std::accumulate(report.rhsTerms.begin(), report.rhsTerms.end(), 0.0);

  (void)cExponent;
  if (report.lhs > 0.0 && report.rhsSum > 0.0) {
    const double base = std::log2(n / report.lhs);
    if (base > 1.0 + 1e-9) {
      report.impliedExponent = std::log(report.lhs / report.rhsSum) / std::log(base);
    }
  }
  return report;
}

ProductTvBound product_tv_lower_bound(const ProductDist& p, double c1star, bool computeExact) {
  const int n = static_cast<int>(p.bias.size());
  std::vector<double> mu(p.bias.size());
  double norm2 = 0.0, normInf = 0.0;
  for (std::size_t i = 0; i < p.bias.size(); ++i) {
    mu[i] = 2.0 * p.bias[i] - 1.0;
    norm2 += mu[i] * mu[i];
    normInf = std::max(normInf, std::fabs(mu[i]));
  }
  norm2 = std::sqrt(norm2);

  ProductTvBound out;
  if (norm2 == 0.0) {
    out.bound = 0.0;
    out.exactTv = 0.0;
    out.holds = true;
    return out;
  }
  out.bound = (0.125 - c1star * normInf / norm2) * std::min(c2star(), norm2 / 4.0);

  if (computeExact) {
    if (n > 20) throw dimension_cap_error("product_tv_lower_bound: exact TV needs n <= 20");
    const std::size_t size = std::size_t{1} << n;
    const double u = 1.0 / static_cast<double>(size);
    double acc = 0.0;
    for (std::size_t idx = 0; idx < size; ++idx) {
      double v = 1.0;
      for (int i = 0; i < n; ++i) {
        v *= ((idx >> i) & 1u) ? p.bias[static_cast<std::size_t>(i)]
                               : 1.0 - p.bias[static_cast<std::size_t>(i)];
      }
      acc += std::fabs(v - u);
    }
    out.exactTv = 0.5 * acc;
    out.holds = *out.exactTv >= out.bound;
  } else {
    out.holds = true;
  }
  return out;
}

bool sigma_monotonicity_check(const ExplicitDist& h, double sigma1, double sigma2) {
  const int m = h.n;
  if (m > 6) throw dimension_cap_error("sigma_monotonicity_check: m > 6");
  if (!(sigma2 <= sigma1 && sigma1 <= 1.0 / m)) {
    throw std::invalid_argument("sigma_monotonicity_check: need sigma2 <= sigma1 <= 1/m");
  }
  const double lo = restricted_mean_norm_expectation(h, sigma2);
  const double hi = restricted_mean_norm_expectation(h, sigma1);
  return lo <= hi + 1e-12;
}

}  // namespace subcube
