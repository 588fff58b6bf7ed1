#include "subcube/relevant_vars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "subcube/restriction_law.hpp"

namespace subcube {

namespace {

std::vector<int> complement(int n, const std::vector<int>& J) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int i : J) in[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - J.size());
  for (int i = 0; i < n; ++i) {
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

}  // namespace

double finder_eps0(int k, double eps, const AlgoConfig& cfg) {
  const double l = log2c(static_cast<double>(k) / eps);
  const double denom = std::pow(100.0 * l * l * l, cfg.budgetConstantScale);
  return eps / std::max(denom, 1.0);
}

long budget_pair_count(int k, double eps, int a, const AlgoConfig& cfg) {
  const double t = 100.0 * cfg.budgetConstantScale * std::ldexp(1.0, a) *
                   log2c(static_cast<double>(k) / eps);
  return static_cast<long>(std::ceil(t));
}

long budget_sample_count(int n, int k, double eps, int b, int a, const AlgoConfig& cfg) {
  (void)k;
  const double alpha = std::ldexp(1.0, -a);
  const double s = 100.0 * cfg.budgetConstantScale * (alpha * alpha * b / (eps * eps)) *
                   log2c(static_cast<double>(n) / eps);
  return static_cast<long>(std::ceil(s));
}

double budget_threshold(double eps, int b, double alpha, const AlgoConfig& cfg) {
  return eps / (2.0 * alpha * std::sqrt(static_cast<double>(b))) /
         std::sqrt(cfg.budgetConstantScale);
}

BudgetResult variables_budget(CondOracle& oracle, int k, double eps, int b,
                              const std::vector<int>& J, const AlgoConfig& cfg, Rng& rng) {
  if (b < 1) throw std::invalid_argument("variables_budget: b must be >= 1");
  if ((b & (b - 1)) != 0) throw std::invalid_argument("variables_budget: b must be a power of 2");
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("variables_budget: eps must lie in (0, 1/4]");
  }
  const int n = oracle.dimension();
  const std::vector<int> ground = complement(n, J);

  BudgetResult result;
  const int jMax = static_cast<int>(std::ceil(std::log2(2.0 * k)));
  const int aMax = std::max(0, static_cast<int>(std::floor(std::log2(std::sqrt(static_cast<double>(b)) / eps))));

  for (int j = 1; j <= jMax; ++j) {
    const double sigmaJ = std::ldexp(1.0, -j);  // sigma = 1/2 exactly, powered
    for (int a = 0; a <= aMax; ++a) {
      const double alpha = std::ldexp(1.0, -a);
      const long tPairs = budget_pair_count(k, eps, a, cfg);
      const long sSamples = budget_sample_count(n, k, eps, b, a, cfg);
      const double threshold = budget_threshold(eps, b, alpha, cfg);
      BudgetRound round{j, a, alpha, tPairs, sSamples, 0};

      for (long t = 0; t < tPairs; ++t) {
        const Restriction rho = sample_star_restriction(oracle, ground);
        const Restriction nu = sample_sigma_restriction(oracle, sigmaJ, rho, rng);
        const auto& stars = nu.stars();
        if (stars.empty()) continue;

        std::vector<long> sums(stars.size(), 0);
        for (long s = 0; s < sSamples; ++s) {
          const Sample x = oracle.conditional_sample(nu);
          for (std::size_t i = 0; i < stars.size(); ++i) {
            sums[i] += x[static_cast<std::size_t>(stars[i])];
          }
        }
        std::vector<int> crossing;
        std::vector<double> crossingMeans;
        for (std::size_t i = 0; i < stars.size(); ++i) {
          const double mean = static_cast<double>(sums[i]) / static_cast<double>(sSamples);
          if (std::fabs(mean) >= threshold) {
            crossing.push_back(stars[i]);
            crossingMeans.push_back(mean);
          }
        }
        if (static_cast<int>(crossing.size()) >= b) {
          // Order by decreasing magnitude, ties by lowest index.
          std::vector<std::size_t> order(crossing.size());
          std::iota(order.begin(), order.end(), std::size_t{0});
          std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const double mx = std::fabs(crossingMeans[x]);
            const double my = std::fabs(crossingMeans[y]);
            if (mx != my) return mx > my;
            return crossing[x] < crossing[y];
          });
          for (std::size_t idx : order) {
            result.coords.push_back(crossing[idx]);
            result.means.push_back(crossingMeans[idx]);
          }
          round.foundSize = static_cast<int>(result.coords.size());
          result.rounds.push_back(round);
          return result;
        }
      }
      result.rounds.push_back(round);
    }
  }
  return result;  // empty coords
}

FinderReport find_relevant_variables(CondOracle& oracle, int k, double eps,
                                     const AlgoConfig& cfg, Rng& rng) {
  if (k < 1) throw std::invalid_argument("find_relevant_variables: k must be >= 1");
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("find_relevant_variables: eps must lie in (0, 1/4]");
  }
  const std::uint64_t startQueries = oracle.query_count();
  const double eps0 = finder_eps0(k, eps, cfg);

  FinderReport report;
  std::vector<int>& J = report.J;
  long B = 0;

  while (static_cast<int>(J.size()) <= k) {
    int b = 1;
    bool grew = false;
    while (b <= 2 * k) {
      B += b;
      BudgetResult res = variables_budget(oracle, k, eps0, b, J, cfg, rng);
      report.log.insert(report.log.end(), res.rounds.begin(), res.rounds.end());
      if (static_cast<int>(res.coords.size()) >= b) {
        // Add exactly b elements of the crossing set, largest bias first.
        J.insert(J.end(), res.coords.begin(), res.coords.begin() + b);
        std::sort(J.begin(), J.end());
        grew = true;
        break;
      }
      b *= 2;
    }
    if (!grew) break;  // b > 2k: output J
  }

  report.budgetB = B;
  report.queries = oracle.query_count() - startQueries;
  return report;
}

DistributionSpec learn_junta(CondOracle& oracle, const std::vector<int>& J, double eps,
                             const AlgoConfig& cfg) {
  if (static_cast<int>(J.size()) > kExactDimCap) {
    throw dimension_cap_error("learn_junta: |J| exceeds exact cap");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("learn_junta: eps must lie in (0,1)");
  std::vector<int> vars = J;
  std::sort(vars.begin(), vars.end());

  const long m = static_cast<long>(
      std::ceil(cfg.learnConstant * std::ldexp(1.0, static_cast<int>(vars.size())) / (eps * eps)));
  std::vector<double> counts(std::size_t{1} << vars.size(), 0.0);
  for (long s = 0; s < m; ++s) {
    const Sample x = oracle.sample();
    std::uint32_t idx = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if (x[static_cast<std::size_t>(vars[t])] == 1) idx |= (1u << t);
    }
    counts[idx] += 1.0;
  }
  for (double& c : counts) c /= static_cast<double>(m);
  return DistributionSpec::make_junta(oracle.dimension(), std::move(vars), std::move(counts));
}

}  // namespace subcube
