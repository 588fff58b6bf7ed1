#include "subcube/junta_tester.hpp"

#include <cmath>
#include <stdexcept>

#include "subcube/restriction_law.hpp"

namespace subcube {

namespace {

long ceil_to_odd(double x) {
  long v = static_cast<long>(std::ceil(x));
  if (v < 1) v = 1;
  return (v % 2 == 0) ? v + 1 : v;
}

}  // namespace

TestPlan make_test_plan(int n, int k, double eps, const AlgoConfig& cfg) {
  if (!(eps > 0.0 && eps <= 0.25)) {
    throw std::invalid_argument("make_test_plan: eps must lie in (0, 1/4]");
  }
  (void)k;
  TestPlan plan;
  const double jCeil = std::ceil(std::log2(2.0 * n));
  plan.jMax = static_cast<int>(jCeil);
  plan.epsPrime = eps / (jCeil * std::pow(log2c(n / eps), cfg.cExponent));
  plan.rLevels =
      static_cast<int>(std::ceil(std::log2(2.0 * std::sqrt(static_cast<double>(n)) / plan.epsPrime)));
  plan.epsStar = plan.epsPrime / (1600.0 * cfg.testerEpsScale * plan.rLevels);
  plan.R = ceil_to_odd(cfg.testerScale * cfg.Rconstant * log2c(n / plan.epsPrime));
  plan.L.resize(static_cast<std::size_t>(plan.rLevels));
  for (int ell = 1; ell <= plan.rLevels; ++ell) {
    const double base =
        4.0 * plan.rLevels * std::sqrt(static_cast<double>(n)) / (std::ldexp(1.0, ell) * plan.epsPrime);
    plan.L[static_cast<std::size_t>(ell - 1)] = std::lround(cfg.testerScale * base);
  }
  return plan;
}

TestReport test_junta(CondOracle& oracle, int k, double eps, const AlgoConfig& cfg, Rng& rng) {
  const int n = oracle.dimension();
  TestReport report;
  report.plan = make_test_plan(n, k, eps, cfg);
  const TestPlan& plan = report.plan;
  const std::uint64_t startQueries = oracle.query_count();

  const double finderEps = std::min(plan.epsStar, 0.25);
  Rng finderRng = rng.split(1);
  const FinderReport finder = find_relevant_variables(oracle, k, finderEps, cfg, finderRng);
  report.J = finder.J;
  report.finderQueries = finder.queries;

  if (static_cast<int>(report.J.size()) > k) {
    report.accept = false;
    report.totalQueries = oracle.query_count() - startQueries;
    return report;
  }

  std::vector<int> ground;
  {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int i : report.J) in[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < n; ++i) {
      if (!in[static_cast<std::size_t>(i)]) ground.push_back(i);
    }
  }

  Rng blockRng = rng.split(2);
  bool accept = true;
  for (int j = 1; j <= plan.jMax && accept; ++j) {
    const double sigmaJ = std::ldexp(1.0, -j);
    for (int ell = 1; ell <= plan.rLevels && accept; ++ell) {
      const long L = plan.L[static_cast<std::size_t>(ell - 1)];
      if (L == 0) continue;
      const MeanTestPlan meanPlan = make_plan(n, k, std::ldexp(1.0, -ell), cfg);
      BlockTally tally{j, ell, L * plan.R, 0};

      for (long round = 0; round < L * plan.R; ++round) {
        const Restriction rho = sample_star_restriction(oracle, ground);
        const Restriction nu = sample_sigma_restriction(oracle, sigmaJ, rho, blockRng);
        const auto& stars = nu.stars();

        long notJunta = 0;
        for (long rep = 0; rep < plan.R; ++rep) {
          const auto source = [&]() {
            const Sample full = oracle.conditional_sample(nu);
            Sample restricted(stars.size());
            for (std::size_t t = 0; t < stars.size(); ++t) {
              restricted[t] = full[static_cast<std::size_t>(stars[t])];
            }
            return restricted;
          };
          ++report.meanTesterRuns;
          if (stars.empty()) {
            // Everything is fixed: the restricted law is a point mass on the
            // empty string; nothing to test, counts as IsJunta.
            for (long s = 0; s < 2 * meanPlan.q; ++s) (void)oracle.conditional_sample(nu);
            continue;
          }
          if (robust_mean_test(std::function<Sample()>(source), meanPlan) ==
              MeanVerdict::NotJunta) {
            ++notJunta;
          }
        }
        if (2 * notJunta >= plan.R) ++tally.notJuntaMajorities;  // ties reject
      }

      if (2 * tally.notJuntaMajorities >= plan.R) accept = false;
      report.blocks.push_back(tally);
    }
  }

  report.accept = accept;
  report.totalQueries = oracle.query_count() - startQueries;
  return report;
}

}  // namespace subcube
