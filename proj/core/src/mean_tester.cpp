#include "subcube/mean_tester.hpp"

#include <cmath>
#include <stdexcept>

namespace subcube {

MeanTestPlan make_plan(int n, int k, double eps, const AlgoConfig& cfg) {
  if (n < 2) throw std::invalid_argument("make_plan: n must be >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("make_plan: eps must lie in (0,1)");
  MeanTestPlan plan;
  plan.n = n;
  plan.k = k;
  plan.eps = eps;
  plan.a = cfg.meanTesterA;

  if (cfg.meanTesterQOverride > 0) {
    plan.q = cfg.meanTesterQOverride;
  } else {
    const double sn = std::sqrt(static_cast<double>(n));
    const double branch1 = (k + sn) / (eps * eps * n);
    const double branch2 = (1.0 + k / sn) / eps;
    plan.q = static_cast<long>(std::ceil(cfg.meanTesterC * std::max(branch1, branch2)));
    if (plan.q < 1) plan.q = 1;
  }

  plan.r0 = n < 4 ? 0 : static_cast<int>(std::ceil(std::log2(std::log2(static_cast<double>(n)))));

  plan.tau.resize(static_cast<std::size_t>(plan.r0) + 1);
  plan.tau[0] = eps * eps * n / 2.0;
  const double q2 = static_cast<double>(plan.q) * static_cast<double>(plan.q);
  for (int r = 1; r <= plan.r0; ++r) {
    plan.tau[static_cast<std::size_t>(r)] =
        plan.a * q2 * plan.tau[static_cast<std::size_t>(r - 1)] * plan.tau[static_cast<std::size_t>(r - 1)];
  }
  return plan;
}

double tau_closed_form(const MeanTestPlan& plan, int r) {
  const double aq2 = plan.a * static_cast<double>(plan.q) * static_cast<double>(plan.q);
  return (1.0 / aq2) * std::pow(aq2 * plan.eps * plan.eps * plan.n / 2.0, std::ldexp(1.0, r));
}

GramMatrix gram_matrix(const std::vector<Sample>& X, const std::vector<Sample>& Y) {
  if (X.empty() || X.size() != Y.size()) {
    throw std::invalid_argument("gram_matrix: need equal non-empty sample sets");
  }
  const long q = static_cast<long>(X.size());
  const std::size_t n = X.front().size();
  for (const auto& s : X) {
    if (s.size() != n) throw std::invalid_argument("gram_matrix: ragged samples");
  }
  for (const auto& s : Y) {
    if (s.size() != n) throw std::invalid_argument("gram_matrix: ragged samples");
  }
  GramMatrix gram;
  gram.q = q;
  gram.n = static_cast<int>(n);
  gram.m.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (long i = 0; i < q; ++i) {
    const auto& xi = X[static_cast<std::size_t>(i)];
    for (long j = 0; j < q; ++j) {
      const auto& yj = Y[static_cast<std::size_t>(j)];
      std::int64_t dot = 0;
      for (std::size_t t = 0; t < n; ++t) {
        dot += static_cast<std::int64_t>(xi[t]) * static_cast<std::int64_t>(yj[t]);
      }
      gram.m[static_cast<std::size_t>(i * q + j)] = dot;
    }
  }
  return gram;
}

namespace {

// Whether |m|^(2^r) summed q^2 times fits comfortably in __int128.
bool fits_int128(int n, long q, int r) {
  if (n <= 1) return true;
  const double bits = std::ldexp(1.0, r) * std::log2(static_cast<double>(n)) +
                      2.0 * std::log2(static_cast<double>(q) + 1.0);
  return bits < 120.0;
}

}  // namespace

double z_statistic(const GramMatrix& gram, int r) {
  if (r < 0) throw std::invalid_argument("z_statistic: r must be >= 0");
  const long q = gram.q;
  const long power = 1L << r;
  if (fits_int128(gram.n, q, r)) {
    __int128 acc = 0;
    for (std::int64_t v : gram.m) {
      __int128 p = 1;
      for (long t = 0; t < power; ++t) p *= v;
      acc += p;
    }
    return static_cast<double>(static_cast<long double>(acc)) /
           (static_cast<double>(q) * static_cast<double>(q));
  }
  // Compensated (Kahan) summation in doubles.
  double sum = 0.0, comp = 0.0;
  for (std::int64_t v : gram.m) {
    double p = 1.0;
    for (long t = 0; t < power; ++t) p *= static_cast<double>(v);
    const double y = p - comp;
    const double t2 = sum + y;
    comp = (t2 - sum) - y;
    sum = t2;
  }
  return sum / (static_cast<double>(q) * static_cast<double>(q));
}

MeanVerdict robust_mean_test(const std::function<Sample()>& source, const MeanTestPlan& plan) {
  std::vector<Sample> X, Y;
  X.reserve(static_cast<std::size_t>(plan.q));
  Y.reserve(static_cast<std::size_t>(plan.q));
  for (long i = 0; i < plan.q; ++i) X.push_back(source());
  for (long i = 0; i < plan.q; ++i) Y.push_back(source());
  const GramMatrix gram = gram_matrix(X, Y);
  for (int r = 0; r <= plan.r0; ++r) {
    if (z_statistic(gram, r) > plan.tau[static_cast<std::size_t>(r)]) {
      return MeanVerdict::NotJunta;
    }
  }
  return MeanVerdict::IsJunta;
}

MeanVerdict robust_mean_test(const std::vector<Sample>& samples, const MeanTestPlan& plan) {
  if (static_cast<long>(samples.size()) != 2 * plan.q) {
    throw std::invalid_argument("robust_mean_test: need exactly 2q samples");
  }
  std::size_t next = 0;
  return robust_mean_test(
      std::function<Sample()>([&samples, &next]() { return samples[next++]; }), plan);
}

}  // namespace subcube
