#include "subcube/hard_instances.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace subcube {

namespace mp = boost::multiprecision;

int gadget_order(int n) {
  if (n < 4) throw std::invalid_argument("gadget_order: n must be >= 4");
  const double l = std::log2(static_cast<double>(n)) / std::log2(std::log2(static_cast<double>(n)));
  return std::max(1, static_cast<int>(std::ceil(l)));
}

double gadget_weight_exact(int ell, int i) {
  if (ell > 12) throw std::invalid_argument("gadget_weight_exact: ell > 12");
  mp::cpp_rational z = 1;
  const long ai = static_cast<long>(i) * i * i;
  for (int j = 1; j <= ell; ++j) {
    if (j == i) continue;
    const long aj = static_cast<long>(j) * j * j;
    z *= mp::cpp_rational(aj, aj - ai);
  }
  return static_cast<double>(z);
}

double gadget_weight(int ell, int i) {
  // Kahan-style product in log space is overkill; alternating signs live in
  // the denominator only, so track sign and sum logs.
  double logAbs = 0.0;
  int sign = 1;
  const double ai = static_cast<double>(i) * i * i;
  for (int j = 1; j <= ell; ++j) {
    if (j == i) continue;
    const double aj = static_cast<double>(j) * j * j;
    const double d = aj - ai;
    logAbs += std::log(std::fabs(aj / d));
    if (d < 0) sign = -sign;
  }
  return sign * std::exp(logAbs);
}

MomentGadget build_gadget(int n, double eps) {
  if (n < 4) throw std::invalid_argument("build_gadget: n must be >= 4");
  if (!(eps > 0.0)) throw std::invalid_argument("build_gadget: eps must be positive");
  MomentGadget g;
  g.ell = gadget_order(n);
  g.eps = eps;
  g.alpha.resize(static_cast<std::size_t>(g.ell));
  g.z.resize(static_cast<std::size_t>(g.ell));
  for (int j = 1; j <= g.ell; ++j) {
    g.alpha[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * j * j;
    g.z[static_cast<std::size_t>(j - 1)] =
        g.ell <= 12 ? gadget_weight_exact(g.ell, j) : gadget_weight(g.ell, j);
    if (g.z[static_cast<std::size_t>(j - 1)] >= 0.0) {
      g.W.push_back(j);
    } else {
      g.V.push_back(j);
    }
    g.zL1 += std::fabs(g.z[static_cast<std::size_t>(j - 1)]);
  }
  const double ell3 = static_cast<double>(g.ell) * g.ell * g.ell;
  g.tau = std::min(36.0 * std::sqrt(g.zL1) * eps,
                   std::sqrt(static_cast<double>(n)) / (2.0 * ell3));
  return g;
}

namespace {

DistributionSpec sample_biases(const MomentGadget& g, int n, Rng& rng, const std::vector<int>& part,
                               bool negate) {
  // Coordinate law: 0 with the leftover mass, alpha_j = j^3 with weight
  // |z_j| / ||z||_1 over the chosen sign class.
  std::vector<double> weights;
  double nonzeroMass = 0.0;
  for (int j : part) {
    const double w = (negate ? -g.z[static_cast<std::size_t>(j - 1)]
                             : g.z[static_cast<std::size_t>(j - 1)]) /
                     g.zL1;
    weights.push_back(w);
    nonzeroMass += w;
  }
  const double sn = std::sqrt(static_cast<double>(n));
  std::vector<double> bias(static_cast<std::size_t>(n), 0.5);
  for (int i = 0; i < n; ++i) {
    double u = rng.next_double();
    double value = 0.0;
    if (u < nonzeroMass) {
      for (std::size_t t = 0; t < part.size(); ++t) {
        u -= weights[t];
        if (u < 0.0) {
          value = g.alpha[static_cast<std::size_t>(part[t] - 1)];
          break;
        }
      }
    }
    const double b = 0.5 + value * g.tau / sn;
    if (!(b >= 0.0 && b <= 1.0)) throw std::logic_error("sample bias escaped [0,1]");
    bias[static_cast<std::size_t>(i)] = b;
  }
  return DistributionSpec::make_product(std::move(bias));
}

}  // namespace

DistributionSpec sample_dno(const MomentGadget& g, int n, Rng& rng) {
  return sample_biases(g, n, rng, g.W, /*negate=*/false);
}

DistributionSpec sample_dyes(const MomentGadget& g, int n, Rng& rng) {
  return sample_biases(g, n, rng, g.V, /*negate=*/true);
}

double gamma_moment(const MomentGadget& g, int k) {
  double acc = 0.0;
  for (int j : g.W) {
    acc += (g.z[static_cast<std::size_t>(j - 1)] / g.zL1) *
           std::pow(g.alpha[static_cast<std::size_t>(j - 1)], k);
  }
  return acc;
}

double delta_moment(const MomentGadget& g, int k) {
  double acc = 0.0;
  for (int j : g.V) {
    acc += (-g.z[static_cast<std::size_t>(j - 1)] / g.zL1) *
           std::pow(g.alpha[static_cast<std::size_t>(j - 1)], k);
  }
  return acc;
}

double moment_check(const MomentGadget& g, int kMax) {
  if (kMax > g.ell - 1) throw std::invalid_argument("moment_check: kMax must be <= ell-1");
  double worst = 0.0;
  for (int k = 1; k <= kMax; ++k) {
    const double gm = gamma_moment(g, k);
    const double dm = delta_moment(g, k);
    worst = std::max(worst, std::fabs(dm - gm) / std::max(1.0, gm));
  }
  return worst;
}

DistributionSpec parity_instance(int n, const std::vector<int>& S, double eps) {
  if (S.empty()) throw std::invalid_argument("parity_instance: S must be non-empty");
  if (!(eps > 0.0 && eps <= 0.125)) {
    throw std::invalid_argument("parity_instance: eps must lie in (0, 1/8]");
  }
  if (n > kExactDimCap) throw dimension_cap_error("parity_instance: n exceeds exact cap");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> pmf(size);
  const double hi = (1.0 + 4.0 * eps) / static_cast<double>(size);
  const double lo = (1.0 - 4.0 * eps) / static_cast<double>(size);
  std::uint32_t mask = 0;
  for (int i : S) {
    if (i < 0 || i >= n) throw std::invalid_argument("parity_instance: index outside [n]");
    mask |= (1u << i);
  }
  for (std::size_t idx = 0; idx < size; ++idx) {
    // prod_{i in S} x_i = 1 iff the number of -1s over S is even, i.e. the
    // number of +1 bits over S has the same parity as |S|.
    const int ones = __builtin_popcount(static_cast<std::uint32_t>(idx) & mask);
    const bool parityOne = ((static_cast<int>(S.size()) - ones) % 2) == 0;
    pmf[idx] = parityOne ? hi : lo;
  }
  return DistributionSpec::make_explicit(n, std::move(pmf));
}

DistributionSpec pmf_instance_from_boolean(const std::vector<int>& truthTable, double eps, int n) {
  const std::size_t tableSize = truthTable.size();
  if (tableSize == 0 || (tableSize & (tableSize - 1)) != 0) {
    throw std::invalid_argument("pmf_instance_from_boolean: table length must be a power of 2");
  }
  int k = 0;
  while ((std::size_t{1} << k) < tableSize) ++k;
  if (n < k) throw std::invalid_argument("pmf_instance_from_boolean: n < k");
  if (n > kExactDimCap) throw dimension_cap_error("pmf_instance_from_boolean: n exceeds cap");
  if (!(eps > 0.0 && eps <= 1.0 / 120.0)) {
    throw std::invalid_argument("pmf_instance_from_boolean: eps must lie in (0, 1/120]");
  }
  long ones = 0;
  for (int v : truthTable) {
    if (v != 1 && v != -1) throw std::invalid_argument("pmf_instance_from_boolean: entries must be +-1");
    if (v == 1) ++ones;
  }
  const double twoK = std::ldexp(1.0, k);
  if (!(3 * ones >= static_cast<long>(twoK) && 3 * ones <= 2 * static_cast<long>(twoK))) {
    throw std::invalid_argument("pmf_instance_from_boolean: truth table is not good");
  }
  const double onBranch = 1.0 + 40.0 * eps * twoK / static_cast<double>(ones);
  const double offBranch = 1.0 - 40.0 * eps * twoK / (twoK - static_cast<double>(ones));

  const std::size_t size = std::size_t{1} << n;
  std::vector<double> pmf(size);
  const double base = 1.0 / static_cast<double>(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    const std::size_t inner = idx & (tableSize - 1);  // junta over the first k coordinates
    pmf[idx] = base * (truthTable[inner] == 1 ? onBranch : offBranch);
  }
  return DistributionSpec::make_explicit(n, std::move(pmf));
}

}  // namespace subcube
