#pragma once

#include <vector>

#include "subcube/dist.hpp"
#include "subcube/hard_instances.hpp"
#include "subcube/oracle.hpp"
#include "subcube/rng.hpp"

namespace subcube::testutil {

inline DistributionSpec point_mass_all_ones(int n) {
  std::vector<double> pmf(std::size_t{1} << n, 0.0);
  pmf.back() = 1.0;
  return DistributionSpec::make_explicit(n, std::move(pmf));
}

/// Junta with one frozen coordinate (always +1).
inline DistributionSpec frozen_bit_junta(int n, int coord) {
  return DistributionSpec::make_junta(n, {coord}, {0.0, 1.0});
}

/// The parity distribution expressed as a junta over S, so conditional
/// sampling costs O(n) instead of a dense scan. Same law as
/// parity_instance(n, S, eps).
inline DistributionSpec parity_junta(int n, const std::vector<int>& S, double eps) {
  const int k = static_cast<int>(S.size());
  const std::size_t size = std::size_t{1} << k;
  std::vector<double> inner(size);
  const double hi = (1.0 + 4.0 * eps) / static_cast<double>(size);
  const double lo = (1.0 - 4.0 * eps) / static_cast<double>(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    const int minusOnes = k - __builtin_popcount(static_cast<unsigned>(idx));
    inner[idx] = (minusOnes % 2 == 0) ? hi : lo;
  }
  return DistributionSpec::make_junta(n, S, std::move(inner));
}

/// Random pmf from a flat Dirichlet (normalized exponentials).
inline DistributionSpec random_explicit(int n, Rng& rng) {
  std::vector<double> pmf(std::size_t{1} << n);
  double sum = 0.0;
  for (double& v : pmf) {
    double u;
    do {
      u = rng.next_double();
    } while (u <= 0.0);
    v = -std::log(u);
    sum += v;
  }
  for (double& v : pmf) v /= sum;
  return DistributionSpec::make_explicit(n, std::move(pmf));
}

}  // namespace subcube::testutil
