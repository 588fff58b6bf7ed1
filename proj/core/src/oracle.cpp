#include "subcube/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace subcube {

CondOracle::CondOracle(DistributionSpec spec, Rng rng, UnsupportedPolicy policy)
    : spec_(std::move(spec)), rng_(std::move(rng)), policy_(policy) {
  if (spec_.is_explicit()) {
    const auto& pmf = spec_.as_explicit().pmf;
    cdf_.resize(pmf.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      acc += pmf[i];
      cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
  }
}

Sample CondOracle::uniform_on_subcube(const Restriction& rho) {
  Sample x(rho.cells().begin(), rho.cells().end());
  for (int i : rho.stars()) x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(rng_.uniform_sign());
  return x;
}

Sample CondOracle::sample() { return conditional_sample(Restriction::all_stars(dimension())); }

Sample CondOracle::conditional_sample(const Restriction& rho) {
  const int n = dimension();
  if (rho.dimension() != n) throw std::invalid_argument("conditional_sample: dimension mismatch");
  ++query_count_;

  switch (spec_.kind()) {
    case DistributionSpec::Kind::Product: {
      const auto& bias = spec_.as_product().bias;
      // Zero-mass only if a fixed cell contradicts a deterministic marginal.
      for (int i = 0; i < n; ++i) {
        if (rho.is_star(i)) continue;
        const double b = bias[static_cast<std::size_t>(i)];
        const double pv = (rho.value(i) == 1) ? b : 1.0 - b;
        if (pv == 0.0) {
          if (policy_ == UnsupportedPolicy::Error) throw oracle_error("zero-mass subcube");
          return uniform_on_subcube(rho);
        }
      }
      Sample x(rho.cells().begin(), rho.cells().end());
      for (int i : rho.stars()) {
        x[static_cast<std::size_t>(i)] = rng_.bernoulli(bias[static_cast<std::size_t>(i)]) ? 1 : -1;
      }
      return x;
    }

    case DistributionSpec::Kind::Junta: {
      const auto& j = spec_.as_junta();
      // Conditional weight of each inner assignment consistent with rho.
      std::vector<double> w(j.inner_pmf.size(), 0.0);
      double mass = 0.0;
      for (std::size_t idx = 0; idx < j.inner_pmf.size(); ++idx) {
        bool ok = true;
        for (std::size_t t = 0; t < j.vars.size(); ++t) {
          const int i = j.vars[t];
          if (rho.is_star(i)) continue;
          if (rho.value(i) != (((idx >> t) & 1u) ? 1 : -1)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          w[idx] = j.inner_pmf[idx];
          mass += w[idx];
        }
      }
      if (mass <= 0.0) {
        if (policy_ == UnsupportedPolicy::Error) throw oracle_error("zero-mass subcube");
        return uniform_on_subcube(rho);
      }
      double u = rng_.next_double() * mass;
      std::size_t pick = 0;
      for (std::size_t idx = 0; idx < w.size(); ++idx) {
        if (w[idx] <= 0.0) continue;
        u -= w[idx];
        pick = idx;
        if (u <= 0.0) break;
      }
      Sample x(rho.cells().begin(), rho.cells().end());
      for (std::size_t t = 0; t < j.vars.size(); ++t) {
        x[static_cast<std::size_t>(j.vars[t])] = ((pick >> t) & 1u) ? 1 : -1;
      }
      for (int i : rho.stars()) {
        if (!std::binary_search(j.vars.begin(), j.vars.end(), i)) {
          x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(rng_.uniform_sign());
        }
      }
      return x;
    }

    case DistributionSpec::Kind::Explicit: {
      const auto& pmf = spec_.as_explicit().pmf;
      if (rho.star_count() == n) {
        // Unconditioned path: inverse-cdf on the cached cumulative.
        const double u = rng_.next_double();
        const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
        const std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
        return sample_from_index(static_cast<std::uint32_t>(std::min(idx, pmf.size() - 1)), n);
      }
      double mass = 0.0;
      for (std::size_t idx = 0; idx < pmf.size(); ++idx) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (rho.is_star(i)) continue;
          if ((((idx >> i) & 1u) ? 1 : -1) != rho.value(i)) {
            ok = false;
            break;
          }
        }
        if (ok) mass += pmf[idx];
      }
      if (mass <= 0.0) {
        if (policy_ == UnsupportedPolicy::Error) throw oracle_error("zero-mass subcube");
        return uniform_on_subcube(rho);
      }
      double u = rng_.next_double() * mass;
      std::size_t last = 0;
      for (std::size_t idx = 0; idx < pmf.size(); ++idx) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (rho.is_star(i)) continue;
          if ((((idx >> i) & 1u) ? 1 : -1) != rho.value(i)) {
            ok = false;
            break;
          }
        }
        if (!ok || pmf[idx] <= 0.0) continue;
        u -= pmf[idx];
        last = idx;
        if (u <= 0.0) break;
      }
      return sample_from_index(static_cast<std::uint32_t>(last), n);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace subcube
