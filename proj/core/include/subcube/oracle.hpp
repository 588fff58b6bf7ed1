#pragma once

#include <cstdint>
#include <stdexcept>

#include "subcube/dist.hpp"
#include "subcube/rng.hpp"

namespace subcube {

class oracle_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Behavior when a query conditions on a zero-mass subcube. UniformFallback
/// returns a point drawn uniformly from the subcube; Error throws. The
/// algorithms here only query restrictions built from previously drawn
/// samples, so tests run them under Error to assert that property.
enum class UnsupportedPolicy { UniformFallback, Error };

/// Query-counting wrapper exposing only subcube conditional sampling over a
/// hidden DistributionSpec. Single-owner mutable state: move it between
/// threads, never share it; parallel trials use split rng streams.
class CondOracle {
 public:
  CondOracle(DistributionSpec spec, Rng rng,
             UnsupportedPolicy policy = UnsupportedPolicy::UniformFallback);

  /// One subcube conditioning query. The returned sample agrees with rho on
  /// every non-star coordinate; star coordinates follow the conditional law.
  Sample conditional_sample(const Restriction& rho);

  /// Unconditioned draw (the all-star query).
  Sample sample();

  std::uint64_t query_count() const { return query_count_; }
  int dimension() const { return spec_.dimension(); }
  const DistributionSpec& spec() const { return spec_; }
  UnsupportedPolicy policy() const { return policy_; }

 private:
  Sample uniform_on_subcube(const Restriction& rho);

  DistributionSpec spec_;
  Rng rng_;
  UnsupportedPolicy policy_;
  std::uint64_t query_count_ = 0;
  std::vector<double> cdf_;  // cached cumulative pmf for explicit specs
};

}  // namespace subcube
