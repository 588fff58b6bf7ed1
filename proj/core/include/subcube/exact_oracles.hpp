#pragma once

#include <optional>
#include <vector>

#include "subcube/dist.hpp"

namespace subcube {

/// Minimum TV distance from p to any junta distribution over J, by bisection
/// on the Lagrange multiplier of the simplex constraint. Exact to ~1e-10.
/// Requires n <= 12.
double closest_junta_distance(const ExplicitDist& p, const std::vector<int>& J);

/// Minimum of closest_junta_distance over all J of size k. Requires n <= 10,
/// k <= 4.
double distance_to_k_junta(const ExplicitDist& p, int k);

/// Distance to the canonical junta q over J (q_J = p_J, uniform off J),
/// evaluated two independent ways: directly on the pmfs, and as
/// E_{rho ~ D_Jbar(p)}[ dtv(p_|rho, U) ].
struct CanonicalDistance {
  double viaPmf = 0.0;
  double viaRestrictions = 0.0;
};
CanonicalDistance canonical_junta_distance(const ExplicitDist& p, const std::vector<int>& J);

/// Exact E_{nu ~ D_sigma(h)} [ ||mu(h_|nu)||_2 ] by enumerating star sets
/// with their binomial probabilities and fixed parts with their marginals.
double restricted_mean_norm_expectation(const ExplicitDist& h, double sigma);

/// Exact audit of the structural inequality: LHS is the true closest-junta
/// distance over J; the RHS terms are the per-j double expectations of the
/// restricted mean norms at sigma = 1/2. Requires n <= 6.
struct AuditReport {
  double lhs = 0.0;
  std::vector<double> rhsTerms;
  double rhsSum = 0.0;
  std::optional<double> impliedExponent;
};
AuditReport structural_audit(const ExplicitDist& p, const std::vector<int>& J, double cExponent);

/// Lower bound (1/8 - c1* ||mu||_inf/||mu||_2) min(c2*, ||mu||_2/4) on the
/// distance of a product distribution from uniform, with c2* = 1 - 1/e.
/// exactTv is enumerated when requested and n <= 20.
struct ProductTvBound {
  double bound = 0.0;
  std::optional<double> exactTv;
  bool holds = true;
};
ProductTvBound product_tv_lower_bound(const ProductDist& p, double c1star,
                                      bool computeExact = true);

/// Exact check that E ||mu(h_|nu)||_2 under D_sigma2 is at most the same
/// expectation under D_sigma1, for sigma2 <= sigma1 <= 1/m, m <= 6.
bool sigma_monotonicity_check(const ExplicitDist& h, double sigma1, double sigma2);

}  // namespace subcube
