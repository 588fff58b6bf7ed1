#pragma once

#include <vector>

#include "subcube/oracle.hpp"

namespace subcube {

/// S_sigma(T): includes each element of the ground set independently with
/// probability sigma.
struct StarSubsetLaw {
  std::vector<int> ground;
  double sigma = 0.5;
};

std::vector<int> sample_subset(const StarSubsetLaw& law, Rng& rng);

/// One draw from D_S(p): a single unconditioned query x ~ p; the result has
/// stars exactly on S and is fixed to x elsewhere. Costs exactly 1 query.
Restriction sample_star_restriction(CondOracle& oracle, const std::vector<int>& S);

/// One draw from D_sigma(p_|base) composed back over base: a single query
/// x ~ p_|base, a subset S ~ S_sigma(stars(base)) drawn from rng; the result
/// keeps base's fixed cells, fixes stars(base)\S to x, and stars S. Costs
/// exactly 1 query. A base with no stars is returned unchanged (the query is
/// still made).
Restriction sample_sigma_restriction(CondOracle& oracle, double sigma, const Restriction& base,
                                     Rng& rng);

}  // namespace subcube
