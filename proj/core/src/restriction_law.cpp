#include "subcube/restriction_law.hpp"

#include <stdexcept>

namespace subcube {

std::vector<int> sample_subset(const StarSubsetLaw& law, Rng& rng) {
  if (!(law.sigma > 0.0 && law.sigma < 1.0)) {
    throw std::invalid_argument("sample_subset: sigma must lie in (0,1)");
  }
  std::vector<int> out;
  out.reserve(law.ground.size());
  for (int i : law.ground) {
    if (rng.bernoulli(law.sigma)) out.push_back(i);
  }
  return out;
}

Restriction sample_star_restriction(CondOracle& oracle, const std::vector<int>& S) {
  const int n = oracle.dimension();
  const Sample x = oracle.sample();
  std::vector<std::int8_t> cells(x.begin(), x.end());
  for (int i : S) {
    if (i < 0 || i >= n) throw std::invalid_argument("sample_star_restriction: index outside [n]");
    cells[static_cast<std::size_t>(i)] = 0;
  }
  return Restriction(std::move(cells));
}

Restriction sample_sigma_restriction(CondOracle& oracle, double sigma, const Restriction& base,
                                     Rng& rng) {
  const Sample x = oracle.conditional_sample(base);
  if (base.star_count() == 0) return base;
  // x agrees with base off its stars, so starting from x keeps base's fixed
  // cells; stars(base)\S stay fixed to x.
  std::vector<std::int8_t> cells(x.begin(), x.end());
  for (int i : base.stars()) {
    if (rng.bernoulli(sigma)) cells[static_cast<std::size_t>(i)] = 0;
  }
  return Restriction(std::move(cells));
}

}  // namespace subcube
