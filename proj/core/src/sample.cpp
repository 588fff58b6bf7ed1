#include "subcube/sample.hpp"

#include <stdexcept>

namespace subcube {

std::uint32_t sample_to_index(const Sample& x) {
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 1) idx |= (1u << i);
  }
  return idx;
}

Sample sample_from_index(std::uint32_t idx, int n) {
  Sample x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = (idx >> i) & 1u ? 1 : -1;
  }
  return x;
}

Restriction Restriction::all_stars(int n) {
  return Restriction(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0));
}

Restriction::Restriction(std::vector<std::int8_t> cells) : cells_(std::move(cells)) {
  stars_.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const std::int8_t c = cells_[i];
    if (c == 0) {
      stars_.push_back(static_cast<int>(i));
    } else if (c != 1 && c != -1) {
      throw std::invalid_argument("Restriction: cells must be -1, +1 or 0 (star)");
    }
  }
}

bool Restriction::consistent(const Sample& x) const {
  if (x.size() != cells_.size()) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] != 0 && cells_[i] != x[i]) return false;
  }
  return true;
}

Restriction Restriction::compose(const Restriction& sub) const {
  if (sub.dimension() != star_count()) {
    throw std::invalid_argument("Restriction::compose: sub-restriction dimension mismatch");
  }
  std::vector<std::int8_t> out = cells_;
  for (std::size_t t = 0; t < stars_.size(); ++t) {
    out[static_cast<std::size_t>(stars_[t])] = sub.cells()[t];
  }
  return Restriction(std::move(out));
}

}  // namespace subcube
