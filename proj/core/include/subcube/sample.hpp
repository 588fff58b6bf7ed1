#pragma once

#include <cstdint>
#include <vector>

namespace subcube {

/// One draw from a distribution over {-1,+1}^n.
using Sample = std::vector<std::int8_t>;

/// Dense pmf index of a sample: +1 -> bit 1, -1 -> bit 0, coordinate 0 is
/// the least significant bit.
std::uint32_t sample_to_index(const Sample& x);
Sample sample_from_index(std::uint32_t idx, int n);

/// A string over {-1,+1,*}^n; stars are stored as 0. The star set (indices
/// of * cells, increasing) is cached at construction.
class Restriction {
 public:
  static Restriction all_stars(int n);

  explicit Restriction(std::vector<std::int8_t> cells);

  int dimension() const { return static_cast<int>(cells_.size()); }
  const std::vector<int>& stars() const { return stars_; }
  int star_count() const { return static_cast<int>(stars_.size()); }
  bool is_star(int i) const { return cells_[static_cast<std::size_t>(i)] == 0; }
  std::int8_t value(int i) const { return cells_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int8_t>& cells() const { return cells_; }

  bool consistent(const Sample& x) const;

  /// Compose with a restriction over this restriction's star coordinates
  /// (sub.dimension() == star_count()). The result is full-length; its star
  /// set is sub's star set re-indexed into [n].
  Restriction compose(const Restriction& sub_over_stars) const;

  bool operator==(const Restriction&) const = default;

 private:
  std::vector<std::int8_t> cells_;
  std::vector<int> stars_;
};

}  // namespace subcube
