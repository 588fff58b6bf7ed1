#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "subcube/sample.hpp"

namespace subcube {

/// Hard cap on the dimension of dense-pmf operations.
inline constexpr int kExactDimCap = 24;

/// Relative pmf-sum deviation that is silently renormalized on load.
inline constexpr double kRenormalizeTolerance = 1e-9;
/// Post-normalization invariant tolerance.
inline constexpr double kPmfSumTolerance = 1e-12;

struct ExplicitDist {
  int n = 0;
  std::vector<double> pmf;  // length 2^n, indexed per sample_to_index
};

struct ProductDist {
  std::vector<double> bias;  // bias[i] = Pr[x_i = +1]
};

struct JuntaDist {
  int n = 0;
  std::vector<int> vars;          // relevant coordinates, 0-based, increasing
  std::vector<double> inner_pmf;  // explicit pmf over {-1,1}^vars
};

class dimension_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An Explicit, Product or Junta distribution over {-1,1}^n.
class DistributionSpec {
 public:
  enum class Kind { Explicit, Product, Junta };

  static DistributionSpec uniform(int n);
  static DistributionSpec make_explicit(int n, std::vector<double> pmf);
  static DistributionSpec make_product(std::vector<double> bias);
  static DistributionSpec make_junta(int n, std::vector<int> vars, std::vector<double> inner_pmf);

  Kind kind() const;
  int dimension() const;

  bool is_explicit() const { return kind() == Kind::Explicit; }
  const ExplicitDist& as_explicit() const { return std::get<ExplicitDist>(rep_); }
  const ProductDist& as_product() const { return std::get<ProductDist>(rep_); }
  const JuntaDist& as_junta() const { return std::get<JuntaDist>(rep_); }

  ExplicitDist to_explicit(int cap = kExactDimCap) const;

  /// Exact mean vector; for Product, mu_i = 2 bias_i - 1.
  std::vector<double> mean_vector() const;

  /// Pmf value at a point (explicit-convertible kinds evaluate directly).
  double mass_at(const Sample& x) const;

  /// Total probability of the subcube fixed by rho's non-star cells.
  double subcube_mass(const Restriction& rho) const;

 private:
  explicit DistributionSpec(std::variant<ExplicitDist, ProductDist, JuntaDist> rep)
      : rep_(std::move(rep)) {}
  std::variant<ExplicitDist, ProductDist, JuntaDist> rep_;
};

/// p conditioned on rho, re-indexed onto stars(rho). Throws on zero subcube
/// mass or when the exact-dimension cap is exceeded.
DistributionSpec restrict_exact(const DistributionSpec& p, const Restriction& rho,
                                int cap = kExactDimCap);

/// Marginal of p on the coordinates outside of S (increasing order).
DistributionSpec project_exact(const DistributionSpec& p, const std::vector<int>& S,
                               int cap = kExactDimCap);

/// (1/2) sum_x |p(x) - q(x)| over the common domain.
double tv_distance(const DistributionSpec& p, const DistributionSpec& q,
                   int cap = kExactDimCap);
double tv_distance(const ExplicitDist& p, const ExplicitDist& q);

/// Coordinate-wise average of a non-empty batch of equal-length samples.
std::vector<double> empirical_mean(const std::vector<Sample>& samples);

}  // namespace subcube
