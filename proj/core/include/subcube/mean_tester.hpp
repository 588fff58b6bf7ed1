#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subcube/config.hpp"
#include "subcube/sample.hpp"

namespace subcube {

/// Parameters of one robust mean test: 2q samples, tensor orders 0..r0,
/// thresholds tau[r]. tau follows the recursion tau_r = a q^2 tau_{r-1}^2
/// from tau_0 = eps^2 n / 2; n and k are the ambient parameters the
/// thresholds were derived for (samples fed to the test may have lower
/// dimension after restrictions).
struct MeanTestPlan {
  int n = 0;
  int k = 0;
  double eps = 0.0;
  long q = 1;
  int r0 = 0;
  double a = 1.0 / 5000.0;
  std::vector<double> tau;
};

MeanTestPlan make_plan(int n, int k, double eps, const AlgoConfig& cfg);

/// Closed form (1/(a q^2)) (a q^2 eps^2 n / 2)^(2^r); the recursion must
/// agree with it to relative 1e-9.
double tau_closed_form(const MeanTestPlan& plan, int r);

/// q x q matrix of exact inner products M[i][j] = <X_i, Y_j>.
struct GramMatrix {
  long q = 0;
  int n = 0;  // sample length
  std::vector<std::int64_t> m;  // row-major q*q
  std::int64_t at(long i, long j) const { return m[static_cast<std::size_t>(i * q + j)]; }
};

GramMatrix gram_matrix(const std::vector<Sample>& X, const std::vector<Sample>& Y);

/// Z^(r) = (1/q^2) sum_{i,j} M_ij^(2^r). Exact 128-bit accumulation when the
/// powers fit, compensated double summation otherwise.
double z_statistic(const GramMatrix& gram, int r);

enum class MeanVerdict { IsJunta, NotJunta };

/// Draws 2q samples from the source and reports NotJunta at the first tensor
/// order r with Z^(r) > tau_r. Consumes exactly 2q samples.
MeanVerdict robust_mean_test(const std::function<Sample()>& source, const MeanTestPlan& plan);

/// Same test on a pre-drawn list of exactly 2q samples (X then Y).
MeanVerdict robust_mean_test(const std::vector<Sample>& samples, const MeanTestPlan& plan);

}  // namespace subcube
