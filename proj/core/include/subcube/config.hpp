#pragma once

#include <algorithm>
#include <cmath>

namespace subcube {

/// All universal constants the analysis leaves symbolic, plus the
/// down-scaling knobs used by desk-scale experiments. Defaults reproduce the
/// published parameter settings exactly.
///
/// Scaling contract (paper-exact at every default):
///  - budgetConstantScale s multiplies the two count constants (100 -> 100s
///    in t_a and s_a). To keep the empirical-mean margin scale-invariant the
///    acceptance threshold for a coordinate gains a factor s^{-1/2}; at
///    s = 1 this is the identity. The derived precision for the finder uses
///    eps0 = eps / (100 log2^3(k/eps))^s, the published value at s = 1 and
///    approaching eps as s -> 0.
///  - testerScale multiplies the round counts L and R of the junta tester
///    (L rounded to nearest so tiny scales can skip late blocks).
///  - testerEpsScale multiplies the 1600 constant inside eps*.
struct AlgoConfig {
  // relevant-vars
  double budgetConstantScale = 1.0;
  double learnConstant = 8.0;

  // mean-tester
  double meanTesterC = 1.0;
  double meanTesterA = 1.0 / 5000.0;  // recursion constant in tau_r
  long meanTesterQOverride = 0;       // > 0 forces q

  // junta-tester
  double testerScale = 1.0;
  double testerEpsScale = 1.0;
  double Rconstant = 1.0;
  double cExponent = 3.0;  // structural-lemma exponent

  // exact-oracles / hard-instances
  double c1star = 0.56;  // Berry-Esseen constant
  double zeta = 0.01;    // compression hypothesis knob

  int exactDimCap = 24;
};

/// log2 with the argument clamped below by 2, so every log is >= 1.
inline double log2c(double x) { return std::log2(std::max(x, 2.0)); }

inline double c2star() { return 1.0 - std::exp(-1.0); }

}  // namespace subcube
