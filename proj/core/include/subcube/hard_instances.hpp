#pragma once

#include <vector>

#include "subcube/dist.hpp"
#include "subcube/rng.hpp"

namespace subcube {

/// The moment-matching gadget behind the yes/no product ensembles: the
/// solution z of the Vandermonde system A(alpha) z = e1 over nodes
/// alpha_j = j^3, split into its positive part (indices W, driving the no
/// ensemble) and negative part (indices V, driving the yes ensemble).
struct MomentGadget {
  int ell = 1;
  double eps = 0.0;
  std::vector<double> alpha;  // alpha[j-1] = j^3
  std::vector<double> z;      // Lagrange weights of evaluation at 0
  std::vector<int> W;         // 1-based j with z_j >= 0
  std::vector<int> V;         // complement
  double zL1 = 0.0;
  double tau = 0.0;           // min{36 sqrt(zL1) eps, sqrt(n)/(2 ell^3)}
};

/// ell = ceil(log2 n / log2 log2 n), floored at 1.
int gadget_order(int n);

/// Builds the gadget via the Lagrange closed form
/// z_i = prod_{j != i} alpha_j / (alpha_j - alpha_i), in exact rational
/// arithmetic for ell <= 12 and compensated double products beyond.
MomentGadget build_gadget(int n, double eps);

/// z_i for a given order, double precision (Kahan product).
double gadget_weight(int ell, int i);
/// z_i as an exact rational evaluated to double (ell <= 12).
double gadget_weight_exact(int ell, int i);

/// One draw of a far product instance: biases 1/2 + gamma_i tau / sqrt(n)
/// with gamma_i in {0} u {j^3 : j in W}.
DistributionSpec sample_dno(const MomentGadget& g, int n, Rng& rng);
/// One draw of a junta product instance: biases 1/2 + delta_i tau / sqrt(n)
/// with delta_i in {0} u {j^3 : j in V}.
DistributionSpec sample_dyes(const MomentGadget& g, int n, Rng& rng);

double gamma_moment(const MomentGadget& g, int k);
double delta_moment(const MomentGadget& g, int k);

/// max over 1 <= k <= kMax of |E[delta^k] - E[gamma^k]| / max(1, E[gamma^k]).
double moment_check(const MomentGadget& g, int kMax);

/// Explicit pmf (1 +/- 4 eps) 2^-n split on the parity of the coordinates in
/// S (0-based). An |S|-junta.
DistributionSpec parity_instance(int n, const std::vector<int>& S, double eps);

/// Explicit k-junta pmf over n coordinates from a truth table over
/// {-1,1}^k (entries +/-1, index per sample_to_index): mass
/// 2^-n (1 + 40 eps 2^k / I) on the 1-entries and
/// 2^-n (1 - 40 eps 2^k / (2^k - I)) elsewhere. The table must be good:
/// I in [2^k/3, 2^{k+1}/3].
DistributionSpec pmf_instance_from_boolean(const std::vector<int>& truthTable, double eps, int n);

}  // namespace subcube
