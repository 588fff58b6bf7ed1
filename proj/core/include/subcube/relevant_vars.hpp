#pragma once

#include <cstdint>
#include <vector>

#include "subcube/config.hpp"
#include "subcube/oracle.hpp"

namespace subcube {

/// One (j, a) round of the budgeted search, for reporting.
struct BudgetRound {
  int j = 0;
  int a = 0;
  double alpha = 1.0;
  long tPairs = 0;
  long sSamples = 0;
  int foundSize = 0;
};

/// Output of one budgeted search call: either empty or >= b coordinates,
/// ordered by decreasing empirical-mean magnitude (ties: lowest index).
struct BudgetResult {
  std::vector<int> coords;
  std::vector<double> means;  // empirical means matching coords
  std::vector<BudgetRound> rounds;
};

/// Searches for at least b fresh coordinates outside J whose restricted
/// empirical mean crosses the level-a threshold; returns the first crossing
/// set of size >= b, else empty.
BudgetResult variables_budget(CondOracle& oracle, int k, double eps, int b,
                              const std::vector<int>& J, const AlgoConfig& cfg, Rng& rng);

struct FinderReport {
  std::vector<int> J;
  std::uint64_t queries = 0;
  long budgetB = 0;  // cumulative budget counter; <= 8k at termination
  std::vector<BudgetRound> log;
};

/// Budget-doubling search for the relevant variables of a junta distribution.
FinderReport find_relevant_variables(CondOracle& oracle, int k, double eps,
                                     const AlgoConfig& cfg, Rng& rng);

/// Folklore learner: draws ceil(learnConstant * 2^|J| / eps^2) unconditioned
/// samples and returns the junta with the empirical pmf of the projection
/// onto J.
DistributionSpec learn_junta(CondOracle& oracle, const std::vector<int>& J, double eps,
                             const AlgoConfig& cfg);

/// Derived precision passed to the budgeted search by the finder.
double finder_eps0(int k, double eps, const AlgoConfig& cfg);

/// Paper parameter formulas at scale cfg.budgetConstantScale.
long budget_pair_count(int k, double eps, int a, const AlgoConfig& cfg);
long budget_sample_count(int n, int k, double eps, int b, int a, const AlgoConfig& cfg);
double budget_threshold(double eps, int b, double alpha, const AlgoConfig& cfg);

}  // namespace subcube
