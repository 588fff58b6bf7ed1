#pragma once

#include <cstdint>
#include <vector>

#include "subcube/mean_tester.hpp"
#include "subcube/oracle.hpp"
#include "subcube/relevant_vars.hpp"

namespace subcube {

/// Parameters of the end-to-end junta test.
struct TestPlan {
  double epsPrime = 0.0;
  int rLevels = 0;     // ell ranges over [1, rLevels]
  double epsStar = 0.0;
  int jMax = 0;        // j ranges over [1, jMax] = [1, ceil(log2 2n)]
  std::vector<long> L; // L[ell-1], rounds factor per level (0 = block skipped)
  long R = 1;          // inner repetition count, forced odd
};

TestPlan make_test_plan(int n, int k, double eps, const AlgoConfig& cfg);

struct BlockTally {
  int j = 0;
  int ell = 0;
  long rounds = 0;
  long notJuntaMajorities = 0;
};

struct TestReport {
  bool accept = false;
  std::vector<int> J;
  std::uint64_t finderQueries = 0;
  std::uint64_t totalQueries = 0;
  long meanTesterRuns = 0;
  std::vector<BlockTally> blocks;
  TestPlan plan;
};

/// TestingJuntas: find candidate relevant variables, reject when more than k
/// were found, then vote robust mean tests over two-stage random
/// restrictions in every (j, ell) block.
TestReport test_junta(CondOracle& oracle, int k, double eps, const AlgoConfig& cfg, Rng& rng);

}  // namespace subcube
