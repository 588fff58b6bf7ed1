#include <doctest.h>

#include <cmath>

#include "subcube/dist.hpp"
#include "subcube/hard_instances.hpp"
#include "subcube/io.hpp"
#include "subcube/oracle.hpp"
#include "test_util.hpp"

using namespace subcube;
using namespace subcube::testutil;

namespace {

Restriction from_string(const char* s) {
  std::vector<std::int8_t> cells;
  for (const char* c = s; *c; ++c) {
    cells.push_back(*c == '*' ? 0 : (*c == '+' ? 1 : -1));
  }
  return Restriction(std::move(cells));
}

}  // namespace

TEST_CASE("pmf indexing round-trips with coordinate 0 as the low bit") {
  const Sample x = {1, -1, 1};
  CHECK(sample_to_index(x) == 0b101);
  CHECK(sample_from_index(0b101, 3) == x);
}

TEST_CASE("conditional_sample marginals on the uniform distribution") {
  CondOracle oracle(DistributionSpec::uniform(3), Rng(11));
  const long trials = 20000;
  long ones[3] = {0, 0, 0};
  for (long t = 0; t < trials; ++t) {
    const Sample x = oracle.sample();
    for (int i = 0; i < 3; ++i) {
      if (x[static_cast<std::size_t>(i)] == 1) ++ones[i];
    }
  }
  for (int i = 0; i < 3; ++i) {
    CHECK(std::fabs(static_cast<double>(ones[i]) / trials - 0.5) < 0.02);
  }
  CHECK(oracle.query_count() == trials);
}

TEST_CASE("conditional_sample on the parity instance follows the restricted law") {
  // pmf rows 3/8 and 1/8 on the subcube x1 = +1 normalize to 3/4, 1/4.
  const DistributionSpec p = parity_instance(2, {0, 1}, 0.125);
  CondOracle oracle(p, Rng(5));
  const Restriction rho = from_string("+*");
  const long trials = 40000;
  long plus = 0;
  for (long t = 0; t < trials; ++t) {
    const Sample x = oracle.conditional_sample(rho);
    REQUIRE(x[0] == 1);
    if (x[1] == 1) ++plus;
  }
  CHECK(std::fabs(static_cast<double>(plus) / trials - 0.75) < 0.01);
}

TEST_CASE("conditional_sample on a point mass is deterministic") {
  const DistributionSpec p = point_mass_all_ones(3);
  CondOracle oracle(p, Rng(7));
  const Restriction rho = from_string("+**");
  for (int t = 0; t < 20; ++t) {
    CHECK(oracle.conditional_sample(rho) == Sample{1, 1, 1});
  }
}

TEST_CASE("zero-mass subcubes follow the policy") {
  const DistributionSpec p = point_mass_all_ones(2);
  const Restriction rho = from_string("-*");
  SUBCASE("error policy throws") {
    CondOracle oracle(p, Rng(1), UnsupportedPolicy::Error);
    CHECK_THROWS_AS(oracle.conditional_sample(rho), oracle_error);
  }
  SUBCASE("uniform fallback returns a consistent point") {
    CondOracle oracle(p, Rng(1), UnsupportedPolicy::UniformFallback);
    const Sample x = oracle.conditional_sample(rho);
    CHECK(x[0] == -1);
    CHECK((x[1] == 1 || x[1] == -1));
  }
}

TEST_CASE("restrict_exact") {
  SUBCASE("uniform restricts to uniform") {
    const auto r = restrict_exact(DistributionSpec::uniform(3), from_string("+**"));
    for (double v : r.as_explicit().pmf) CHECK(v == doctest::Approx(0.25));
  }
  SUBCASE("parity instance restricted to x1 = +1") {
    const auto r = restrict_exact(parity_instance(2, {0, 1}, 0.125), from_string("+*"));
    CHECK(r.as_explicit().pmf[1] == doctest::Approx(0.75));  // x2 = +1
    CHECK(r.as_explicit().pmf[0] == doctest::Approx(0.25));
  }
  SUBCASE("identity restriction returns the distribution itself") {
    const DistributionSpec p = parity_instance(2, {0, 1}, 0.125);
    const auto r = restrict_exact(p, from_string("**"));
    CHECK(tv_distance(r, p) == doctest::Approx(0.0));
  }
  SUBCASE("zero-mass subcube throws") {
    CHECK_THROWS(restrict_exact(point_mass_all_ones(2), from_string("-*")));
  }
}

TEST_CASE("project_exact") {
  SUBCASE("parity instance projects to uniform on one bit") {
    const auto r = project_exact(parity_instance(2, {0, 1}, 0.125), {1});
    CHECK(r.as_explicit().pmf[0] == doctest::Approx(0.5));
    CHECK(r.as_explicit().pmf[1] == doctest::Approx(0.5));
  }
  SUBCASE("empty projection is the identity") {
    const DistributionSpec p = parity_instance(2, {0, 1}, 0.125);
    CHECK(tv_distance(project_exact(p, {}), p) == doctest::Approx(0.0));
  }
  SUBCASE("projecting out a frozen junta coordinate leaves uniform") {
    const auto r = project_exact(frozen_bit_junta(3, 0), {0});
    for (double v : r.as_explicit().pmf) CHECK(v == doctest::Approx(0.25));
  }
  SUBCASE("projection composes: drop S then T equals drop S u T") {
    Rng rng(3);
    const DistributionSpec p = random_explicit(4, rng);
    const auto oneShot = project_exact(p, {0, 2});
    const auto twoStep = project_exact(project_exact(p, {2}), {0});
    CHECK(tv_distance(oneShot, twoStep) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("mean_vector") {
  SUBCASE("uniform has zero mean") {
    for (double v : DistributionSpec::uniform(4).mean_vector()) CHECK(v == doctest::Approx(0.0));
  }
  SUBCASE("parity instance has zero mean by symmetry") {
    for (double v : parity_instance(3, {0, 1, 2}, 0.125).mean_vector()) {
      CHECK(v == doctest::Approx(0.0));
    }
  }
  SUBCASE("restricted parity exposes mean 1/2") {
    const auto r = restrict_exact(parity_instance(2, {0, 1}, 0.125), from_string("+*"));
    CHECK(r.mean_vector()[0] == doctest::Approx(0.5));
  }
  SUBCASE("junta mean is zero off the relevant set") {
    const DistributionSpec j = DistributionSpec::make_junta(5, {1, 3}, {0.5, 0.1, 0.15, 0.25});
    const auto mu = j.mean_vector();
    CHECK(mu[0] == 0.0);
    CHECK(mu[2] == 0.0);
    CHECK(mu[4] == 0.0);
  }
  SUBCASE("empirical mean rejects an empty batch") {
    CHECK_THROWS(empirical_mean({}));
  }
}

TEST_CASE("restrict-then-mean agrees with empirical means from the oracle") {
  Rng rng(21);
  const DistributionSpec p = random_explicit(4, rng);
  const Restriction rho = from_string("*+**");
  const auto exact = restrict_exact(p, rho).mean_vector();

  CondOracle oracle(p, Rng(22));
  const long trials = 100000;
  std::vector<double> acc(4, 0.0);
  for (long t = 0; t < trials; ++t) {
    const Sample x = oracle.conditional_sample(rho);
    for (int i = 0; i < 4; ++i) acc[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(i)];
  }
  const double tol = 4.0 / std::sqrt(static_cast<double>(trials));
  const auto& stars = rho.stars();
  for (std::size_t t = 0; t < stars.size(); ++t) {
    const double emp = acc[static_cast<std::size_t>(stars[t])] / trials;
    CHECK(std::fabs(emp - exact[t]) < tol);
  }
}

TEST_CASE("tv_distance") {
  SUBCASE("uniform to itself is zero") {
    CHECK(tv_distance(DistributionSpec::uniform(3), DistributionSpec::uniform(3)) ==
          doctest::Approx(0.0));
  }
  SUBCASE("parity instance sits at 2 eps from uniform") {
    CHECK(tv_distance(parity_instance(2, {0, 1}, 0.125), DistributionSpec::uniform(2)) ==
          doctest::Approx(0.25));
  }
  SUBCASE("point mass on one bit is 1/2 from uniform") {
    CHECK(tv_distance(point_mass_all_ones(1), DistributionSpec::uniform(1)) ==
          doctest::Approx(0.5));
  }
  SUBCASE("metric properties on random triples") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_explicit(3, rng);
      const auto b = random_explicit(3, rng);
      const auto c = random_explicit(3, rng);
      CHECK(tv_distance(a, b) == tv_distance(b, a));
      CHECK(tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-12);
    }
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS(tv_distance(DistributionSpec::uniform(2), DistributionSpec::uniform(3)));
  }
}

TEST_CASE("query accounting is exact") {
  CondOracle oracle(DistributionSpec::uniform(4), Rng(2));
  CHECK(oracle.query_count() == 0);
  for (int t = 1; t <= 37; ++t) {
    (void)oracle.conditional_sample(Restriction::all_stars(4));
    CHECK(oracle.query_count() == static_cast<std::uint64_t>(t));
  }
}

TEST_CASE("instance JSON round-trip and validation") {
  SUBCASE("explicit") {
    const DistributionSpec p = parity_instance(2, {0, 1}, 0.125);
    const auto q = load_spec_json(spec_to_json(p));
    CHECK(tv_distance(p, q) == doctest::Approx(0.0));
  }
  SUBCASE("junta vars are 1-based on the wire") {
    const auto q = load_spec_json(R"({"kind":"junta","n":3,"vars":[2],"innerPmf":[0.25,0.75]})");
    CHECK(q.as_junta().vars == std::vector<int>{1});
  }
  SUBCASE("product bias bounds enforced") {
    CHECK_THROWS(load_spec_json(R"({"kind":"product","bias":[0.5,1.5]})"));
  }
  SUBCASE("small pmf drift renormalizes, large drift rejects") {
    CHECK_NOTHROW(load_spec_json(R"({"kind":"explicit","n":1,"pmf":[0.5,0.5000000001]})"));
    CHECK_THROWS(load_spec_json(R"({"kind":"explicit","n":1,"pmf":[0.5,0.6]})"));
  }
}
