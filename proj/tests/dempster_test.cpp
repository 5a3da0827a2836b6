#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qlds/dempster.hpp"

using namespace qlds;

namespace {

MassFunction example_employees() { return employee_mass(2, 3, 5); }

}  // namespace

TEST_CASE("frame validation and full mask") {
  CHECK_THROWS_AS(Frame(0), std::invalid_argument);
  CHECK_THROWS_AS(Frame(25), std::invalid_argument);
  CHECK_THROWS_AS(Frame(-3), std::invalid_argument);
  CHECK(Frame(1).full_mask() == 1u);
  CHECK(Frame(3).full_mask() == 7u);
  CHECK(Frame(24).full_mask() == 16777215u);
}

TEST_CASE("mass function validation") {
  const Frame f(2);
  using Focal = std::vector<std::pair<std::uint32_t, double>>;
  CHECK_THROWS_AS(MassFunction(f, Focal{{0u, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MassFunction(f, Focal{{4u, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MassFunction(f, Focal{{1u, 0.5}, {1u, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MassFunction(f, Focal{{1u, -0.2}, {2u, 1.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MassFunction(f, Focal{{1u, 0.4}, {2u, 0.4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MassFunction(f, Focal{{1u, std::nan("")}}),
                  std::invalid_argument);

  const MassFunction m(f, Focal{{3u, 0.5}, {1u, 0.5}});
  CHECK(m.focal().size() == 2);
  CHECK(m.focal()[0].first == 1u);  // sorted by mask
  CHECK(m.mass(1u) == doctest::Approx(0.5));
  CHECK(m.mass(2u) == doctest::Approx(0.0));
  CHECK(m.mass(3u) == doctest::Approx(0.5));
}

TEST_CASE("employee example lower and upper values") {
  const MassFunction m = example_employees();
  CHECK(m.mass(0b01u) == doctest::Approx(0.2));
  CHECK(m.mass(0b10u) == doctest::Approx(0.3));
  CHECK(m.mass(0b11u) == doctest::Approx(0.5));

  CHECK(belief(m, 0b01u) == doctest::Approx(0.2));
  CHECK(plausibility(m, 0b01u) == doctest::Approx(0.7));
  CHECK(belief(m, 0b10u) == doctest::Approx(0.3));
  CHECK(plausibility(m, 0b10u) == doctest::Approx(0.8));
  CHECK(belief(m, 0u) == doctest::Approx(0.0));
  CHECK(plausibility(m, 0u) == doctest::Approx(0.0));
  CHECK(belief(m, 0b11u) == doctest::Approx(1.0));
  CHECK(plausibility(m, 0b11u) == doctest::Approx(1.0));

  // Duality across the complement.
  for (std::uint32_t a = 0; a <= 3; ++a) {
    CHECK(plausibility(m, a) ==
          doctest::Approx(1.0 - belief(m, m.frame().full_mask() & ~a)));
  }

  CHECK_THROWS_AS(belief(m, 4u), std::invalid_argument);
  CHECK_THROWS_AS(plausibility(m, 4u), std::invalid_argument);
}

TEST_CASE("employee counts validation") {
  CHECK_THROWS_AS(employee_mass(-1, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(employee_mass(0, 0, 0), std::invalid_argument);
  const MassFunction all_unknown = employee_mass(0, 0, 4);
  CHECK(all_unknown.focal().size() == 1);
  CHECK(all_unknown.mass(0b11u) == doctest::Approx(1.0));
  CHECK(belief(all_unknown, 0b01u) == doctest::Approx(0.0));
  CHECK(plausibility(all_unknown, 0b01u) == doctest::Approx(1.0));
}

TEST_CASE("additivity defect has the expected sign and size") {
  const MassFunction m = example_employees();
  const auto ell = [&](std::uint32_t s) { return belief(m, s); };
  const auto upl = [&](std::uint32_t s) { return plausibility(m, s); };
  CHECK(delta(ell, 0b01u, 0b10u) == doctest::Approx(0.5));
  CHECK(delta(upl, 0b01u, 0b10u) == doctest::Approx(-0.5));
  CHECK(delta(ell, 0b01u, 0b01u) == doctest::Approx(0.0));
  CHECK(delta(ell, 0b11u, 0b01u) == doctest::Approx(0.0));
}

TEST_CASE("additive measures have zero defect everywhere") {
  const MassFunction m = kolmogorov_mass({0.1, 0.2, 0.3, 0.4});
  const auto ell = [&](std::uint32_t s) { return belief(m, s); };
  const auto upl = [&](std::uint32_t s) { return plausibility(m, s); };
  for (std::uint32_t a = 0; a <= 15; ++a) {
    CHECK(belief(m, a) == doctest::Approx(plausibility(m, a)).epsilon(1e-12));
    for (std::uint32_t b = 0; b <= 15; ++b) {
      CHECK(std::abs(delta(ell, a, b)) <= 1e-12);
      CHECK(std::abs(delta(upl, a, b)) <= 1e-12);
    }
  }
  CHECK(belief(m, 0b0101u) == doctest::Approx(0.4));
}

TEST_CASE("property table passes on the employee example") {
  const Table1Report report = check_table1(example_employees());
  CHECK(report.all_pass);
  CHECK(report.rows.size() == 9);
  const char* expected_names[] = {"belief_monotone",
                                  "belief_normalized",
                                  "belief_superadditive_delta",
                                  "belief_complement_sum_below_one",
                                  "plausibility_monotone",
                                  "plausibility_normalized",
                                  "plausibility_subadditive_delta",
                                  "plausibility_complement_sum_above_one",
                                  "plausibility_union_bound"};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].name == expected_names[i]);
    CHECK(report.rows[i].holds);
    CHECK_FALSE(report.rows[i].witness.has_value());
  }
  // The undecided mass on the whole frame makes belief strictly
  // superadditive, so the union bound for the lower value fails and the
  // exhaustive sweep records a witness pair.
  REQUIRE(report.lower_boole_counterexample.has_value());
  const MassFunction m = example_employees();
  const auto [a, b] = *report.lower_boole_counterexample;
  CHECK(belief(m, a) + belief(m, b) < belief(m, a | b) - 1e-9);
}

TEST_CASE("property table passes on an additive measure") {
  const Table1Report report = check_table1(kolmogorov_mass({0.25, 0.25, 0.5}));
  CHECK(report.all_pass);
  CHECK_FALSE(report.lower_boole_counterexample.has_value());
}

TEST_CASE("concentrated mass yields a union bound failure for belief") {
  const MassFunction m(
      Frame(3), std::vector<std::pair<std::uint32_t, double>>{{0b111u, 1.0}});
  const Table1Report report = check_table1(m);
  CHECK(report.all_pass);  // the nine table rows still hold
  REQUIRE(report.lower_boole_counterexample.has_value());
  const auto [a, b] = *report.lower_boole_counterexample;
  CHECK(belief(m, a) + belief(m, b) < belief(m, a | b) - 1e-9);
}

TEST_CASE("property table sampling path is deterministic") {
  std::vector<std::pair<std::uint32_t, double>> focal{
      {0b00001u, 0.2}, {0b00110u, 0.3}, {0b11111u, 0.25}, {0b10100u, 0.25}};
  const MassFunction m(Frame(5), focal);
  // 4^5 = 1024 pairs exceeds the trial budget, so pairs are sampled.
  const Table1Report first = check_table1(m, 200, 42);
  const Table1Report second = check_table1(m, 200, 42);
  CHECK(first.all_pass);
  CHECK(second.all_pass);
  CHECK(first.lower_boole_counterexample == second.lower_boole_counterexample);
  CHECK_THROWS_AS(check_table1(m, 0), std::invalid_argument);
}

TEST_CASE("combination of symmetric conflicting evidence") {
  using Focal = std::vector<std::pair<std::uint32_t, double>>;
  const Frame f(2);
  const MassFunction m1(f, Focal{{0b01u, 0.9}, {0b11u, 0.1}});
  const MassFunction m2(f, Focal{{0b10u, 0.9}, {0b11u, 0.1}});
  const MassFunction joined = dempster_combine(m1, m2);
  CHECK(joined.mass(0b01u) == doctest::Approx(9.0 / 19.0).epsilon(1e-12));
  CHECK(joined.mass(0b10u) == doctest::Approx(9.0 / 19.0).epsilon(1e-12));
  CHECK(joined.mass(0b11u) == doctest::Approx(1.0 / 19.0).epsilon(1e-12));

  const MassFunction reversed = dempster_combine(m2, m1);
  for (std::uint32_t s = 1; s <= 3; ++s) {
    CHECK(joined.mass(s) == doctest::Approx(reversed.mass(s)).epsilon(1e-12));
  }
}

TEST_CASE("combination rejects total conflict and mixed frames") {
  using Focal = std::vector<std::pair<std::uint32_t, double>>;
  const MassFunction sure_a(Frame(2), Focal{{0b01u, 1.0}});
  const MassFunction sure_b(Frame(2), Focal{{0b10u, 1.0}});
  CHECK_THROWS_AS(dempster_combine(sure_a, sure_b), std::invalid_argument);
  const MassFunction other(Frame(3), Focal{{0b100u, 1.0}});
  CHECK_THROWS_AS(dempster_combine(sure_a, other), std::invalid_argument);
}

TEST_CASE("vacuous evidence is neutral for combination") {
  using Focal = std::vector<std::pair<std::uint32_t, double>>;
  const MassFunction m = example_employees();
  const MassFunction vacuous(Frame(2), Focal{{0b11u, 1.0}});
  const MassFunction joined = dempster_combine(m, vacuous);
  for (std::uint32_t s = 1; s <= 3; ++s) {
    CHECK(joined.mass(s) == doctest::Approx(m.mass(s)).epsilon(1e-12));
  }
}
