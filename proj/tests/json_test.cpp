#include <doctest.h>

#include <stdexcept>

#include "qlds/json_io.hpp"
#include "test_support.hpp"

using namespace qlds;

TEST_CASE("matrix wire format round trips exactly") {
  std::mt19937_64 rng(5);
  const CMatrix m = qlds_test::random_gaussian(3, 2, rng);
  const Json j = matrix_to_json(m);
  CHECK(j.at("rows").get<int>() == 3);
  CHECK(j.at("cols").get<int>() == 2);
  CHECK(j.at("data").size() == 6);

  const CMatrix back = matrix_from_json(j);
  CHECK(back.rows() == 3);
  CHECK((back - m).norm() == 0.0);

  // Exactness must survive text serialization, not just the in-memory tree.
  const CMatrix reparsed = matrix_from_json(Json::parse(j.dump()));
  CHECK((reparsed - m).norm() == 0.0);

  // Row-major data order: entry (0, 1) is the second element.
  CHECK(j.at("data").at(1).at(0).get<double>() == m(0, 1).real());
  CHECK(j.at("data").at(1).at(1).get<double>() == m(0, 1).imag());
}

TEST_CASE("empty matrices are representable") {
  const CMatrix empty(4, 0);
  const Json j = matrix_to_json(empty);
  CHECK(j.at("data").empty());
  const CMatrix back = matrix_from_json(j);
  CHECK(back.rows() == 4);
  CHECK(back.cols() == 0);
}

TEST_CASE("malformed matrix payloads are rejected") {
  CHECK_THROWS_AS(
      matrix_from_json(Json{{"rows", -1}, {"cols", 2}, {"data", Json::array()}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      matrix_from_json(Json{
          {"rows", 2}, {"cols", 2}, {"data", Json::array({Json::array({1.0, 0.0})})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json{
                      {"rows", 1},
                      {"cols", 1},
                      {"data", Json::array({Json::array({1.0, 0.0, 2.0})})}}),
                  std::invalid_argument);
  CHECK_THROWS(matrix_from_json(Json{{"cols", 1}, {"data", Json::array()}}));
}

TEST_CASE("subspace payloads round trip and renormalize") {
  std::mt19937_64 rng(7);
  const Subspace h = qlds_test::random_subspace(4, 2, rng);
  const Subspace back = subspace_from_json(subspace_to_json(h));
  CHECK(back.ambient_dim() == 4);
  CHECK(back.dim() == 2);
  CHECK(back.equals(h));

  CHECK(subspace_from_json(subspace_to_json(Subspace::zero(3))).dim() == 0);
  CHECK(subspace_from_json(subspace_to_json(Subspace::full(3))).dim() == 3);

  // A non-orthonormal spanning set is accepted and cleaned up.
  CMatrix raw(2, 2);
  raw << 2.0, 4.0, 2.0, 4.0;
  const Json j{{"ambient_dim", 2}, {"basis", matrix_to_json(raw)}};
  const Subspace diag = subspace_from_json(j);
  CHECK(diag.dim() == 1);
  CVector v(2);
  v << 1.0, 1.0;
  CHECK(diag.equals(Subspace::from_vector(v)));

  const Json bad{{"ambient_dim", 3}, {"basis", matrix_to_json(raw)}};
  CHECK_THROWS_AS(subspace_from_json(bad), std::invalid_argument);
}

TEST_CASE("mass function payloads round trip") {
  const MassFunction m = employee_mass(2, 3, 5);
  const Json j = mass_function_to_json(m);
  CHECK(j.at("frame_size").get<int>() == 2);
  CHECK(j.at("masses").size() == 3);
  CHECK(j.at("masses").at(0).at("subset").get<unsigned>() == 1u);

  const MassFunction back = mass_function_from_json(Json::parse(j.dump()));
  CHECK(back.frame().size == 2);
  for (std::uint32_t s = 1; s <= 3; ++s) {
    CHECK(back.mass(s) == m.mass(s));
  }

  Json invalid = j;
  invalid["masses"][0]["weight"] = 0.9;  // breaks normalization
  CHECK_THROWS_AS(mass_function_from_json(invalid), std::invalid_argument);
}

TEST_CASE("classification report serializes verdict and residuals") {
  CMatrix v1(3, 1), v2(3, 1);
  v1 << 1.0, 0.0, 0.0;
  v2 << 1.0, 1.0, 0.0;
  const Subspace h1 = Subspace::from_span(v1);
  const Subspace h2 = Subspace::from_span(v2);
  const PairClassification c =
      classify_pair(h1, h2, DensityMatrix::maximally_mixed(3));
  const AdditivityIdentities identities = verify_proposition1(h1, h2);
  const Json j = classification_to_json(c, identities);

  CHECK(j.at("verdict").get<std::string>() == "Kolmogorov");
  CHECK(j.at("operator_nonzero").get<bool>());
  CHECK(std::abs(j.at("d_scalar").get<double>()) <= 1e-12);
  CHECK(j.at("lambda_max").get<double>() == doctest::Approx(0.7071067811865476));
  CHECK(j.at("epsilon").get<double>() == c.epsilon);
  const Json& res = j.at("residuals");
  for (const char* key : {"trace", "meet_product_left", "meet_product_right",
                          "commutator_left", "commutator_right",
                          "operator_commutator", "complement_flip"}) {
    CHECK(res.at(key).get<double>() <= 1e-12);
  }
}

TEST_CASE("property table report serializes rows and witnesses") {
  // An additive measure never breaks the lower union bound, so every witness
  // slot serializes as null.
  const Json ok = table1_to_json(check_table1(kolmogorov_mass({0.4, 0.6})));
  CHECK(ok.at("all_pass").get<bool>());
  CHECK(ok.at("rows").size() == 9);
  CHECK(ok.at("rows").at(0).at("name").get<std::string>() == "belief_monotone");
  CHECK(ok.at("rows").at(0).at("witness").is_null());
  CHECK(ok.at("lower_boole_counterexample").is_null());

  // Unassigned mass makes belief strictly superadditive; the witness pair
  // serializes as a two-element array.
  const Json hit = table1_to_json(check_table1(employee_mass(2, 3, 5)));
  CHECK(hit.at("all_pass").get<bool>());
  CHECK(hit.at("lower_boole_counterexample").is_array());
  CHECK(hit.at("lower_boole_counterexample").size() == 2);
}

TEST_CASE("probability table serializes rows in measurement order") {
  const Json j = probability_table_to_json(
      probability_table(Su2Setting(Complex(0.9238795325112867, 0.3826834323650898),
                                   Complex(0.0, 0.0))));
  CHECK(j.at("table").size() == 4);
  CHECK(j.at("table").at(0).at("measurement").get<std::string>() == "A");
  CHECK(j.at("table").at(3).at("measurement").get<std::string>() == "D");
  CHECK(j.at("table").at(0).at("p11").get<double>() == doctest::Approx(0.5));
  CHECK(j.at("table").at(0).at("p01").get<double>() ==
        doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(j.at("kappa").get<double>() == doctest::Approx(0.42677669529663687));
  CHECK(j.at("lambda").get<double>() == doctest::Approx(0.25));
  CHECK(j.at("cross_residual").get<double>() <= 1e-10);
}
