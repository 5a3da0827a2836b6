#include "qlds/json_io.hpp"

namespace qlds {

Json matrix_to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix_from_json: negative shape");
  }
  if (data.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("matrix_from_json: data length mismatch");
  }
  CMatrix m(rows, cols);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
      const auto& entry = data.at(idx++);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("matrix_from_json: entry is not [re, im]");
      }
      m(i, j2) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

Json subspace_to_json(const Subspace& h) {
  return Json{{"ambient_dim", h.ambient_dim()}, {"basis", matrix_to_json(h.basis())}};
}

Subspace subspace_from_json(const Json& j, const Tolerance& tol) {
  const auto dim = j.at("ambient_dim").get<int>();
  CMatrix basis = matrix_from_json(j.at("basis"));
  if (basis.rows() != dim) {
    throw std::invalid_argument("subspace_from_json: basis rows != ambient_dim");
  }
  if (basis.cols() == 0) return Subspace::zero(dim);
  // Accept any spanning set; the stored basis is re-orthonormalized.
  return Subspace::from_span(basis, tol);
}

Json mass_function_to_json(const MassFunction& m) {
  Json masses = Json::array();
  for (const auto& [mask, weight] : m.focal()) {
    masses.push_back({{"subset", mask}, {"weight", weight}});
  }
  return Json{{"frame_size", m.frame().size}, {"masses", std::move(masses)}};
}

MassFunction mass_function_from_json(const Json& j) {
  Frame frame(j.at("frame_size").get<int>());
  std::vector<std::pair<std::uint32_t, double>> focal;
  for (const auto& entry : j.at("masses")) {
    focal.emplace_back(entry.at("subset").get<std::uint32_t>(),
                       entry.at("weight").get<double>());
  }
  return MassFunction(frame, std::move(focal));
}

Json identities_to_json(const AdditivityIdentities& r) {
  return Json{{"trace", r.trace},
              {"meet_product_left", r.meet_product_left},
              {"meet_product_right", r.meet_product_right},
              {"commutator_left", r.commutator_left},
              {"commutator_right", r.commutator_right},
              {"operator_commutator", r.operator_commutator},
              {"complement_flip", r.complement_flip}};
}

Json classification_to_json(const PairClassification& c,
                            const AdditivityIdentities& identities) {
  return Json{{"d_scalar", c.d_scalar},
              {"verdict", to_string(c.verdict)},
              {"epsilon", c.epsilon},
              {"lambda_min", c.lambda_min},
              {"lambda_max", c.lambda_max},
              {"residuals", identities_to_json(identities)},
              {"operator_nonzero", c.operator_nonzero}};
}

Json table1_to_json(const Table1Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json entry{{"name", row.name}, {"holds", row.holds}};
    entry["witness"] =
        row.witness ? Json::array({(*row.witness)[0], (*row.witness)[1]}) : Json();
    rows.push_back(std::move(entry));
  }
  Json counterexample;
  if (r.lower_boole_counterexample) {
    counterexample = Json::array({(*r.lower_boole_counterexample)[0],
                                  (*r.lower_boole_counterexample)[1]});
  }
  return Json{{"rows", std::move(rows)},
              {"all_pass", r.all_pass},
              {"lower_boole_counterexample", std::move(counterexample)}};
}

Json probability_table_to_json(const ProbabilityTable& t) {
  Json rows = Json::array();
  for (Meas m : kAllMeas) {
    const auto& row = t.cells[static_cast<std::size_t>(m)];
    rows.push_back({{"measurement", to_string(m)},
                    {"p11", row[0]},
                    {"p01", row[1]},
                    {"p10", row[2]},
                    {"p00", row[3]}});
  }
  return Json{{"table", std::move(rows)},
              {"kappa", t.kappa},
              {"lambda", t.lambda_val},
              {"cross_residual", t.cross_residual}};
}

}  // namespace qlds
