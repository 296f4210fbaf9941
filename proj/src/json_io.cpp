#include "indexlab/json_io.hpp"

namespace indexlab {

json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return rat_from_string(j.get<std::string>());
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RationalMatrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  check(entries.size() == rows, "matrix json: row count mismatch");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    check(entries[i].size() == cols, "matrix json: column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(entries[i][k]);
  }
  return m;
}

json to_json(const RankCertificate& c) {
  return json{{"value", c.value},
              {"mode", c.mode == RankMode::symbolic ? "symbolic" : "montecarlo"},
              {"trials", c.trials},
              {"box", c.box},
              {"failure_bound", to_string(c.failure_bound)}};
}

json to_json(const IndexReport& r) {
  return json{{"module_dim", r.module_dim},
              {"algebra_dim", r.algebra_dim},
              {"max_orbit_dim", r.max_orbit_dim},
              {"index", r.index},
              {"exact", r.exact},
              {"certificate", to_json(r.certificate)}};
}

json to_json(const MatrixLieAlgebra& a) {
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back(to_json(b));
  return json{{"label", a.label()}, {"ambient", a.ambient()}, {"basis", std::move(basis)}};
}

MatrixLieAlgebra algebra_from_json(const json& j) {
  std::vector<RationalMatrix> basis;
  for (const auto& b : j.at("basis")) basis.push_back(matrix_from_json(b));
  return MatrixLieAlgebra(j.at("ambient").get<std::size_t>(), std::move(basis),
                          j.value("label", std::string("algebra")));
}

json to_json(const Representation& r) {
  json action = json::array();
  for (const auto& a : r.action) action.push_back(to_json(a));
  return json{{"algebra", to_json(r.algebra)},
              {"dim", r.module_dim},
              {"action", std::move(action)}};
}

Representation representation_from_json(const json& j) {
  Representation r{algebra_from_json(j.at("algebra")),
                   j.at("dim").get<std::size_t>(),
                   {}};
  for (const auto& a : j.at("action")) r.action.push_back(matrix_from_json(a));
  check(r.action.size() == r.algebra.dim(),
        "representation json: one action matrix per basis element");
  return r;
}

json to_json(const SymmetricPair& p) {
  json g1 = json::array();
  for (const auto& m : p.g1_basis) g1.push_back(to_json(m));
  json sigma;
  if (p.sigma.kind == Involution::Kind::outer_by_form)
    sigma = json{{"kind", "outer-by-form"}, {"data", to_json(p.sigma.form.J)}};
  else
    sigma = json{{"kind", "inner-by-conjugation"}, {"data", to_json(p.sigma.conjugator)}};
  return json{{"family", family_code(p.family)},
              {"params", json{{"p", p.p}, {"q", p.q}}},
              {"g0", to_json(p.g0_algebra())},
              {"g1", std::move(g1)},
              {"sigma", std::move(sigma)}};
}

json to_json(const OrbitRep& rep) {
  json out{{"family", family_code(rep.family)},
           {"params", json{{"p", rep.p}, {"q", rep.q}}},
           {"partition", rep.jordan_type.to_string()},
           {"e", to_json(rep.e)}};
  if (rep.diagram.has_value()) {
    json rows = json::array();
    for (const auto& r : rep.diagram->rows) rows.push_back(r);
    out["decoration"] = std::move(rows);
  } else if (!rep.decoration.signs.empty()) {
    out["decoration"] = rep.decoration.to_string();
  }
  if (rep.form.has_value()) out["form"] = to_json(rep.form->J);
  return out;
}

} // namespace indexlab
