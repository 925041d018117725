#include "plethyst/serialize.hpp"

#include "plethyst/error.hpp"

namespace plethyst {

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int v : p.parts()) j.push_back(v);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition JSON must be an array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("partition JSON must be an array of integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const Tableau& t) {
  Json j = Json::array();
  for (const auto& row : t.rows()) j.push_back(row);
  return j;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("tableau JSON must be an array of rows");
  std::vector<std::vector<int>> rows;
  std::vector<int> shape;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("tableau JSON rows must be arrays");
    rows.push_back(row.get<std::vector<int>>());
    shape.push_back(static_cast<int>(rows.back().size()));
  }
  return Tableau(Partition(std::move(shape)), std::move(rows));
}

namespace {

Json terms_json(const SymFunc& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back(Json{{"partition", to_json(it->first)}, {"coeff", to_decimal(it->second)}});
  return terms;
}

}  // namespace

Json to_json(const SymFunc& f) {
  return Json{{"basis", std::string(basis_tag(f.basis()))},
              {"degree", f.degree()},
              {"terms", terms_json(f)}};
}

SymFunc symfunc_from_json(const Json& j) {
  try {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
      f.add_term(partition_from_json(term.at("partition")),
                 Rational(term.at("coeff").get<std::string>()));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed symmetric function JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("malformed coefficient: ") + e.what());
  }
}

Json to_json(const ExpansionReport& r) {
  Json checks = Json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  return Json{{"lambda", to_json(r.lambda)},
              {"mu", to_json(r.mu)},
              {"monomial_coeffs", terms_json(r.monomial_coeffs)},
              {"schur_coeffs", terms_json(r.schur_coeffs)},
              {"predicted_first_term", to_json(r.predicted_first_term)},
              {"observed_first_term", to_json(r.observed_first_term)},
              {"first_term_coefficient", to_decimal(r.first_term_coefficient)},
              {"checks", checks}};
}

}  // namespace plethyst
