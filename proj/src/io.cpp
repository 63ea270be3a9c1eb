#include "trisect/io.hpp"

#include "trisect/forms.hpp"

#include <fstream>
#include <limits>

namespace trisect {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(v.convert_to<long long>());
  return json(v.str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "not an integer: " + j.get<std::string>());
    }
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    out.push_back(row);
  }
  return out;
}

IntMatrix matrix_from_json(const json& j, Index cols) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  IntMatrix m(Index(j.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) {
    const json& row = j[std::size_t(i)];
    if (!row.is_array() || Index(row.size()) != cols)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(i, c) = bigint_from_json(row[std::size_t(c)]);
  }
  return m;
}

DiagramFile diagram_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "diagram file must be a JSON object");
  for (const char* key : {"genus", "k", "alpha", "beta", "gamma"})
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  if (!j["genus"].is_number_integer() || !j["k"].is_number_integer())
    throw Error(ErrorKind::ParseError, "genus and k must be integers");
  const Index g = j["genus"].get<Index>();
  const Index k = j["k"].get<Index>();
  if (g < 0) throw Error(ErrorKind::ParseError, "genus must be non-negative");
  DiagramFile out{make_diagram(matrix_from_json(j["alpha"], 2 * g), matrix_from_json(j["beta"], 2 * g),
                               matrix_from_json(j["gamma"], 2 * g), k),
                  j.value("name", std::string()), std::nullopt};
  if (j.contains("expected_form")) out.expected_form = j["expected_form"].get<std::string>();
  return out;
}

DiagramFile load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return diagram_from_json(j);
}

json diagram_to_json(const PseudotrisectionDiagram& d, const std::string& name, const std::optional<std::string>& expected_form) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["genus"] = d.genus();
  j["k"] = d.k();
  j["alpha"] = to_json(d.alpha());
  j["beta"] = to_json(d.beta());
  j["gamma"] = to_json(d.gamma());
  if (expected_form) j["expected_form"] = *expected_form;
  return j;
}

json form_to_json(const IntMatrix& q) {
  json j;
  j["rank"] = q.rows();
  j["matrix"] = to_json(q);
  j["unimodular"] = is_unimodular(q);
  j["even"] = is_even(q);
  try {
    j["signature"] = signature(q);
  } catch (const Error&) {
    j["signature"] = nullptr;
  }
  return j;
}

json homology_to_json(const HomologyReport& r) {
  json factors = json::array();
  for (const auto& d : r.invariant_factors) factors.push_back(to_json(d));
  return {{"invariant_factors", factors},
          {"free_rank", r.free_rank},
          {"is_homology_sphere", r.is_homology_sphere},
          {"is_s1s2_connected_sum_homology", r.is_s1s2_connected_sum_homology},
          {"s1s2_count", r.s1s2_count}};
}

json certificate_to_json(const SpanCertificate& c) {
  json summary = json::object();
  for (const auto& [factor, count] : c.factor_summary) summary[factor] = count;
  return {{"dimension", c.dimension},
          {"num_generators", c.num_generators},
          {"invariant_factors_summary", summary},
          {"spans_over_Z", c.spans_over_z}};
}

json obstruction_to_json(const ObstructionReport& r) {
  json j;
  j["form_label"] = r.form_label;
  j["rank"] = r.matrix.rows();
  j["signature"] = r.signature;
  j["signature_mod16"] = r.signature_mod16;
  j["even"] = r.even;
  j["mu_sum"] = r.mu_sum ? json(*r.mu_sum) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::string basis_label(Index genus, Index a) {
  return (a < genus ? "x" : "y") + std::to_string((a < genus ? a : a - genus) + 1);
}

json linking_to_json(const LinkingForm& l) {
  json basis = json::array();
  for (Index a = 0; a < l.matrix.rows(); ++a) basis.push_back(basis_label(l.genus(), a));
  json q = json::array();
  for (int v : enhancement(l).basis_values) q.push_back(v);
  return {{"which", to_string(l.kind)}, {"basis", basis}, {"matrix", to_json(l.matrix)}, {"q_basis_values", q}};
}

}  // namespace trisect
