#include "trisect/forms.hpp"

#include <json.hpp>

#include <cctype>

namespace trisect {

IntMatrix e8_form() {
  IntMatrix q = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) q(i, i) = 2;
  const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (const auto& e : edges) {
    q(e[0], e[1]) = -1;
    q(e[1], e[0]) = -1;
  }
  return q;
}

IntMatrix hyperbolic_form() {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  return h;
}

IntMatrix repeat_form(const IntMatrix& m, Index copies) {
  IntMatrix out(0, 0);
  for (Index i = 0; i < copies; ++i) out = direct_sum(out, m);
  return out;
}

bool is_even(const IntMatrix& q) {
  for (Index i = 0; i < q.rows(); ++i)
    if (q(i, i) % 2 != 0) return false;
  return true;
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

IntMatrix atom_matrix(const std::string& atom) {
  IntMatrix one(1, 1);
  if (atom == "E8") return e8_form();
  if (atom == "-E8") return IntMatrix(-e8_form());
  if (atom == "H") return hyperbolic_form();
  if (atom == "1" || atom == "<1>") {
    one(0, 0) = 1;
    return one;
  }
  if (atom == "-1" || atom == "<-1>") {
    one(0, 0) = -1;
    return one;
  }
  throw Error(ErrorKind::ParseError, "unknown form atom '" + atom + "'");
}

LabeledForm parse_json_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  const Index n = Index(j.size());
  IntMatrix q(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = j[std::size_t(i)];
    if (!row.is_array() || Index(row.size()) != n) throw Error(ErrorKind::NotSquare, "matrix rows must all have length " + std::to_string(n));
    for (Index c = 0; c < n; ++c) {
      const auto& e = row[std::size_t(c)];
      if (e.is_number_integer())
        q(i, c) = BigInt(e.get<long long>());
      else if (e.is_string()) {
        try {
          q(i, c) = BigInt(e.get<std::string>());
        } catch (const std::runtime_error&) {
          throw Error(ErrorKind::ParseError, "not an integer: " + e.get<std::string>());
        }
      }
      else
        throw Error(ErrorKind::ParseError, "matrix entries must be integers");
    }
  }
  return {q, "matrix"};
}

}  // namespace

LabeledForm parse_form_spec(const std::string& spec) {
  const std::string s = strip(spec);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty form spec");
  if (s.front() == '[') return parse_json_matrix(s);

  IntMatrix q(0, 0);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    std::string term = s.substr(pos, next - pos);
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + spec + "'");

    // A leading count is only a multiplier if something follows it; a bare
    // "1" is the atom <1>.
    std::size_t d = 0;
    while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
    Index count = 1;
    std::string atom = term;
    if (d > 0 && d < term.size()) {
      count = std::stol(term.substr(0, d));
      atom = term.substr(d);
    }
    q = direct_sum(q, repeat_form(atom_matrix(atom), count));
    pos = next + 1;
  }
  return {q, s};
}

}  // namespace trisect
