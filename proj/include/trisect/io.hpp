#pragma once

// JSON encodings for the command-line front end. Integers that do not fit in
// 64 bits are written as decimal strings.

#include "trisect/johnson.hpp"
#include "trisect/rohlin.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace trisect {

using nlohmann::json;

json to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, Index cols);

struct DiagramFile {
  PseudotrisectionDiagram diagram;
  std::string name;
  std::optional<std::string> expected_form;
};

/// {"genus", "k", "alpha", "beta", "gamma", "name"?, "expected_form"?}.
/// Throws ParseError on schema problems and the cut-system error kinds on
/// invalid classes.
DiagramFile diagram_from_json(const json& j);
DiagramFile load_diagram_file(const std::string& path);
json diagram_to_json(const PseudotrisectionDiagram& d, const std::string& name = "",
                     const std::optional<std::string>& expected_form = std::nullopt);

json form_to_json(const IntMatrix& q);
json homology_to_json(const HomologyReport& r);
json certificate_to_json(const SpanCertificate& c);
json obstruction_to_json(const ObstructionReport& r);
json linking_to_json(const LinkingForm& l);

/// "x1".."xg", "y1".."yg".
std::string basis_label(Index genus, Index a);

}  // namespace trisect
