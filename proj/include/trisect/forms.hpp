#pragma once

// Named unimodular forms and the "mE8+nH" shorthand.

#include "trisect/lattice.hpp"

#include <string>

namespace trisect {

/// 2 on the diagonal, -1 along the Dynkin diagram: a chain of seven nodes with
/// the eighth attached to the fifth.
IntMatrix e8_form();
IntMatrix hyperbolic_form();

/// Block sum of `copies` copies of m.
IntMatrix repeat_form(const IntMatrix& m, Index copies);

bool is_even(const IntMatrix& q);

struct LabeledForm {
  IntMatrix matrix;
  std::string label;
};

/// Accepts a JSON matrix ("[[0,1],[1,0]]") or '+'-joined terms, each an
/// optional non-negative multiplier followed by E8, -E8, H, 1, -1, <1> or
/// <-1>; e.g. "3E8+2H", "2<-1>+E8". Throws ParseError.
LabeledForm parse_form_spec(const std::string& spec);

}  // namespace trisect
