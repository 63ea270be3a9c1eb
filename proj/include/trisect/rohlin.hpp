#pragma once

// Mod-2 Casson bookkeeping for regluing a (g; k, 0, 0) diagram along
// separating twists, and the resulting signature obstruction.

#include "trisect/linking.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace trisect {

struct RegluingScript {
  std::vector<SubsurfaceBasis> twists;
};

struct MuLedger {
  int mu2_delta = 0;
  int mu3_delta = 0;
  std::vector<std::pair<int, int>> per_twist;  // (Arf under q2, Arf under q3)
};

/// sigma(Q) / 8 mod 2; throws OddForm.
int base_mu_sum(const IntMatrix& q);

/// Everything a regluing run needs from the diagram, computed once.
struct RegluingContext {
  IntMatrix form;
  int base_mu = 0;
  QuadraticEnhancement q2, q3;
};

/// Throws OddForm unless the form of d is even.
RegluingContext prepare_regluing(const PseudotrisectionDiagram& d);

MuLedger apply_regluing(const RegluingContext& ctx, const RegluingScript& s);
MuLedger apply_regluing(const PseudotrisectionDiagram& d, const RegluingScript& s);

int mu_sum_after(const RegluingContext& ctx, const RegluingScript& s);
int mu_sum_after(const PseudotrisectionDiagram& d, const RegluingScript& s);

/// Side spans of `twists` random separating curves: the span of h random
/// handle pairs pushed through a product of random transvections, then
/// rebased by Gram-Schmidt.
RegluingScript random_script(Index genus, Index twists, std::mt19937_64& rng);

enum class Verdict { Obstructed, Consistent };

const char* to_string(Verdict v);

struct ObstructionReport {
  std::string form_label;
  IntMatrix matrix;
  long signature = 0;
  long signature_mod16 = 0;
  bool even = false;
  std::optional<int> mu_sum;  // only for even forms
  Verdict verdict = Verdict::Consistent;
};

ObstructionReport rohlin_obstruction(const IntMatrix& q, const std::string& label = "");

}  // namespace trisect
