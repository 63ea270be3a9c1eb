#pragma once

// Lambda^3 H_1(Sigma) and the tau-values of bounding pairs cut off by 3-chains.

#include "trisect/symplectic.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace trisect {

/// C(2g, 3).
Index wedge_dimension(Index genus);

/// Position of e_i ^ e_j ^ e_k (i < j < k < 2g) in lexicographic order.
Index triple_index(Index i, Index j, Index k, Index dim);

struct WedgeCubeElement {
  Index genus = 0;
  IntVector coords;

  bool operator==(const WedgeCubeElement& o) const { return genus == o.genus && coords == o.coords; }
};

WedgeCubeElement wedge_zero(Index genus);
WedgeCubeElement wedge3(const IntRow& a, const IntRow& b, const IntRow& c);

struct ThreeChainClass {
  IntRow a, b, c;
};

/// |<a,b>| = |<b,c>| = 1 and <a,c> = 0.
bool is_three_chain(const ThreeChainClass& ch);

/// a ^ b ^ c; throws InvalidChain unless is_three_chain.
WedgeCubeElement johnson_of_3chain(const ThreeChainClass& ch);

/// Some curve of the chain lies in the span of `lagr`.
bool extends_across(const CutSystemClass& lagr, const ThreeChainClass& ch);

struct Generator {
  ThreeChainClass chain;
  WedgeCubeElement value;
  std::string line;  // which generator pattern produced it
};

struct GeneratorFamily {
  std::string name;  // "TAB" or "TC"
  std::vector<Generator> elements;

  std::vector<WedgeCubeElement> values() const;
  std::map<std::string, Index> line_counts() const;
};

/// Bounding-pair maps on the standard (rank Q + k) diagram of Q: TAB extends
/// across both alpha and beta handlebodies, TC across gamma. Every element is
/// checked to be a 3-chain and certified against its Lagrangians.
std::pair<GeneratorFamily, GeneratorFamily> tab_tc_generators(const IntMatrix& q, Index k);

struct SpanCertificate {
  Index dimension = 0;
  Index num_generators = 0;
  std::vector<BigInt> invariant_factors;
  std::map<std::string, Index> factor_summary;  // factor value -> multiplicity
  bool spans_over_z = false;
};

SpanCertificate spans_wedge_cube(const std::vector<WedgeCubeElement>& family, Index genus);

struct Decomposition {
  IntVector coeffs_ab;
  IntVector coeffs_c;
  WedgeCubeElement tau_a;  // sum over TAB
  WedgeCubeElement tau_c;  // sum over TC
  WedgeCubeElement residual;  // target - tau_a - tau_c, asserted zero
};

/// Holds the echelon form of TAB followed by TC so that many targets can be
/// decomposed against one reduction.
class JohnsonDecomposer {
 public:
  JohnsonDecomposer(const GeneratorFamily& ab, const GeneratorFamily& c);
  ~JohnsonDecomposer();
  JohnsonDecomposer(JohnsonDecomposer&&) noexcept;

  Decomposition decompose(const WedgeCubeElement& target) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Decomposition decompose_johnson(const WedgeCubeElement& target, const GeneratorFamily& ab, const GeneratorFamily& c);

}  // namespace trisect
