#pragma once

// Linking forms on the central surface, their mod-2 enhancements, Arf and
// the knot-level Casson formula.

#include "trisect/trisection.hpp"

#include <vector>

namespace trisect {

enum class LinkingKind { L2, L3 };

const char* to_string(LinkingKind kind);

/// matrix(a, b) = l(e_a, e_b) on the (x, y) basis; l(b, a) = l(a, b) + <a, b>,
/// i.e. matrix^T - matrix = J.
struct LinkingForm {
  IntMatrix matrix;
  LinkingKind kind = LinkingKind::L2;

  Index genus() const { return matrix.rows() / 2; }
  BigInt operator()(const IntRow& a, const IntRow& b) const;
};

/// For a splitting Z^{2g} = L1 + L2 into Lagrangians, l(a, b) = <p1(b), p2(a)>
/// where p1, p2 are the projections. l2 uses (L_beta, L_gamma), l3 uses
/// (L_gamma, L_alpha).
LinkingForm linking_form_from_splitting(const IntMatrix& l1, const IntMatrix& l2, LinkingKind kind);
LinkingForm linking_form(const PseudotrisectionDiagram& d, LinkingKind kind);

bool satisfies_linking_symmetry(const LinkingForm& l);

struct QuadraticEnhancement {
  Index genus = 0;
  std::vector<int> basis_values;  // q(e_a), a = 0..2g-1
};

QuadraticEnhancement enhancement(const LinkingForm& l);

/// sum c_a q(e_a) + sum_{a<b} c_a c_b <e_a, e_b> mod 2.
int q_eval(const QuadraticEnhancement& q, const IntRow& v);

bool q2_equals_q3(const PseudotrisectionDiagram& d);

/// Pairs (a_i, b_i) with <a_i, b_j> = delta_ij and the a's, b's isotropic.
struct SubsurfaceBasis {
  IntMatrix a;  // h x 2g
  IntMatrix b;  // h x 2g

  Index size() const { return a.rows(); }
};

/// Throws InvalidBasis unless the symplectic relations hold.
void validate_subsurface_basis(const SubsurfaceBasis& s);

int arf_invariant(const QuadraticEnhancement& q, const SubsurfaceBasis& s);

/// lambda' = sum_i (l(a_i,a_i) l(b_i,b_i) - l(a_i,b_i) l(b_i,a_i))
///         + 2 sum_{i<j} (l(a_i,a_j) l(b_i,b_j) - l(a_i,b_j) l(a_j,b_i)).
BigInt casson_knot_invariant(const LinkingForm& l, const SubsurfaceBasis& s);

/// Symplectic basis of the span of `side_classes` (rows), by exact symplectic
/// Gram-Schmidt. Throws OddRank or DegeneratePairing.
SubsurfaceBasis separating_class_subsurface(Index genus, const IntMatrix& side_classes);

}  // namespace trisect
