#pragma once

// (g; k, 0, 0) pseudotrisection diagrams: the (alpha, beta) pair has the
// homology of #_k S^1 x S^2, the other two pairs are homology spheres.

#include "trisect/heegaard.hpp"

#include <string>

namespace trisect {

struct ValidityFlags {
  bool ab_free_rank_k = false;
  bool bc_unimodular = false;
  bool ca_unimodular = false;

  bool valid() const { return ab_free_rank_k && bc_unimodular && ca_unimodular; }
  std::string describe() const;
};

struct PseudotrisectionDiagram {
  HeegaardTriple triple;
  ValidityFlags flags;

  Index genus() const { return triple.genus(); }
  Index k() const { return triple.k; }
  const IntMatrix& alpha() const { return triple.a.rows; }
  const IntMatrix& beta() const { return triple.b.rows; }
  const IntMatrix& gamma() const { return triple.c.rows; }
};

ValidityFlags check_validity(const HeegaardTriple& t);

PseudotrisectionDiagram make_diagram(const HeegaardTriple& t);
PseudotrisectionDiagram make_diagram(const IntMatrix& alpha, const IntMatrix& beta, const IntMatrix& gamma, Index k);

/// Throws InvalidDiagram naming the failing pair.
void require_valid(const PseudotrisectionDiagram& d);

struct IntersectionForm {
  IntMatrix matrix;
  std::string label;

  Index rank() const { return matrix.rows(); }
};

/// Overall sign in front of the triple product; fixed so that the standard
/// CP^2 diagram gives <+1>.
inline constexpr int kFormSign = -1;

/// Splits off K = L_alpha ∩ L_beta, then evaluates
///   Q = kFormSign * <G, B> <A, B>^-1 <G, A>^T
/// on complements A, B of K in L_alpha, L_beta and the annihilator G of K in
/// L_gamma.
IntersectionForm intersection_form(const PseudotrisectionDiagram& d);

/// alpha = (x_i), beta = (y_1..y_n, x_{n+1}..x_g),
/// gamma = (z_1..z_n, y_{n+1}..y_g) with z_i = -x_i - sum_j Q_ij y_j.
PseudotrisectionDiagram standard_pseudotrisection(const IntMatrix& q, Index k);

/// Genus 8: alpha = (x_i), beta = (y_i), gamma_i = y_i + sum_j E8_ij x_j.
/// Each gamma curve meets its alpha curve once; beta and gamma link along the
/// E8 plumbing.
PseudotrisectionDiagram e8_figure_diagram();

/// New lattice basis (symplectic T) and handleslides on each cut system
/// bringing d to the shape of standard_pseudotrisection(Q, k).
struct Standardization {
  PseudotrisectionDiagram diagram;
  IntMatrix basis;  // rows: new x_1..x_g, y_1..y_g in old coordinates
  IntMatrix form;
};

Standardization standardize(const PseudotrisectionDiagram& d);
PseudotrisectionDiagram standardize_basis(const PseudotrisectionDiagram& d);

/// (A, B, C) -> (B, C, A); k becomes the free rank of the new first pair.
PseudotrisectionDiagram cyclic_rotate(const PseudotrisectionDiagram& d);

/// Rewrites every class in the basis whose rows are `t` (t symplectic):
/// coordinates c become c * t^-1.
PseudotrisectionDiagram change_basis(const PseudotrisectionDiagram& d, const IntMatrix& t);

/// Left-multiplies one cut system (0 = alpha, 1 = beta, 2 = gamma) by a
/// unimodular g x g matrix.
PseudotrisectionDiagram handleslide(const PseudotrisectionDiagram& d, int which, const IntMatrix& g);

}  // namespace trisect
