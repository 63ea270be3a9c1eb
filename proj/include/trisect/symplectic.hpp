#pragma once

// H_1 of a closed genus-g surface, basis (x_1..x_g, y_1..y_g) with
// <x_i, y_j> = delta_ij. Classes are stored as rows of length 2g.

#include "trisect/lattice.hpp"

namespace trisect {

struct SymplecticLattice {
  Index genus = 0;
  Index dim() const { return 2 * genus; }
  bool operator==(const SymplecticLattice&) const = default;
};

/// J = [[0, I], [-I, 0]], so that <a, b> = a J b^T for row vectors.
IntMatrix symplectic_form(Index genus);

IntRow basis_x(Index genus, Index i);
IntRow basis_y(Index genus, Index i);

BigInt intersection_pairing(const SymplecticLattice& lat, const IntRow& a, const IntRow& b);

/// Entry (i, j) = <A_i, B_j>.
IntMatrix pairing_matrix(const IntMatrix& a, const IntMatrix& b);

/// True iff T J T^T = J.
bool is_symplectic(const IntMatrix& t);

struct CutSystemClass {
  SymplecticLattice lattice;
  IntMatrix rows;  // g x 2g

  Index genus() const { return lattice.genus; }
  IntRow row(Index i) const { return rows.row(i); }
};

/// Checks rank g, isotropy and primitivity; throws WrongRank, NotIsotropic or
/// NotPrimitive.
CutSystemClass validate_cut_system(const SymplecticLattice& lat, const IntMatrix& rows);

IntMatrix pairing_matrix(const CutSystemClass& a, const CutSystemClass& b);

/// Integer membership of v in the row lattice of `rows`.
bool in_row_span(const IntMatrix& rows, const IntRow& v);

bool same_row_span(const IntMatrix& a, const IntMatrix& b);

}  // namespace trisect
