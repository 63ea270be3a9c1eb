#include "trisect/symplectic.hpp"

namespace trisect {

IntMatrix symplectic_form(Index genus) {
  IntMatrix j = IntMatrix::Zero(2 * genus, 2 * genus);
  for (Index i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

IntRow basis_x(Index genus, Index i) {
  IntRow v = IntRow::Zero(2 * genus);
  v(i) = 1;
  return v;
}

IntRow basis_y(Index genus, Index i) {
  IntRow v = IntRow::Zero(2 * genus);
  v(genus + i) = 1;
  return v;
}

namespace {

// a J b^T without forming J.
BigInt pair_rows(const IntRow& a, const IntRow& b, Index g) {
  BigInt s = 0;
  for (Index i = 0; i < g; ++i) {
    s += a(i) * b(g + i);
    s -= a(g + i) * b(i);
  }
  return s;
}

}  // namespace

BigInt intersection_pairing(const SymplecticLattice& lat, const IntRow& a, const IntRow& b) {
  if (a.size() != lat.dim() || b.size() != lat.dim())
    throw Error(ErrorKind::DimensionMismatch, "class length does not match 2g = " + std::to_string(lat.dim()));
  return pair_rows(a, b, lat.genus);
}

IntMatrix pairing_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols() || a.cols() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "cut systems live on different lattices");
  const Index g = a.cols() / 2;
  IntMatrix out(a.rows(), b.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.rows(); ++j) out(i, j) = pair_rows(a.row(i), b.row(j), g);
  return out;
}

bool is_symplectic(const IntMatrix& t) {
  if (t.rows() != t.cols() || t.rows() % 2 != 0) return false;
  return pairing_matrix(t, t) == symplectic_form(t.rows() / 2);
}

CutSystemClass validate_cut_system(const SymplecticLattice& lat, const IntMatrix& rows) {
  if (rows.cols() != lat.dim())
    throw Error(ErrorKind::DimensionMismatch, "cut system rows must have length " + std::to_string(lat.dim()));
  if (rows.rows() != lat.genus)
    throw Error(ErrorKind::WrongRank, "cut system needs exactly g = " + std::to_string(lat.genus) + " classes");
  if (!is_zero(pairing_matrix(rows, rows)))
    throw Error(ErrorKind::NotIsotropic, "some pair of classes has non-zero intersection");
  auto factors = invariant_factors(rows);
  for (const auto& d : factors) {
    if (d == 0) throw Error(ErrorKind::WrongRank, "classes are linearly dependent");
    if (d != 1) throw Error(ErrorKind::NotPrimitive, "span is not a direct summand (invariant factor " + d.str() + ")");
  }
  return CutSystemClass{lat, rows};
}

IntMatrix pairing_matrix(const CutSystemClass& a, const CutSystemClass& b) {
  if (!(a.lattice == b.lattice)) throw Error(ErrorKind::DimensionMismatch, "cut systems live on different lattices");
  return pairing_matrix(a.rows, b.rows);
}

bool in_row_span(const IntMatrix& rows, const IntRow& v) {
  return EchelonLattice<BigInt>::from_rows(rows).contains(v);
}

bool same_row_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  auto la = EchelonLattice<BigInt>::from_rows(a);
  auto lb = EchelonLattice<BigInt>::from_rows(b);
  for (Index i = 0; i < a.rows(); ++i)
    if (!lb.contains(a.row(i))) return false;
  for (Index i = 0; i < b.rows(); ++i)
    if (!la.contains(b.row(i))) return false;
  return true;
}

}  // namespace trisect
