#include "trisect/linking.hpp"

namespace trisect {

const char* to_string(LinkingKind kind) { return kind == LinkingKind::L2 ? "l2" : "l3"; }

BigInt LinkingForm::operator()(const IntRow& a, const IntRow& b) const {
  if (a.size() != matrix.rows() || b.size() != matrix.rows())
    throw Error(ErrorKind::IncompleteLinkingData, "class length does not match the linking matrix");
  return (a * matrix * b.transpose())(0, 0);
}

LinkingForm linking_form_from_splitting(const IntMatrix& l1, const IntMatrix& l2, LinkingKind kind) {
  const Index g = l1.rows();
  IntMatrix t(2 * g, l1.cols());
  t.topRows(g) = l1;
  t.bottomRows(g) = l2;
  if (!is_unimodular(t)) throw Error(ErrorKind::NotUnimodular, "Lagrangians do not split the lattice");
  IntMatrix c = unimodular_inverse(t);
  // v = (v c1) l1 + (v c2) l2
  IntMatrix m = c.leftCols(g) * pairing_matrix(l1, l2) * c.rightCols(g).transpose();
  return {m.transpose(), kind};
}

LinkingForm linking_form(const PseudotrisectionDiagram& d, LinkingKind kind) {
  require_valid(d);
  if (kind == LinkingKind::L2) return linking_form_from_splitting(d.beta(), d.gamma(), kind);
  return linking_form_from_splitting(d.gamma(), d.alpha(), kind);
}

bool satisfies_linking_symmetry(const LinkingForm& l) {
  return IntMatrix(l.matrix.transpose() - l.matrix) == symplectic_form(l.genus());
}

QuadraticEnhancement enhancement(const LinkingForm& l) {
  QuadraticEnhancement q{l.genus(), {}};
  for (Index a = 0; a < l.matrix.rows(); ++a) q.basis_values.push_back(l.matrix(a, a) % 2 == 0 ? 0 : 1);
  return q;
}

int q_eval(const QuadraticEnhancement& q, const IntRow& v) {
  const Index g = q.genus;
  if (v.size() != 2 * g) throw Error(ErrorKind::DimensionMismatch, "class length does not match 2g");
  std::vector<int> c(std::size_t(2 * g));
  for (Index a = 0; a < 2 * g; ++a) c[std::size_t(a)] = v(a) % 2 == 0 ? 0 : 1;
  int s = 0;
  for (Index a = 0; a < 2 * g; ++a) s ^= c[std::size_t(a)] & q.basis_values[std::size_t(a)];
  // The only pairs a < b with <e_a, e_b> odd are (x_i, y_i).
  for (Index i = 0; i < g; ++i) s ^= c[std::size_t(i)] & c[std::size_t(g + i)];
  return s;
}

bool q2_equals_q3(const PseudotrisectionDiagram& d) {
  return enhancement(linking_form(d, LinkingKind::L2)).basis_values ==
         enhancement(linking_form(d, LinkingKind::L3)).basis_values;
}

void validate_subsurface_basis(const SubsurfaceBasis& s) {
  if (s.a.rows() != s.b.rows() || s.a.cols() != s.b.cols() || s.a.cols() % 2 != 0)
    throw Error(ErrorKind::InvalidBasis, "a and b must be h x 2g");
  const Index h = s.a.rows();
  if (!is_zero(pairing_matrix(s.a, s.a)) || !is_zero(pairing_matrix(s.b, s.b)) ||
      pairing_matrix(s.a, s.b) != identity_matrix<BigInt>(h))
    throw Error(ErrorKind::InvalidBasis, "pairs are not symplectic");
}

int arf_invariant(const QuadraticEnhancement& q, const SubsurfaceBasis& s) {
  validate_subsurface_basis(s);
  int arf = 0;
  for (Index i = 0; i < s.size(); ++i) arf ^= q_eval(q, s.a.row(i)) & q_eval(q, s.b.row(i));
  return arf;
}

BigInt casson_knot_invariant(const LinkingForm& l, const SubsurfaceBasis& s) {
  if (s.a.cols() != l.matrix.rows())
    throw Error(ErrorKind::IncompleteLinkingData, "linking data does not cover the subsurface classes");
  validate_subsurface_basis(s);
  const Index h = s.size();
  // la(i, j) = l(a_i, a_j) etc.
  IntMatrix la = s.a * l.matrix * s.a.transpose();
  IntMatrix lb = s.b * l.matrix * s.b.transpose();
  IntMatrix lab = s.a * l.matrix * s.b.transpose();
  IntMatrix lba = s.b * l.matrix * s.a.transpose();
  BigInt total = 0;
  for (Index i = 0; i < h; ++i) {
    total += la(i, i) * lb(i, i) - lab(i, i) * lba(i, i);
    for (Index j = i + 1; j < h; ++j) total += 2 * (la(i, j) * lb(i, j) - lab(i, j) * lab(j, i));
  }
  return total;
}

SubsurfaceBasis separating_class_subsurface(Index genus, const IntMatrix& side_classes) {
  if (side_classes.cols() != 2 * genus) throw Error(ErrorKind::DimensionMismatch, "class length does not match 2g");
  IntMatrix span = side_classes;
  if (rank(span) != span.rows()) span = EchelonLattice<BigInt>::from_rows(side_classes).basis();
  if (span.rows() % 2 != 0) throw Error(ErrorKind::OddRank, "side classes span an odd-rank subspace");
  const Index h = span.rows() / 2;
  SubsurfaceBasis out{IntMatrix(h, 2 * genus), IntMatrix(h, 2 * genus)};
  SymplecticLattice lat{genus};

  for (Index step = 0; step < h; ++step) {
    const Index m = span.rows();
    IntRow a = span.row(0);
    IntMatrix tail = span.bottomRows(m - 1);
    IntMatrix p(1, m - 1);
    for (Index j = 0; j < m - 1; ++j) p(0, j) = intersection_pairing(lat, a, tail.row(j));
    // Rebase the tail so that a pairs with its first vector only:
    // p V = (+-1, 0, ..., 0).
    auto snf = smith_normal_form(p);
    if (snf.diag.empty() || snf.diag[0] != 1)
      throw Error(ErrorKind::DegeneratePairing, "intersection pairing on the span is not unimodular");
    tail = IntMatrix(snf.right.transpose()) * tail;
    IntRow b = tail.row(0);
    if (intersection_pairing(lat, a, b) < 0) b = -b;
    out.a.row(step) = a;
    out.b.row(step) = b;

    IntMatrix rest(m - 2, 2 * genus);
    for (Index j = 1; j < m - 1; ++j) {
      IntRow w = tail.row(j);
      rest.row(j - 1) = w + intersection_pairing(lat, b, w) * a;
    }
    span = rest;
  }
  validate_subsurface_basis(out);
  return out;
}

}  // namespace trisect
