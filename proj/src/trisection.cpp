#include "trisect/trisection.hpp"

#include "trisect/forms.hpp"

namespace trisect {

std::string ValidityFlags::describe() const {
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out += "; ";
    out += s;
  };
  if (!ab_free_rank_k) add("(alpha, beta) does not have the homology of #_k S^1 x S^2");
  if (!bc_unimodular) add("(beta, gamma) pairing is not unimodular");
  if (!ca_unimodular) add("(gamma, alpha) pairing is not unimodular");
  return out.empty() ? "ok" : out;
}

ValidityFlags check_validity(const HeegaardTriple& t) {
  ValidityFlags f;
  f.ab_free_rank_k = is_algebraically_standard(t.ab(), t.k);
  f.bc_unimodular = is_homology_sphere(t.bc());
  f.ca_unimodular = is_homology_sphere(t.ca());
  return f;
}

PseudotrisectionDiagram make_diagram(const HeegaardTriple& t) { return {t, check_validity(t)}; }

PseudotrisectionDiagram make_diagram(const IntMatrix& alpha, const IntMatrix& beta, const IntMatrix& gamma, Index k) {
  return make_diagram(make_triple(alpha, beta, gamma, k));
}

void require_valid(const PseudotrisectionDiagram& d) {
  if (!d.flags.valid()) throw Error(ErrorKind::InvalidDiagram, d.flags.describe());
}

namespace {

// The pieces of the k-reduction. Rows of k_part span L_alpha ∩ L_beta;
// a_part, b_part complete it to bases of L_alpha, L_beta; g_part spans the
// annihilator of K inside L_gamma and g_rest completes it.
struct Reduction {
  IntMatrix k_part, a_part, b_part, g_part, g_rest, form;
};

Reduction reduce(const PseudotrisectionDiagram& d) {
  require_valid(d);
  const Index g = d.genus(), k = d.k(), n = g - k;
  const IntMatrix& A = d.alpha();
  const IntMatrix& B = d.beta();
  const IntMatrix& C = d.gamma();
  Reduction r;

  auto snf_ab = smith_normal_form(pairing_matrix(A, B));
  r.k_part = snf_ab.left.bottomRows(k) * A;
  r.a_part = snf_ab.left.topRows(n) * A;
  auto snf_ba = smith_normal_form(pairing_matrix(B, A));
  r.b_part = snf_ba.left.topRows(n) * B;

  if (k == 0) {
    r.g_part = C;
    r.g_rest = IntMatrix(0, C.cols());
  } else {
    IntMatrix m = pairing_matrix(C, r.k_part);
    IntMatrix bottom = m.bottomRows(k);
    if (is_unimodular(bottom)) {
      // Eliminate against the last k gamma classes; keeps the leading gamma
      // classes untouched whenever they already pair trivially with K.
      r.g_part = C.topRows(n) - m.topRows(n) * unimodular_inverse(bottom) * C.bottomRows(k);
      r.g_rest = C.bottomRows(k);
    } else {
      auto snf = smith_normal_form(m);
      if (snf.rank() != k) throw Error(ErrorKind::NonInvertiblePairing, "gamma does not pair onto L_alpha ∩ L_beta");
      r.g_part = snf.left.bottomRows(n) * C;
      r.g_rest = snf.left.topRows(k) * C;
    }
  }

  IntMatrix ab = pairing_matrix(r.a_part, r.b_part);
  if (!is_unimodular(ab)) throw Error(ErrorKind::NonInvertiblePairing, "reduced alpha/beta pairing is not invertible");
  IntMatrix q = IntMatrix(BigInt(kFormSign) * pairing_matrix(r.g_part, r.b_part)) * unimodular_inverse(ab) *
                pairing_matrix(r.g_part, r.a_part).transpose();
  if (q != q.transpose()) throw Error(ErrorKind::AsymmetricResult, "computed form is not symmetric");
  r.form = q;
  return r;
}

IntMatrix unit_rows(Index g, bool y, Index from, Index count) {
  IntMatrix out = IntMatrix::Zero(count, 2 * g);
  for (Index i = 0; i < count; ++i) out(i, (y ? g : 0) + from + i) = 1;
  return out;
}

}  // namespace

IntersectionForm intersection_form(const PseudotrisectionDiagram& d) {
  if (d.genus() == 0) {
    require_valid(d);
    return {IntMatrix(0, 0), ""};
  }
  return {reduce(d).form, ""};
}

PseudotrisectionDiagram standard_pseudotrisection(const IntMatrix& q, Index k) {
  if (q.rows() != q.cols()) throw Error(ErrorKind::NotSquare, "form must be square");
  if (q != q.transpose()) throw Error(ErrorKind::NotSymmetric, "form must be symmetric");
  if (!is_unimodular(q)) throw Error(ErrorKind::NotUnimodular, "form must be unimodular");
  if (k < 0) throw Error(ErrorKind::InvalidDiagram, "k must be non-negative");
  const Index n = q.rows(), g = n + k;

  IntMatrix alpha = unit_rows(g, false, 0, g);
  IntMatrix beta(g, 2 * g);
  beta.topRows(n) = unit_rows(g, true, 0, n);
  beta.bottomRows(k) = unit_rows(g, false, n, k);
  IntMatrix gamma(g, 2 * g);
  IntMatrix z = IntMatrix::Zero(n, 2 * g);
  z.leftCols(n) = -identity_matrix<BigInt>(n);
  z.middleCols(g, n) = -q;
  gamma.topRows(n) = z;
  gamma.bottomRows(k) = unit_rows(g, true, n, k);
  return make_diagram(alpha, beta, gamma, k);
}

PseudotrisectionDiagram e8_figure_diagram() {
  const Index g = 8;
  IntMatrix alpha = unit_rows(g, false, 0, g);
  IntMatrix beta = unit_rows(g, true, 0, g);
  IntMatrix gamma(g, 2 * g);
  gamma.leftCols(g) = e8_form();
  gamma.rightCols(g) = identity_matrix<BigInt>(g);
  return make_diagram(alpha, beta, gamma, 0);
}

Standardization standardize(const PseudotrisectionDiagram& d) {
  const Index g = d.genus(), k = d.k(), n = g - k;
  if (g == 0) {
    require_valid(d);
    return {d, IntMatrix(0, 0), IntMatrix(0, 0)};
  }
  Reduction r = reduce(d);
  const IntMatrix& B = d.beta();

  IntMatrix yk(k, 2 * g), b_perp = B;
  if (k > 0) {
    IntMatrix p = pairing_matrix(r.k_part, r.g_rest);
    if (!is_unimodular(p)) throw Error(ErrorKind::StandardizationFailed, "K does not pair unimodularly with gamma");
    yk = unimodular_inverse(p).transpose() * r.g_rest;
    b_perp = left_kernel(pairing_matrix(B, yk)) * B;
  }
  IntMatrix gb = pairing_matrix(r.g_part, b_perp);
  if (!is_unimodular(gb)) throw Error(ErrorKind::StandardizationFailed, "gamma does not pair unimodularly with beta");
  IntMatrix yn = IntMatrix(-unimodular_inverse(gb).transpose()) * b_perp;
  IntMatrix xn = IntMatrix(-r.g_part) - r.form * yn;

  auto la = EchelonLattice<BigInt>::from_rows(d.alpha());
  for (Index i = 0; i < n; ++i)
    if (!la.contains(xn.row(i))) throw Error(ErrorKind::StandardizationFailed, "new x class escapes L_alpha");

  IntMatrix t(2 * g, 2 * g);
  t.topRows(n) = xn;
  t.middleRows(n, k) = r.k_part;
  t.middleRows(g, n) = yn;
  t.bottomRows(k) = yk;
  if (!is_symplectic(t)) throw Error(ErrorKind::StandardizationFailed, "new basis is not symplectic");

  PseudotrisectionDiagram target = standard_pseudotrisection(r.form, k);
  PseudotrisectionDiagram moved = change_basis(d, t);
  if (!same_row_span(moved.alpha(), target.alpha()) || !same_row_span(moved.beta(), target.beta()) ||
      !same_row_span(moved.gamma(), target.gamma()))
    throw Error(ErrorKind::StandardizationFailed, "cut systems do not match the standard shape");
  return {target, t, r.form};
}

PseudotrisectionDiagram standardize_basis(const PseudotrisectionDiagram& d) { return standardize(d).diagram; }

PseudotrisectionDiagram cyclic_rotate(const PseudotrisectionDiagram& d) {
  const auto& t = d.triple;
  Index k = heegaard_homology(t.bc()).free_rank;
  return make_diagram(HeegaardTriple{t.lattice, t.b, t.c, t.a, k});
}

PseudotrisectionDiagram change_basis(const PseudotrisectionDiagram& d, const IntMatrix& t) {
  if (!is_symplectic(t) || t.rows() != d.triple.lattice.dim())
    throw Error(ErrorKind::InvalidBasis, "change of basis must be a symplectic matrix of size 2g");
  IntMatrix tinv = unimodular_inverse(t);
  return make_diagram(d.alpha() * tinv, d.beta() * tinv, d.gamma() * tinv, d.k());
}

PseudotrisectionDiagram handleslide(const PseudotrisectionDiagram& d, int which, const IntMatrix& g) {
  if (g.rows() != d.genus() || !is_unimodular(g))
    throw Error(ErrorKind::NotUnimodular, "handleslide matrix must be a unimodular g x g matrix");
  IntMatrix a = d.alpha(), b = d.beta(), c = d.gamma();
  if (which == 0)
    a = g * a;
  else if (which == 1)
    b = g * b;
  else
    c = g * c;
  return make_diagram(a, b, c, d.k());
}

}  // namespace trisect
