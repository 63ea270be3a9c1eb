#include "trisect/heegaard.hpp"

namespace trisect {

HeegaardTriple make_triple(const IntMatrix& alpha, const IntMatrix& beta, const IntMatrix& gamma, Index k) {
  if (alpha.cols() % 2 != 0) throw Error(ErrorKind::DimensionMismatch, "class length must be even");
  SymplecticLattice lat{alpha.cols() / 2};
  if (k < 0 || k > lat.genus) throw Error(ErrorKind::InvalidDiagram, "k must lie in [0, g]");
  return HeegaardTriple{lat, validate_cut_system(lat, alpha), validate_cut_system(lat, beta),
                        validate_cut_system(lat, gamma), k};
}

HomologyReport heegaard_homology(const HeegaardPair& p) {
  HomologyReport r;
  for (const auto& d : smith_normal_form(pairing_matrix(p.a, p.b)).diag) {
    if (d == 0)
      ++r.free_rank;
    else if (d != 1)
      r.invariant_factors.push_back(d);
  }
  r.is_homology_sphere = r.invariant_factors.empty() && r.free_rank == 0;
  r.is_s1s2_connected_sum_homology = r.invariant_factors.empty();
  r.s1s2_count = r.is_s1s2_connected_sum_homology ? r.free_rank : 0;
  return r;
}

bool is_homology_sphere(const HeegaardPair& p) {
  return p.a.genus() == 0 || is_unimodular(pairing_matrix(p.a, p.b));
}

bool is_algebraically_standard(const HeegaardPair& p, Index k) {
  auto r = heegaard_homology(p);
  return r.invariant_factors.empty() && r.free_rank == k;
}

IntMatrix embed_left(const IntMatrix& rows, Index g1, Index g2) {
  IntMatrix out = IntMatrix::Zero(rows.rows(), 2 * (g1 + g2));
  out.leftCols(g1) = rows.leftCols(g1);
  out.middleCols(g1 + g2, g1) = rows.rightCols(g1);
  return out;
}

IntMatrix embed_right(const IntMatrix& rows, Index g1, Index g2) {
  IntMatrix out = IntMatrix::Zero(rows.rows(), 2 * (g1 + g2));
  out.middleCols(g1, g2) = rows.leftCols(g2);
  out.rightCols(g2) = rows.rightCols(g2);
  return out;
}

namespace {

CutSystemClass sum_systems(const CutSystemClass& s, const CutSystemClass& t, const SymplecticLattice& lat) {
  const Index g1 = s.genus(), g2 = t.genus();
  IntMatrix rows(g1 + g2, lat.dim());
  rows.topRows(g1) = embed_left(s.rows, g1, g2);
  rows.bottomRows(g2) = embed_right(t.rows, g1, g2);
  return CutSystemClass{lat, rows};
}

}  // namespace

HeegaardTriple connected_sum(const HeegaardTriple& t1, const HeegaardTriple& t2) {
  SymplecticLattice lat{t1.genus() + t2.genus()};
  return HeegaardTriple{lat, sum_systems(t1.a, t2.a, lat), sum_systems(t1.b, t2.b, lat),
                        sum_systems(t1.c, t2.c, lat), t1.k + t2.k};
}

HeegaardTriple empty_triple() {
  SymplecticLattice lat{0};
  CutSystemClass e{lat, IntMatrix(0, 0)};
  return HeegaardTriple{lat, e, e, e, 0};
}

HeegaardTriple stabilize(const HeegaardTriple& t, Index n) {
  SymplecticLattice one{1};
  IntMatrix x(1, 2), y(1, 2);
  x << 1, 0;
  y << 0, 1;
  HeegaardTriple s1{one, CutSystemClass{one, x}, CutSystemClass{one, x}, CutSystemClass{one, y}, 1};
  HeegaardTriple out = t;
  for (Index i = 0; i < n; ++i) out = connected_sum(out, s1);
  return out;
}

}  // namespace trisect
