#include "trisect/johnson.hpp"

#include "trisect/lattice.hpp"

#include <algorithm>
#include <functional>

namespace trisect {

Index wedge_dimension(Index genus) {
  const Index d = 2 * genus;
  return d * (d - 1) * (d - 2) / 6;
}

Index triple_index(Index i, Index j, Index k, Index dim) {
  auto c2 = [](Index m) { return m * (m - 1) / 2; };
  Index idx = 0;
  for (Index a = 0; a < i; ++a) idx += c2(dim - 1 - a);
  for (Index b = i + 1; b < j; ++b) idx += dim - 1 - b;
  return idx + (k - j - 1);
}

WedgeCubeElement wedge_zero(Index genus) { return {genus, IntVector::Zero(wedge_dimension(genus))}; }

namespace {

using SparseWedge = std::vector<std::pair<Index, BigInt>>;

// 3x3 minors of [a; b; c] over the joint support.
SparseWedge wedge_sparse(const IntRow& a, const IntRow& b, const IntRow& c) {
  const Index d = a.size();
  std::vector<Index> supp;
  for (Index i = 0; i < d; ++i)
    if (a(i) != 0 || b(i) != 0 || c(i) != 0) supp.push_back(i);
  SparseWedge out;
  const std::size_t s = supp.size();
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = p + 1; q < s; ++q)
      for (std::size_t r = q + 1; r < s; ++r) {
        const Index i = supp[p], j = supp[q], k = supp[r];
        BigInt m = a(i) * (b(j) * c(k) - b(k) * c(j)) - a(j) * (b(i) * c(k) - b(k) * c(i)) +
                   a(k) * (b(i) * c(j) - b(j) * c(i));
        if (m != 0) out.emplace_back(triple_index(i, j, k, d), std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

WedgeCubeElement densify(const SparseWedge& w, Index genus) {
  WedgeCubeElement out = wedge_zero(genus);
  for (const auto& [i, v] : w) out.coords(i) = v;
  return out;
}

}  // namespace

WedgeCubeElement wedge3(const IntRow& a, const IntRow& b, const IntRow& c) {
  if (a.size() != b.size() || a.size() != c.size() || a.size() % 2 != 0)
    throw Error(ErrorKind::DimensionMismatch, "wedge factors must share one lattice");
  return densify(wedge_sparse(a, b, c), a.size() / 2);
}

bool is_three_chain(const ThreeChainClass& ch) {
  if (ch.a.size() != ch.b.size() || ch.a.size() != ch.c.size() || ch.a.size() % 2 != 0) return false;
  SymplecticLattice lat{ch.a.size() / 2};
  BigInt ab = intersection_pairing(lat, ch.a, ch.b);
  BigInt bc = intersection_pairing(lat, ch.b, ch.c);
  BigInt ac = intersection_pairing(lat, ch.a, ch.c);
  return (ab == 1 || ab == -1) && (bc == 1 || bc == -1) && ac == 0;
}

WedgeCubeElement johnson_of_3chain(const ThreeChainClass& ch) {
  if (!is_three_chain(ch)) throw Error(ErrorKind::InvalidChain, "classes do not form a 3-chain");
  return wedge3(ch.a, ch.b, ch.c);
}

bool extends_across(const CutSystemClass& lagr, const ThreeChainClass& ch) {
  auto lat = EchelonLattice<BigInt>::from_rows(lagr.rows);
  return lat.contains(ch.a) || lat.contains(ch.b) || lat.contains(ch.c);
}

std::vector<WedgeCubeElement> GeneratorFamily::values() const {
  std::vector<WedgeCubeElement> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.value);
  return out;
}

std::map<std::string, Index> GeneratorFamily::line_counts() const {
  std::map<std::string, Index> out;
  for (const auto& e : elements) ++out[e.line];
  return out;
}

namespace {

enum Target { kAB = 1, kC = 2 };

class FamilyBuilder {
 public:
  FamilyBuilder(const IntMatrix& q, Index k) : q_(q), n_(q.rows()), g_(q.rows() + k) {
    for (Index i = 0; i < g_; ++i) {
      alpha_.push_back(x(i));
      if (i < n_) {
        beta_.push_back(y(i));
        gamma_.push_back(z(i));
      } else {
        beta_.push_back(x(i));
        gamma_.push_back(y(i));
      }
    }
    la_ = std::make_unique<EchelonLattice<BigInt>>(EchelonLattice<BigInt>::from_rows(stack(alpha_)));
    lb_ = std::make_unique<EchelonLattice<BigInt>>(EchelonLattice<BigInt>::from_rows(stack(beta_)));
    lc_ = std::make_unique<EchelonLattice<BigInt>>(EchelonLattice<BigInt>::from_rows(stack(gamma_)));
    ab_.name = "TAB";
    c_.name = "TC";
  }

  Index g() const { return g_; }
  Index n() const { return n_; }

  IntRow x(Index i) const {
    IntRow v = IntRow::Zero(2 * g_);
    v(i) = 1;
    return v;
  }
  IntRow y(Index i) const {
    IntRow v = IntRow::Zero(2 * g_);
    v(g_ + i) = 1;
    return v;
  }
  // z_i = -x_i - sum_j Q_ij y_j
  IntRow z(Index i) const {
    IntRow v = -x(i);
    for (Index j = 0; j < n_; ++j) v(g_ + j) -= q_(i, j);
    return v;
  }

  // Proof-pattern generators must certify; failure is a bug.
  void require(const std::string& line, const IntRow& a, const IntRow& b, const IntRow& c, int targets) {
    ThreeChainClass ch{a, b, c};
    if (!is_three_chain(ch)) throw Error(ErrorKind::InvalidChain, line + ": not a 3-chain");
    if ((targets & kAB) && !(hits(*la_, ch) && hits(*lb_, ch)))
      throw Error(ErrorKind::InvalidChain, line + ": does not extend across alpha and beta");
    if ((targets & kC) && !hits(*lc_, ch)) throw Error(ErrorKind::InvalidChain, line + ": does not extend across gamma");
    if (targets & kAB) add(ab_, ab_seen_, line, ch);
    if (targets & kC) add(c_, c_seen_, line, ch);
  }

  // Candidates kept only where they certify.
  void offer(const std::string& line, const IntRow& a, const IntRow& b, const IntRow& c) {
    ThreeChainClass ch{a, b, c};
    if (!is_three_chain(ch)) throw Error(ErrorKind::InvalidChain, line + ": not a 3-chain");
    if (hits(*la_, ch) && hits(*lb_, ch)) add(ab_, ab_seen_, line, ch);
    if (hits(*lc_, ch)) add(c_, c_seen_, line, ch);
  }

  std::pair<GeneratorFamily, GeneratorFamily> finish() { return {std::move(ab_), std::move(c_)}; }

 private:
  static IntMatrix stack(const std::vector<IntRow>& rows) {
    IntMatrix m(Index(rows.size()), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(Index(i)) = rows[i];
    return m;
  }

  static bool hits(const EchelonLattice<BigInt>& l, const ThreeChainClass& ch) {
    return l.contains(ch.a) || l.contains(ch.b) || l.contains(ch.c);
  }

  void add(GeneratorFamily& fam, std::map<SparseWedge, bool>& seen, const std::string& line, const ThreeChainClass& ch) {
    SparseWedge w = wedge_sparse(ch.a, ch.b, ch.c);
    if (w.empty() || !seen.emplace(w, true).second) return;
    fam.elements.push_back(Generator{ch, densify(w, g_), line});
  }

  IntMatrix q_;
  Index n_, g_;
  std::vector<IntRow> alpha_, beta_, gamma_;
  std::unique_ptr<EchelonLattice<BigInt>> la_, lb_, lc_;
  GeneratorFamily ab_, c_;
  std::map<SparseWedge, bool> ab_seen_, c_seen_;
};

}  // namespace

std::pair<GeneratorFamily, GeneratorFamily> tab_tc_generators(const IntMatrix& q, Index k) {
  if (q.rows() != q.cols() || q != q.transpose() || !is_unimodular(q))
    throw Error(ErrorKind::NotUnimodular, "generator families need a symmetric unimodular form");
  FamilyBuilder fb(q, k);
  const Index n = fb.n(), g = fb.g();
  auto X = [&](Index i) { return fb.x(i); };
  auto Y = [&](Index i) { return fb.y(i); };
  auto Z = [&](Index i) { return fb.z(i); };
  auto W = [&](Index i) { return IntRow(-fb.y(i)); };

  std::vector<Index> left, right;
  for (Index i = 0; i < n; ++i) left.push_back(i);
  for (Index i = n; i < g; ++i) right.push_back(i);

  auto pairs = [](const std::vector<Index>& s, const std::function<void(Index, Index)>& f) {
    for (Index a : s)
      for (Index b : s)
        if (a != b) f(a, b);
  };
  auto triples = [](const std::vector<Index>& s, const std::function<void(Index, Index, Index)>& f) {
    for (Index a : s)
      for (Index b : s)
        for (Index c : s)
          if (a != b && b != c && a != c) f(a, b, c);
  };

  // Stabilization handles only.
  pairs(right, [&](Index l, Index m) {
    fb.require("R1", X(l), Y(l), X(l) + X(m), kAB | kC);
    fb.require("R2", Y(l), X(l), Y(l) + Y(m), kAB | kC);
  });
  triples(right, [&](Index l, Index m, Index p) {
    fb.require("R3", X(l), Y(l) + X(m), Y(m) + Y(p), kAB | kC);
    fb.require("R4", Y(l), X(l) + Y(m), X(m) + X(p), kAB | kC);
    fb.require("R5", X(l), Y(l) + X(m), Y(m) + X(p), kAB);
    fb.require("R6", Y(l), X(l) + Y(m), X(m) + Y(p), kC);
  });

  // Handles carrying Q.
  pairs(left, [&](Index i, Index j) {
    fb.require("L1", X(i), Y(i), X(i) + X(j), kAB);
    fb.require("L2", Y(i), X(i), Y(i) + Y(j), kAB);
    fb.require("C1", Y(i), Z(i), Y(i) + Y(j), kC);
  });
  triples(left, [&](Index i, Index j, Index l) {
    fb.require("L3", X(i) + X(l), Y(i), X(i) + X(j), kAB);
    fb.require("L4", Y(i) + Y(l), X(i), Y(i) + Y(j), kAB);
    fb.require("C2", Y(i) + Y(l), Z(i), Y(i) + Y(j), kC);
    fb.require("C3", Z(i), W(i) + Z(j), W(j) + Z(l), kC);
    fb.require("C4", Z(i), W(i) + Z(j), W(j) + W(l), kC);
  });

  // Mixed indices.
  for (Index i : left)
    for (Index l : right) {
      fb.require("M1", X(i), Y(i), X(i) + X(l), kAB);
      fb.require("M4", X(i), Y(i), X(i) + Y(l), kAB);
      fb.require("M7", X(l), Y(l), X(l) + X(i), kAB);
      fb.require("M10", X(l), Y(l), X(l) + Y(i), kAB);
      for (Index j : left) {
        if (j == i) continue;
        fb.require("M2", X(i) + X(j), Y(i), X(i) + X(l), kAB);
        fb.require("M3", X(i), Y(i) + Y(j), X(i) + X(l), kAB);
        fb.require("M5", X(i) + X(j), Y(i), X(i) + Y(l), kAB);
        fb.require("M6", X(i), Y(i) + Y(j), X(i) + Y(l), kAB);
        fb.require("WX1", X(i), Y(i) + X(l), X(i) + X(j), kAB);
        fb.require("WY1", Y(i), Z(i) + Y(l), Y(i) + Y(j), kC);
      }
      for (Index m : right) {
        if (m == l) continue;
        fb.require("M8", X(l) + X(m), Y(l), X(l) + X(i), kAB);
        fb.require("M9", X(l), Y(l) + Y(m), X(l) + X(i), kAB);
        fb.require("M11", X(l) + X(m), Y(l), X(l) + Y(i), kAB);
        fb.require("M12", X(l), Y(l) + Y(m), X(l) + Y(i), kAB);
        fb.require("WX2", X(i), Y(i) + X(l), X(i) + X(m), kAB);
        fb.require("WY2", Y(i), Z(i) + Y(l), Y(i) + Y(m), kC);
      }
    }

  // Chains written in a symplectic frame (u, v) adapted to one handlebody:
  // the u's span its Lagrangian. The patterns above miss some directions when
  // a block has fewer than three handles; these fill them in.
  struct Frame {
    std::string name;
    std::vector<IntRow> u, v;
  };
  std::vector<Frame> frames(3);
  frames[0].name = "alpha";
  frames[1].name = "beta";
  frames[2].name = "gamma";
  for (Index i = 0; i < g; ++i) {
    const bool l = i < n;
    frames[0].u.push_back(X(i));
    frames[0].v.push_back(Y(i));
    frames[1].u.push_back(l ? Y(i) : X(i));
    frames[1].v.push_back(l ? IntRow(-X(i)) : Y(i));
    frames[2].u.push_back(l ? Z(i) : Y(i));
    frames[2].v.push_back(l ? IntRow(-Y(i)) : IntRow(-X(i)));
  }
  std::vector<Index> all;
  for (Index i = 0; i < g; ++i) all.push_back(i);
  for (const auto& f : frames) {
    triples(all, [&](Index a, Index b, Index c) {
      fb.offer(f.name + ".1", f.u[a], f.v[a] + f.u[b], f.v[b] + f.u[c]);
      fb.offer(f.name + ".2", f.v[a], f.u[a] + f.v[b], f.u[b] + f.u[c]);
      fb.offer(f.name + ".3", f.u[a], f.v[a] + f.u[b], f.v[b] + f.v[c]);
    });
  }
  return fb.finish();
}

SpanCertificate spans_wedge_cube(const std::vector<WedgeCubeElement>& family, Index genus) {
  SpanCertificate cert;
  cert.dimension = wedge_dimension(genus);
  cert.num_generators = Index(family.size());
  EchelonLattice<BigInt> lat(cert.dimension);
  for (const auto& w : family) {
    if (w.coords.size() != cert.dimension) throw Error(ErrorKind::DimensionMismatch, "element of the wrong wedge cube");
    lat.insert(IntRow(w.coords.transpose()));
  }
  cert.invariant_factors = lat.invariant_factors();
  cert.invariant_factors.resize(std::size_t(std::min(cert.dimension, cert.num_generators)), BigInt(0));
  Index ones = 0;
  for (const auto& d : cert.invariant_factors) {
    ++cert.factor_summary[d.str()];
    if (d == 1) ++ones;
  }
  cert.spans_over_z = ones == cert.dimension;
  return cert;
}

struct JohnsonDecomposer::Impl {
  Index genus = 0;
  std::vector<WedgeCubeElement> ab, c;
  std::vector<Index> kept;  // sources that enlarged the lattice, in insertion order
  std::unique_ptr<EchelonLattice<BigInt>> lattice;
};

JohnsonDecomposer::JohnsonDecomposer(const GeneratorFamily& ab, const GeneratorFamily& c) : impl_(std::make_unique<Impl>()) {
  impl_->ab = ab.values();
  impl_->c = c.values();
  if (!impl_->ab.empty())
    impl_->genus = impl_->ab.front().genus;
  else if (!impl_->c.empty())
    impl_->genus = impl_->c.front().genus;
  const Index dim = wedge_dimension(impl_->genus);
  auto source = [&](Index i) -> const WedgeCubeElement& {
    const Index na = Index(impl_->ab.size());
    return i < na ? impl_->ab[std::size_t(i)] : impl_->c[std::size_t(i - na)];
  };
  const Index total = Index(impl_->ab.size() + impl_->c.size());

  // Provenance over every generator makes the combination rows dense. A first
  // pass finds the generators that actually enlarge the lattice; the rest are
  // already integer combinations of those.
  EchelonLattice<BigInt> scout(dim);
  for (Index i = 0; i < total; ++i)
    if (scout.insert(IntRow(source(i).coords.transpose()))) impl_->kept.push_back(i);

  impl_->lattice = std::make_unique<EchelonLattice<BigInt>>(dim, true);
  for (Index i : impl_->kept) impl_->lattice->insert(IntRow(source(i).coords.transpose()));
}

JohnsonDecomposer::~JohnsonDecomposer() = default;
JohnsonDecomposer::JohnsonDecomposer(JohnsonDecomposer&&) noexcept = default;

Decomposition JohnsonDecomposer::decompose(const WedgeCubeElement& target) const {
  const Index genus = impl_->ab.empty() && impl_->c.empty() ? target.genus : impl_->genus;
  if (target.genus != genus) throw Error(ErrorKind::DimensionMismatch, "target lives in a different wedge cube");
  auto coeffs = impl_->lattice->coefficients(IntRow(target.coords.transpose()));
  if (!coeffs) throw Error(ErrorKind::NoIntegerSolution, "target is not an integer combination of the families");

  const Index na = Index(impl_->ab.size()), nc = Index(impl_->c.size());
  Decomposition out{IntVector::Zero(na), IntVector::Zero(nc), wedge_zero(genus), wedge_zero(genus), wedge_zero(genus)};
  for (std::size_t s = 0; s < impl_->kept.size(); ++s) {
    const Index i = impl_->kept[s];
    if (i < na)
      out.coeffs_ab(i) = (*coeffs)(Index(s));
    else
      out.coeffs_c(i - na) = (*coeffs)(Index(s));
  }
  for (Index i = 0; i < na; ++i)
    if (out.coeffs_ab(i) != 0) out.tau_a.coords += out.coeffs_ab(i) * impl_->ab[std::size_t(i)].coords;
  for (Index i = 0; i < nc; ++i)
    if (out.coeffs_c(i) != 0) out.tau_c.coords += out.coeffs_c(i) * impl_->c[std::size_t(i)].coords;
  out.residual.coords = target.coords - out.tau_a.coords - out.tau_c.coords;
  if (!is_zero<BigInt>(out.residual.coords))
    throw Error(ErrorKind::NoIntegerSolution, "recombined witness does not reproduce the target");
  return out;
}

Decomposition decompose_johnson(const WedgeCubeElement& target, const GeneratorFamily& ab, const GeneratorFamily& c) {
  return JohnsonDecomposer(ab, c).decompose(target);
}

}  // namespace trisect
