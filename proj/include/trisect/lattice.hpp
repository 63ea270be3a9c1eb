#pragma once

// Exact integer matrix algebra. Everything here is templated on an integer
// scalar; the rest of the library instantiates it with BigInt, tests also use
// plain long long for small hand-checked cases.

#include "trisect/types.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace trisect {

namespace detail {

template <class S>
S abs_value(const S& v) {
  return v < 0 ? S(-v) : S(v);
}

template <class S>
S gcd_value(S a, S b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    S r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <class S>
struct ExtGcd {
  S g, s, t;  // g = s*a + t*b, g >= 0
};

template <class S>
ExtGcd<S> ext_gcd(const S& a, const S& b) {
  S old_r = a, r = b;
  S old_s = 1, s = 0;
  S old_t = 0, t = 1;
  while (r != 0) {
    S q = old_r / r;
    S tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Sorted sparse row used by the echelon routines; rows of the Johnson
// generator matrix have a handful of non-zeros out of hundreds of columns.
template <class S>
struct SparseRow {
  std::vector<Index> idx;
  std::vector<S> val;

  bool empty() const { return idx.empty(); }
  Index lead() const { return idx.front(); }
  const S& lead_value() const { return val.front(); }

  S at(Index c) const {
    auto it = std::lower_bound(idx.begin(), idx.end(), c);
    if (it == idx.end() || *it != c) return S(0);
    return val[static_cast<std::size_t>(it - idx.begin())];
  }

  void negate() {
    for (auto& v : val) v = -v;
  }

  // s*a + t*b
  static SparseRow combine(const S& s, const SparseRow& a, const S& t, const SparseRow& b) {
    SparseRow out;
    out.idx.reserve(a.idx.size() + b.idx.size());
    out.val.reserve(a.idx.size() + b.idx.size());
    std::size_t i = 0, j = 0;
    while (i < a.idx.size() || j < b.idx.size()) {
      S v;
      Index c;
      if (j == b.idx.size() || (i < a.idx.size() && a.idx[i] < b.idx[j])) {
        c = a.idx[i];
        v = s * a.val[i++];
      } else if (i == a.idx.size() || b.idx[j] < a.idx[i]) {
        c = b.idx[j];
        v = t * b.val[j++];
      } else {
        c = a.idx[i];
        v = s * a.val[i++] + t * b.val[j++];
      }
      if (v != 0) {
        out.idx.push_back(c);
        out.val.push_back(std::move(v));
      }
    }
    return out;
  }

  static SparseRow from_dense(const RowVec<S>& dense) {
    SparseRow out;
    for (Index c = 0; c < dense.size(); ++c) {
      if (dense(c) != 0) {
        out.idx.push_back(c);
        out.val.push_back(dense(c));
      }
    }
    return out;
  }

  static SparseRow unit(Index c) {
    SparseRow out;
    out.idx.push_back(c);
    out.val.push_back(S(1));
    return out;
  }

  RowVec<S> to_dense(Index dim) const {
    RowVec<S> out = RowVec<S>::Zero(dim);
    for (std::size_t k = 0; k < idx.size(); ++k) out(idx[k]) = val[k];
    return out;
  }
};

}  // namespace detail

template <class Scalar>
Mat<Scalar> identity_matrix(Index n) {
  return Mat<Scalar>::Identity(n, n);
}

template <class Scalar>
Mat<Scalar> direct_sum(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class Scalar>
bool is_symmetric(const Mat<Scalar>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

template <class Scalar>
bool is_zero(const Mat<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

template <class Scalar>
struct SmithDecomposition {
  Mat<Scalar> left;  // U, rows x rows, unimodular
  std::vector<Scalar> diag;
  Mat<Scalar> right;  // V, cols x cols, unimodular

  /// U * M * V as a rows x cols matrix with `diag` on the diagonal.
  Mat<Scalar> diagonal_matrix(Index rows, Index cols) const {
    Mat<Scalar> d = Mat<Scalar>::Zero(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(Index(i), Index(i)) = diag[i];
    return d;
  }

  Index rank() const {
    return Index(std::count_if(diag.begin(), diag.end(), [](const Scalar& d) { return d != 0; }));
  }
};

/// Computes U, V unimodular with U*M*V diagonal, d1 | d2 | ..., all d >= 0.
/// The pivot is always the non-zero entry of smallest absolute value in the
/// remaining block; ties go to the lowest (row, col) in row-major order.
template <class Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Mat<Scalar>& m) {
  const Index rows = m.rows(), cols = m.cols();
  Mat<Scalar> d = m;
  Mat<Scalar> u = identity_matrix<Scalar>(rows);
  Mat<Scalar> v = identity_matrix<Scalar>(cols);
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    bool finished = false;
    while (true) {
      Index pr = -1, pc = -1;
      Scalar best = 0;
      for (Index i = t; i < rows; ++i) {
        for (Index j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Scalar a = detail::abs_value(d(i, j));
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) {
        finished = true;  // remaining block is zero
        break;
      }
      if (pr != t) {
        d.row(pr).swap(d.row(t));
        u.row(pr).swap(u.row(t));
      }
      if (pc != t) {
        d.col(pc).swap(d.col(t));
        v.col(pc).swap(v.col(t));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        u.row(i) -= q * u.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        v.col(j) -= q * v.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      u.row(t) += u.row(bad);
    }
    if (finished) break;
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }

  SmithDecomposition<Scalar> out{std::move(u), {}, std::move(v)};
  out.diag.reserve(std::size_t(steps));
  for (Index t = 0; t < steps; ++t) out.diag.push_back(d(t, t));
  return out;
}

// ---------------------------------------------------------------------------
// Determinant, unimodularity, inverse

/// Fraction-free (Bareiss) determinant.
template <class Scalar>
Scalar determinant(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Mat<Scalar> a = m;
  Scalar sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Rank over the rationals by fraction-free elimination.
template <class Scalar>
Index rank(const Mat<Scalar>& m) {
  Mat<Scalar> a = m;
  Scalar prev = 1;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index piv = -1;
    for (Index i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Index i = r + 1; i < a.rows(); ++i) {
      for (Index j = c + 1; j < a.cols(); ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

template <class Scalar>
bool is_unimodular(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "unimodularity test needs a square matrix");
  return detail::abs_value(determinant(m)) == 1;
}

/// Exact inverse of a unimodular matrix, read off its Smith form: U*M*V = I
/// implies M^-1 = V*U.
template <class Scalar>
Mat<Scalar> unimodular_inverse(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "inverse of non-square matrix");
  auto snf = smith_normal_form(m);
  for (const auto& d : snf.diag)
    if (d != 1) throw Error(ErrorKind::NotUnimodular, "matrix is not invertible over the integers");
  return snf.right * snf.left;
}

// ---------------------------------------------------------------------------
// Signature

/// Signature of a symmetric, rationally non-degenerate matrix via congruence
/// diagonalization. The Schur complement R - v v^T / p is kept integral by
/// scaling with |p| and then dividing out the content, neither of which
/// changes the inertia.
template <class Scalar>
long signature(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "signature of non-square matrix");
  if (m != m.transpose()) throw Error(ErrorKind::NotSymmetric, "signature of asymmetric matrix");
  Mat<Scalar> a = m;
  long sig = 0;
  while (a.rows() > 0) {
    const Index n = a.rows();
    Index piv = -1;
    for (Index i = 0; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      Index pi = -1, pj = -1;
      for (Index i = 0; i < n && pi < 0; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) throw Error(ErrorKind::Degenerate, "symmetric matrix is degenerate");
      // e_i -> e_i + e_j makes the (i,i) entry 2*a(i,j) != 0.
      a.row(pi) += a.row(pj);
      a.col(pi) += a.col(pj);
      piv = pi;
    }
    if (piv != 0) {
      a.row(piv).swap(a.row(0));
      a.col(piv).swap(a.col(0));
    }
    const Scalar p = a(0, 0);
    const bool positive = p > 0;
    sig += positive ? 1 : -1;

    const Index r = n - 1;
    Mat<Scalar> next(r, r);
    Scalar content = 0;
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) {
        Scalar e = p * a(i + 1, j + 1) - a(i + 1, 0) * a(0, j + 1);
        if (!positive) e = -e;
        content = detail::gcd_value(content, e);
        next(i, j) = std::move(e);
      }
    }
    if (content > 1) next /= content;
    a = std::move(next);
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Echelon lattice: streaming Z-row-reduction with optional provenance.

/// Row lattice of a set of integer vectors, kept in (non-reduced) echelon
/// form. When `track` is set every basis row remembers how it was combined
/// from the inserted source rows, so membership queries return integer
/// coefficients over the sources.
template <class Scalar>
class EchelonLattice {
 public:
  explicit EchelonLattice(Index dim, bool track = false)
      : dim_(dim), track_(track), pivot_of_col_(std::size_t(dim), -1) {}

  static EchelonLattice from_rows(const Mat<Scalar>& rows, bool track = false) {
    EchelonLattice out(rows.cols(), track);
    for (Index i = 0; i < rows.rows(); ++i) out.insert(rows.row(i));
    return out;
  }

  Index dimension() const { return dim_; }
  Index rank() const { return Index(rows_.size()); }
  Index num_sources() const { return sources_; }

  /// Returns false iff the row was already in the lattice (nothing changed).
  bool insert(const RowVec<Scalar>& dense) { return insert(detail::SparseRow<Scalar>::from_dense(dense)); }

  bool insert(detail::SparseRow<Scalar> row) {
    bool changed = false;
    detail::SparseRow<Scalar> combo;
    if (track_) combo = detail::SparseRow<Scalar>::unit(sources_);
    ++sources_;
    while (!row.empty()) {
      const Index c = row.lead();
      const long slot = pivot_of_col_[std::size_t(c)];
      if (slot < 0) {
        if (row.lead_value() < 0) {
          row.negate();
          combo.negate();
        }
        pivot_of_col_[std::size_t(c)] = long(rows_.size());
        rows_.push_back(std::move(row));
        combos_.push_back(std::move(combo));
        return true;
      }
      auto& prow = rows_[std::size_t(slot)];
      auto& pcombo = combos_[std::size_t(slot)];
      const Scalar& pv = prow.lead_value();
      const Scalar rv = row.lead_value();
      if (rv % pv == 0) {
        const Scalar q = rv / pv;
        row = detail::SparseRow<Scalar>::combine(Scalar(1), row, Scalar(-q), prow);
        if (track_) combo = detail::SparseRow<Scalar>::combine(Scalar(1), combo, Scalar(-q), pcombo);
      } else {
        const auto eg = detail::ext_gcd(pv, rv);
        const Scalar a = Scalar(-rv / eg.g), b = Scalar(pv / eg.g);
        auto new_pivot = detail::SparseRow<Scalar>::combine(eg.s, prow, eg.t, row);
        auto rest = detail::SparseRow<Scalar>::combine(a, prow, b, row);
        if (track_) {
          auto new_pcombo = detail::SparseRow<Scalar>::combine(eg.s, pcombo, eg.t, combo);
          combo = detail::SparseRow<Scalar>::combine(a, pcombo, b, combo);
          pcombo = std::move(new_pcombo);
        }
        prow = std::move(new_pivot);
        row = std::move(rest);
        changed = true;
      }
    }
    return changed;
  }

  /// Integer coefficients over the inserted sources reproducing `target`, or
  /// nullopt if the target is not in the lattice. Requires tracking.
  std::optional<Vec<Scalar>> coefficients(const RowVec<Scalar>& target) const {
    if (!track_) throw Error(ErrorKind::NoIntegerSolution, "lattice built without provenance tracking");
    detail::SparseRow<Scalar> combo;
    if (!reduce(target, &combo)) return std::nullopt;
    Vec<Scalar> out = Vec<Scalar>::Zero(sources_);
    for (std::size_t k = 0; k < combo.idx.size(); ++k) out(combo.idx[k]) = combo.val[k];
    return out;
  }

  bool contains(const RowVec<Scalar>& target) const { return reduce(target, nullptr); }

  Mat<Scalar> basis() const {
    Mat<Scalar> out(rank(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i) out.row(Index(i)) = rows_[i].to_dense(dim_);
    return out;
  }

  /// Non-zero invariant factors of the lattice (equivalently of any matrix
  /// whose rows generate it), in divisibility order.
  std::vector<Scalar> invariant_factors() const {
    std::vector<detail::SparseRow<Scalar>> rows = rows_;
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].lead() < rows[b].lead(); });

    // Unit pivots: clear their column everywhere else; the pivot row is then
    // split off by column operations that touch nothing else.
    std::vector<bool> unit(rows.size(), false);
    std::vector<bool> unit_col(std::size_t(dim_), false);
    for (std::size_t k : order) {
      if (detail::abs_value(rows[k].lead_value()) != 1) continue;
      unit[k] = true;
      const Index c = rows[k].lead();
      unit_col[std::size_t(c)] = true;
      for (std::size_t other = 0; other < rows.size(); ++other) {
        if (other == k) continue;
        Scalar e = rows[other].at(c);
        if (e == 0) continue;
        Scalar q = e / rows[k].lead_value();
        rows[other] = detail::SparseRow<Scalar>::combine(Scalar(1), rows[other], Scalar(-q), rows[k]);
      }
    }
    std::vector<Scalar> out;
    std::vector<Index> keep_cols;
    for (Index c = 0; c < dim_; ++c)
      if (!unit_col[std::size_t(c)]) keep_cols.push_back(c);
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (unit[k])
        out.push_back(Scalar(1));
      else
        rest.push_back(k);
    }
    if (!rest.empty()) {
      Mat<Scalar> block = Mat<Scalar>::Zero(Index(rest.size()), Index(keep_cols.size()));
      for (std::size_t r = 0; r < rest.size(); ++r) {
        const auto& row = rows[rest[r]];
        for (std::size_t k = 0; k < row.idx.size(); ++k) {
          auto it = std::lower_bound(keep_cols.begin(), keep_cols.end(), row.idx[k]);
          block(Index(r), Index(it - keep_cols.begin())) = row.val[k];
        }
      }
      for (auto& d : smith_normal_form(block).diag)
        if (d != 0) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool reduce(const RowVec<Scalar>& target, detail::SparseRow<Scalar>* combo) const {
    auto row = detail::SparseRow<Scalar>::from_dense(target);
    while (!row.empty()) {
      const long slot = pivot_of_col_[std::size_t(row.lead())];
      if (slot < 0) return false;
      const auto& prow = rows_[std::size_t(slot)];
      if (row.lead_value() % prow.lead_value() != 0) return false;
      const Scalar q = row.lead_value() / prow.lead_value();
      row = detail::SparseRow<Scalar>::combine(Scalar(1), row, Scalar(-q), prow);
      if (combo) *combo = detail::SparseRow<Scalar>::combine(Scalar(1), *combo, q, combos_[std::size_t(slot)]);
    }
    return true;
  }

  Index dim_;
  bool track_;
  Index sources_ = 0;
  std::vector<long> pivot_of_col_;
  std::vector<detail::SparseRow<Scalar>> rows_;
  std::vector<detail::SparseRow<Scalar>> combos_;
};

/// All min(rows, cols) invariant factors of `m` (zeros last), computed through
/// the sparse echelon route. Agrees with smith_normal_form(m).diag.
template <class Scalar>
std::vector<Scalar> invariant_factors(const Mat<Scalar>& m) {
  auto factors = EchelonLattice<Scalar>::from_rows(m).invariant_factors();
  factors.resize(std::size_t(std::min(m.rows(), m.cols())), Scalar(0));
  return factors;
}

/// Rows spanning the (primitive) left kernel {u : u*M = 0}.
template <class Scalar>
Mat<Scalar> left_kernel(const Mat<Scalar>& m) {
  auto snf = smith_normal_form(m);
  const Index r = snf.rank();
  return snf.left.bottomRows(m.rows() - r);
}

}  // namespace trisect
