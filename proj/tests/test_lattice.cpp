#include "oracles.hpp"

#include "trisect/forms.hpp"
#include "trisect/lattice.hpp"

#include <doctest.h>

using namespace trisect;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(Index(rows.size()), Index(rows.begin()->size()));
  Index i = 0;
  for (auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_snf(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  CHECK(snf.diag.size() == std::size_t(std::min(m.rows(), m.cols())));
  CHECK(IntMatrix(snf.left * m * snf.right) == snf.diagonal_matrix(m.rows(), m.cols()));
  CHECK(abs(oracle::det(snf.left)) == 1);
  CHECK(abs(oracle::det(snf.right)) == 1);
  for (std::size_t i = 0; i < snf.diag.size(); ++i) {
    CHECK(snf.diag[i] >= 0);
    if (i + 1 < snf.diag.size()) {
      if (snf.diag[i] == 0)
        CHECK(snf.diag[i + 1] == 0);
      else
        CHECK(snf.diag[i + 1] % snf.diag[i] == 0);
    }
  }
  if (m.rows() == m.cols()) {
    BigInt prod = 1;
    for (auto& d : snf.diag) prod *= d;
    CHECK(prod == abs(oracle::det(m)));
  }
}

}  // namespace

TEST_SUITE("exact-lattice") {
  TEST_CASE("smith normal form of small matrices") {
    auto empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.diag.empty());
    CHECK(smith_normal_form(identity_matrix<BigInt>(3)).diag == std::vector<BigInt>{1, 1, 1});
    CHECK(smith_normal_form(mat({{2, 0}, {0, 4}})).diag == std::vector<BigInt>{2, 4});
    auto d = smith_normal_form(mat({{2, 4}, {4, 2}})).diag;
    CHECK(d == std::vector<BigInt>{2, 6});
    CHECK(d[0] * d[1] == abs(oracle::det(mat({{2, 4}, {4, 2}}))));
    CHECK(smith_normal_form(mat({{0, 0, 0}, {0, 0, 0}})).diag == std::vector<BigInt>{0, 0});
  }

  TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
      std::uniform_int_distribution<Index> dim(0, 6);
      Index r = dim(rng), c = dim(rng);
      IntMatrix m = oracle::random_matrix(r, c, -6, 6, rng);
      if (t % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * BigInt(2);
      check_snf(m);
    }
  }

  TEST_CASE("smith normal form works on machine integers too") {
    Mat<long long> m(2, 2);
    m << 2, 4, 4, 2;
    auto snf = smith_normal_form(m);
    CHECK(snf.diag == std::vector<long long>{2, 6});
    CHECK(Mat<long long>(snf.left * m * snf.right) == snf.diagonal_matrix(2, 2));
  }

  TEST_CASE("pivot rule is reproducible") {
    IntMatrix m = mat({{4, 6}, {6, 3}});
    auto a = smith_normal_form(m);
    auto b = smith_normal_form(m);
    CHECK(a.left == b.left);
    CHECK(a.right == b.right);
    // Smallest entry 3 at (1, 1) is moved to the corner first.
    CHECK(a.left(0, 1) != 0);
  }

  TEST_CASE("unimodularity") {
    CHECK(is_unimodular(identity_matrix<BigInt>(4)));
    CHECK(is_unimodular(e8_form()));
    CHECK(oracle::det(e8_form()) == 1);
    CHECK_FALSE(is_unimodular(mat({{2, 0}, {0, 1}})));
    CHECK_THROWS_AS(is_unimodular(mat({{1, 0, 0}, {0, 1, 0}})), Error);
  }

  TEST_CASE("unimodular inverse") {
    CHECK(unimodular_inverse(identity_matrix<BigInt>(3)) == identity_matrix<BigInt>(3));
    CHECK(unimodular_inverse(mat({{1, 1}, {0, 1}})) == mat({{1, -1}, {0, 1}}));
    IntMatrix e8 = e8_form();
    IntMatrix inv = unimodular_inverse(e8);
    CHECK(inv == oracle::adjugate_inverse(e8));
    CHECK(IntMatrix(inv * e8) == identity_matrix<BigInt>(8));
    CHECK(IntMatrix(e8 * inv) == identity_matrix<BigInt>(8));
    try {
      unimodular_inverse(mat({{2, 0}, {0, 1}}));
      FAIL("expected NotUnimodular");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotUnimodular);
    }
  }

  TEST_CASE("unimodular inverse of random unimodular matrices") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
      IntMatrix u = oracle::random_unimodular(5, 20, rng);
      IntMatrix inv = unimodular_inverse(u);
      CHECK(IntMatrix(inv * u) == identity_matrix<BigInt>(5));
      CHECK(inv == oracle::adjugate_inverse(u));
    }
  }

  TEST_CASE("determinant matches the rational oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      IntMatrix m = oracle::random_matrix(t % 6, t % 6, -9, 9, rng);
      CHECK(determinant(m) == oracle::det(m));
    }
  }

  TEST_CASE("signature") {
    CHECK(signature(hyperbolic_form()) == 0);
    CHECK(signature(e8_form()) == 8);
    CHECK(oracle::signature(e8_form()) == 8);
    IntMatrix big = direct_sum(e8_form(), direct_sum(hyperbolic_form(), hyperbolic_form()));
    CHECK(signature(big) == 8);
    CHECK(oracle::signature(big) == 8);
    CHECK(signature(IntMatrix(-e8_form())) == -8);
    CHECK_THROWS_AS(signature(mat({{0, 1}, {2, 0}})), Error);
    try {
      signature(mat({{1, 1}, {1, 1}}));
      FAIL("expected Degenerate");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Degenerate);
    }
  }

  TEST_CASE("signature agrees with the oracle, is additive and odd under negation") {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 40) {
      IntMatrix a = oracle::random_matrix(4, 4, -4, 4, rng);
      IntMatrix s = a + a.transpose();
      for (Index i = 0; i < 4; ++i)
        if (checked % 2) s(i, i) = 0;  // exercise the zero-diagonal path
      if (oracle::det(s) == 0) continue;
      ++checked;
      long sig = signature(s);
      CHECK(sig == oracle::signature(s));
      CHECK(signature(IntMatrix(-s)) == -sig);
      CHECK(signature(direct_sum(s, e8_form())) == sig + 8);
    }
  }

  TEST_CASE("echelon route agrees with the dense Smith form") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 80; ++t) {
      std::uniform_int_distribution<Index> dim(1, 7);
      IntMatrix m = oracle::random_matrix(dim(rng), dim(rng), -5, 5, rng);
      if (t % 4 == 0) m *= BigInt(3);
      CHECK(invariant_factors(m) == smith_normal_form(m).diag);
    }
  }

  TEST_CASE("echelon membership and coefficients") {
    IntMatrix rows = mat({{2, 0, 0}, {0, 3, 0}, {1, 1, 0}});
    EchelonLattice<BigInt> lat = EchelonLattice<BigInt>::from_rows(rows, true);
    CHECK(lat.rank() == 2);
    IntRow target = IntRow::Zero(3);
    target << 5, 7, 0;
    auto c = lat.coefficients(target);
    REQUIRE(c);
    CHECK(IntRow(c->transpose() * rows) == target);
    IntRow outside = IntRow::Zero(3);
    outside << 0, 0, 1;
    CHECK_FALSE(lat.contains(outside));
    CHECK_FALSE(lat.coefficients(outside).has_value());
    IntRow half = IntRow::Zero(3);
    half << 1, 0, 0;
    CHECK(lat.contains(half));  // x = (1,1,0)*3 - (0,3,0) - (2,0,0)
  }

  TEST_CASE("left kernel") {
    IntMatrix m = mat({{1, 2}, {2, 4}, {0, 1}});
    IntMatrix k = left_kernel(m);
    CHECK(k.rows() == 1);
    CHECK(is_zero(IntMatrix(k * m)));
    CHECK(smith_normal_form(k).diag == std::vector<BigInt>{1});
  }

  TEST_CASE("rank over the rationals") {
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(identity_matrix<BigInt>(3)) == 3);
    CHECK(rank(IntMatrix(0, 4)) == 0);
  }
}
