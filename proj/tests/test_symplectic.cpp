#include "oracles.hpp"

#include "trisect/forms.hpp"
#include "trisect/heegaard.hpp"

#include <doctest.h>

using namespace trisect;

namespace {

IntMatrix rows_of(std::initializer_list<IntRow> rs) {
  IntMatrix m(Index(rs.size()), rs.begin()->size());
  Index i = 0;
  for (auto& r : rs) m.row(i++) = r;
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_SUITE("symplectic-surface") {
  TEST_CASE("intersection pairing basics") {
    SymplecticLattice lat{2};
    CHECK(intersection_pairing(lat, basis_x(2, 0), basis_y(2, 0)) == 1);
    CHECK(intersection_pairing(lat, basis_y(2, 0), basis_x(2, 0)) == -1);
    IntRow a = basis_x(2, 0) + basis_y(2, 1);
    IntRow b = basis_x(2, 1) - basis_y(2, 0);
    CHECK(intersection_pairing(lat, a, a) == 0);
    CHECK(intersection_pairing(lat, a, b) == -2);
    CHECK(oracle::pair(a, b) == -2);
    CHECK_THROWS_AS(intersection_pairing(lat, basis_x(3, 0), a), Error);
  }

  TEST_CASE("pairing is antisymmetric on random classes") {
    std::mt19937_64 rng(2);
    SymplecticLattice lat{4};
    for (int t = 0; t < 100; ++t) {
      IntMatrix ab = oracle::random_matrix(2, 8, -5, 5, rng);
      BigInt p = intersection_pairing(lat, ab.row(0), ab.row(1));
      CHECK(p == -intersection_pairing(lat, ab.row(1), ab.row(0)));
      CHECK(p == oracle::pair(ab.row(0), ab.row(1)));
    }
  }

  TEST_CASE("symplectic form matrix") {
    IntMatrix j = symplectic_form(3);
    CHECK(IntMatrix(j.transpose()) == IntMatrix(-j));
    CHECK(j(0, 3) == 1);
    CHECK(is_symplectic(identity_matrix<BigInt>(6)));
    std::mt19937_64 rng(9);
    CHECK(is_symplectic(oracle::random_symplectic(3, 30, rng)));
  }

  TEST_CASE("cut system validation") {
    const Index g = 3;
    SymplecticLattice lat{g};
    IntMatrix xs = rows_of({basis_x(g, 0), basis_x(g, 1), basis_x(g, 2)});
    CHECK_NOTHROW(validate_cut_system(lat, xs));

    SymplecticLattice two{2};
    CHECK(kind_of([&] { validate_cut_system(two, rows_of({basis_x(2, 0), basis_y(2, 0)})); }) == ErrorKind::NotIsotropic);

    SymplecticLattice one{1};
    IntMatrix twice(1, 2);
    twice << 2, 0;
    CHECK(kind_of([&] { validate_cut_system(one, twice); }) == ErrorKind::NotPrimitive);
    CHECK(smith_normal_form(twice).diag == std::vector<BigInt>{2});

    CHECK(kind_of([&] { validate_cut_system(lat, rows_of({basis_x(g, 0), basis_x(g, 1)})); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { validate_cut_system(lat, rows_of({basis_x(g, 0), basis_x(g, 1), basis_x(g, 1)})); }) ==
          ErrorKind::WrongRank);
  }

  TEST_CASE("accepted cut systems are primitive and isotropic") {
    std::mt19937_64 rng(4);
    const Index g = 4;
    SymplecticLattice lat{g};
    IntMatrix xs(g, 2 * g);
    for (Index i = 0; i < g; ++i) xs.row(i) = basis_x(g, i);
    for (int t = 0; t < 20; ++t) {
      IntMatrix rows = oracle::random_unimodular(g, 12, rng) * xs * oracle::random_symplectic(g, 15, rng);
      auto cs = validate_cut_system(lat, rows);
      CHECK(is_zero(pairing_matrix(cs, cs)));
      for (auto& d : smith_normal_form(rows).diag) CHECK(d == 1);
    }
  }

  TEST_CASE("pairing matrices") {
    const Index g = 8;
    IntMatrix xs(g, 2 * g), ys(g, 2 * g), zs(g, 2 * g);
    IntMatrix q = e8_form();
    for (Index i = 0; i < g; ++i) {
      xs.row(i) = basis_x(g, i);
      ys.row(i) = basis_y(g, i);
      IntRow z = -basis_x(g, i);
      for (Index j = 0; j < g; ++j) z -= q(i, j) * basis_y(g, j);
      zs.row(i) = z;
    }
    CHECK(pairing_matrix(xs, ys) == identity_matrix<BigInt>(g));
    CHECK(is_zero(pairing_matrix(xs, xs)));
    // <x_i, z_j> = -Q_ji, expanded one pair at a time.
    IntMatrix xz = pairing_matrix(xs, zs);
    for (Index i = 0; i < g; ++i)
      for (Index j = 0; j < g; ++j) {
        CHECK(xz(i, j) == oracle::pair(xs.row(i), zs.row(j)));
        CHECK(xz(i, j) == -q(j, i));
      }
    CHECK(pairing_matrix(zs, xs) == IntMatrix(-pairing_matrix(xs, zs).transpose()));
  }

  TEST_CASE("row span helpers") {
    IntMatrix a(2, 4), b(2, 4);
    a << 1, 0, 0, 0, 0, 1, 0, 0;
    b << 1, 1, 0, 0, 0, 1, 0, 0;
    CHECK(same_row_span(a, b));
    IntRow v = IntRow::Zero(4);
    v << 3, -2, 0, 0;
    CHECK(in_row_span(a, v));
    v(2) = 1;
    CHECK_FALSE(in_row_span(a, v));
  }
}

TEST_SUITE("heegaard") {
  namespace {
  HeegaardPair pair_of(const IntMatrix& a, const IntMatrix& b) {
    SymplecticLattice lat{a.cols() / 2};
    return {validate_cut_system(lat, a), validate_cut_system(lat, b)};
  }

  IntMatrix xs(Index g) {
    IntMatrix m(g, 2 * g);
    for (Index i = 0; i < g; ++i) m.row(i) = basis_x(g, i);
    return m;
  }

  IntMatrix ys(Index g) {
    IntMatrix m(g, 2 * g);
    for (Index i = 0; i < g; ++i) m.row(i) = basis_y(g, i);
    return m;
  }
  }  // namespace

  TEST_CASE("homology of standard pairs") {
    auto sphere = heegaard_homology(pair_of(xs(3), ys(3)));
    CHECK(sphere.is_homology_sphere);
    CHECK(sphere.free_rank == 0);
    CHECK(is_homology_sphere(pair_of(xs(3), ys(3))));

    auto s1s2 = heegaard_homology(pair_of(xs(3), xs(3)));
    CHECK(s1s2.free_rank == 3);
    CHECK(s1s2.invariant_factors.empty());
    CHECK(s1s2.is_s1s2_connected_sum_homology);
    CHECK(s1s2.s1s2_count == 3);
    CHECK_FALSE(is_homology_sphere(pair_of(xs(3), xs(3))));
  }

  TEST_CASE("lens space homology") {
    // beta = 2y + x pairs with alpha = x as [[2]].
    IntMatrix b(1, 2);
    b << 1, 2;
    auto p = pair_of(xs(1), b);
    CHECK(pairing_matrix(p.a, p.b)(0, 0) == 2);
    auto r = heegaard_homology(p);
    CHECK(r.invariant_factors == std::vector<BigInt>{2});
    CHECK(r.free_rank == 0);
    CHECK_FALSE(r.is_homology_sphere);
    CHECK_FALSE(is_algebraically_standard(p, 0));
  }

  TEST_CASE("algebraic standardness") {
    CHECK(is_algebraically_standard(pair_of(xs(2), ys(2)), 0));
    CHECK(is_algebraically_standard(pair_of(xs(2), xs(2)), 2));
    CHECK_FALSE(is_algebraically_standard(pair_of(xs(2), xs(2)), 1));
  }

  TEST_CASE("unimodular pairing always reports a homology sphere") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
      IntMatrix s = oracle::random_symplectic(3, 20, rng);
      auto p = pair_of(IntMatrix(xs(3) * s), IntMatrix(ys(3) * s));
      CHECK(is_homology_sphere(p));
      CHECK(heegaard_homology(p).is_homology_sphere);
    }
  }

  TEST_CASE("connected sum and stabilization") {
    HeegaardTriple e = empty_triple();
    HeegaardTriple s4 = stabilize(e, 1);
    CHECK(s4.genus() == 1);
    CHECK(s4.k == 1);
    CHECK(s4.a.rows == xs(1));
    CHECK(s4.b.rows == xs(1));
    CHECK(s4.c.rows == ys(1));

    HeegaardTriple t = make_triple(xs(2), ys(2), xs(2), 0);
    HeegaardTriple same = connected_sum(t, e);
    CHECK(same.a.rows == t.a.rows);
    CHECK(same.c.rows == t.c.rows);
    CHECK(stabilize(t, 0).a.rows == t.a.rows);

    HeegaardTriple twice = connected_sum(t, stabilize(e, 2));
    CHECK(twice.genus() == 4);
    CHECK(twice.k == 2);
    auto h = heegaard_homology(twice.ab());
    auto h1 = heegaard_homology(t.ab());
    CHECK(h.free_rank == h1.free_rank + 2);
    CHECK(is_symplectic(symplectic_form(4)));
    CHECK(is_zero(pairing_matrix(twice.a, twice.a)));
  }

  TEST_CASE("homology of a sum concatenates invariant factors") {
    IntMatrix b(1, 2);
    b << 1, 3;
    HeegaardTriple lens = make_triple(xs(1), b, ys(1), 0);
    IntMatrix b2(1, 2);
    b2 << 1, 2;
    HeegaardTriple lens2 = make_triple(xs(1), b2, ys(1), 0);
    auto sum = connected_sum(lens, lens2);
    auto r = heegaard_homology(sum.ab());
    // Z/3 + Z/2 = Z/6
    CHECK(r.invariant_factors == std::vector<BigInt>{6});
  }
}
