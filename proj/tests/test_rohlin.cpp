#include "oracles.hpp"

#include "trisect/forms.hpp"
#include "trisect/rohlin.hpp"

#include <doctest.h>

using namespace trisect;

namespace {

IntMatrix form_of(Index m, Index n) {
  IntMatrix q = repeat_form(e8_form(), m);
  return direct_sum(q, repeat_form(hyperbolic_form(), n));
}

}  // namespace

TEST_SUITE("rohlin") {
  TEST_CASE("base mu sum") {
    CHECK(base_mu_sum(repeat_form(hyperbolic_form(), 3)) == 0);
    CHECK(base_mu_sum(e8_form()) == 1);
    CHECK(base_mu_sum(form_of(2, 1)) == 0);
    CHECK(base_mu_sum(IntMatrix(-e8_form())) == 1);
    CHECK(oracle::signature(form_of(2, 1)) / 8 % 2 == 0);
    try {
      base_mu_sum(identity_matrix<BigInt>(1));
      FAIL("expected OddForm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OddForm);
    }
  }

  TEST_CASE("base mu sum is additive") {
    for (Index a = 0; a <= 3; ++a)
      for (Index b = 0; b <= 3; ++b)
        CHECK(base_mu_sum(direct_sum(form_of(a, 1), form_of(b, 0))) == (base_mu_sum(form_of(a, 1)) ^ base_mu_sum(form_of(b, 0))));
  }

  TEST_CASE("empty script") {
    auto d = standard_pseudotrisection(e8_form(), 0);
    auto ledger = apply_regluing(d, RegluingScript{});
    CHECK(ledger.mu2_delta == 0);
    CHECK(ledger.mu3_delta == 0);
    CHECK(ledger.per_twist.empty());
    CHECK(mu_sum_after(d, RegluingScript{}) == 1);
  }

  TEST_CASE("odd forms are refused") {
    auto d = standard_pseudotrisection(identity_matrix<BigInt>(1), 0);
    try {
      prepare_regluing(d);
      FAIL("expected OddForm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OddForm);
    }
  }

  TEST_CASE("random scripts are valid separating-twist data") {
    std::mt19937_64 rng(7);
    auto script = random_script(6, 10, rng);
    CHECK(script.twists.size() == 10);
    for (const auto& s : script.twists) {
      CHECK_NOTHROW(validate_subsurface_basis(s));
      CHECK(s.size() >= 1);
      CHECK(s.a.cols() == 12);
    }
    std::mt19937_64 again(7);
    auto same = random_script(6, 10, again);
    for (std::size_t i = 0; i < same.twists.size(); ++i) CHECK(same.twists[i].a == script.twists[i].a);
  }

  TEST_CASE("regluing leaves the mu sum unchanged") {
    std::mt19937_64 rng(13);
    for (auto [m, n] : {std::pair<Index, Index>{1, 0}, {0, 3}, {1, 1}, {2, 0}}) {
      auto ctx = prepare_regluing(standard_pseudotrisection(form_of(m, n), 0));
      const Index g = 8 * m + 2 * n;
      bool some_nonzero = false;
      for (int run = 0; run < 25; ++run) {
        auto script = random_script(g, 1 + run % 4, rng);
        auto ledger = apply_regluing(ctx, script);
        CHECK(ledger.mu2_delta == ledger.mu3_delta);
        for (auto& [a2, a3] : ledger.per_twist) CHECK(a2 == a3);
        some_nonzero = some_nonzero || ledger.mu2_delta == 1;
        CHECK(mu_sum_after(ctx, script) == base_mu_sum(form_of(m, n)));
      }
      CHECK(some_nonzero);
    }
  }

  TEST_CASE("the E8 figure behaves like the standard E8 diagram") {
    std::mt19937_64 rng(17);
    auto d = e8_figure_diagram();
    for (int run = 0; run < 10; ++run) CHECK(mu_sum_after(d, random_script(8, 3, rng)) == 1);
  }

  TEST_CASE("obstruction verdicts") {
    auto e8 = rohlin_obstruction(e8_form(), "E8");
    CHECK(e8.verdict == Verdict::Obstructed);
    CHECK(e8.signature == 8);
    CHECK(e8.signature_mod16 == 8);
    CHECK(e8.even);
    CHECK(e8.mu_sum == 1);

    CHECK(rohlin_obstruction(form_of(2, 0)).verdict == Verdict::Consistent);
    CHECK(rohlin_obstruction(form_of(3, 2)).verdict == Verdict::Obstructed);
    auto odd = rohlin_obstruction(identity_matrix<BigInt>(3));
    CHECK_FALSE(odd.even);
    CHECK_FALSE(odd.mu_sum.has_value());
    CHECK(odd.verdict == Verdict::Consistent);

    IntMatrix two(1, 1);
    two << 2;
    try {
      rohlin_obstruction(two);
      FAIL("expected NotUnimodular");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotUnimodular);
    }
  }

  TEST_CASE("verdict is obstructed iff even with signature 8 mod 16, and ignores orientation") {
    for (Index m = 0; m <= 4; ++m)
      for (Index n = 0; n <= 4; ++n) {
        if (m + n == 0) continue;
        IntMatrix q = form_of(m, n);
        auto r = rohlin_obstruction(q);
        long sig = oracle::signature(q);
        CHECK((r.verdict == Verdict::Obstructed) == (((sig % 16) + 16) % 16 == 8));
        CHECK(rohlin_obstruction(IntMatrix(-q)).verdict == r.verdict);
      }
  }
}
