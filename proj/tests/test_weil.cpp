#include <doctest.h>

#include "jacrank/curve.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/sturm.hpp"
#include "jacrank/weil.hpp"
#include "test_util.hpp"

using jacrank::Error;
using jacrank::IntPoly;
using jacrank::WeilFailure;
using jacrank::WeilPolynomial;

namespace {

WeilPolynomial f5() { return WeilPolynomial::from_counts(5, 2, {4, 28}); }
WeilPolynomial f13() { return WeilPolynomial::from_counts(13, 2, {21, 191}); }

}  // namespace

TEST_SUITE_BEGIN("weil");

TEST_CASE("reconstruction from counts reproduces the flagship polynomials") {
  CHECK(f5().coefficients_descending() == std::vector<mpz_class>{1, -2, 3, -10, 25});
  CHECK(f5().to_string() == "x^4 - 2*x^3 + 3*x^2 - 10*x + 25");
  CHECK(f13().coefficients_descending() == std::vector<mpz_class>{1, 7, 35, 91, 169});
  CHECK(f13().to_string() == "x^4 + 7*x^3 + 35*x^2 + 91*x + 169");
}

TEST_CASE("genus one: the count p + 1 gives x^2 + p") {
  WeilPolynomial w = WeilPolynomial::from_counts(7, 1, {8});
  CHECK(w.coefficients_descending() == std::vector<mpz_class>{1, 0, 7});
  CHECK(w.predicted_count(2) == 7 * 7 + 1 + 2 * 7);  // roots +-i sqrt(p)
}

TEST_CASE("from_counts rejects corrupt or impossible counts") {
  // s_1 = 2, s_2 = -3: Newton's identity for e_2 asks for 7/2
  CHECK_THROWS_WITH_AS(WeilPolynomial::from_counts(5, 2, {4, 29}),
                       doctest::Contains("Newton"), Error);
  // Weil bound violation: |N_1 - 6| can be at most 4 g sqrt(5) < 18
  CHECK_THROWS_WITH_AS(WeilPolynomial::from_counts(5, 2, {40, 28}),
                       doctest::Contains("Weil bound"), Error);
  CHECK_THROWS_AS(WeilPolynomial::from_counts(5, 2, {4}), Error);  // wrong length
}

TEST_CASE("functional-equation symmetry holds structurally") {
  for (const auto& w : {f5(), f13()}) {
    const auto& e = w.e();
    const unsigned g = w.genus();
    for (unsigned k = 0; k <= g; ++k) {
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), w.p(), g - k);
      REQUIRE(e[2 * g - k] == pk * e[k]);
    }
  }
}

TEST_CASE("predicted counts invert the construction and extend it") {
  CHECK(f5().predicted_count(1) == 4);
  CHECK(f5().predicted_count(2) == 28);
  CHECK(f13().predicted_count(1) == 21);
  CHECK(f13().predicted_count(2) == 191);

  // past 2g the linear recurrence takes over; compare with brute counts
  jacrank::HyperellipticCurve curve(IntPoly{3, 0, 1, -2, 2, -2, 1});
  CHECK(f5().predicted_count(3) == jacrank::count_points(curve, 5, 3));
  CHECK(f5().predicted_count(4) == jacrank::count_points(curve, 5, 4));
  CHECK(f5().predicted_count(5) == jacrank::count_points(curve, 5, 5, 4000));
}

TEST_CASE("real Weil polynomial for genus 2") {
  CHECK(jacrank::real_weil_polynomial(f5()) == IntPoly{-7, -2, 1});  // t^2 - 2t - 7
  CHECK(jacrank::real_weil_polynomial(f13()) == IntPoly{9, 7, 1});   // t^2 + 7t + 9
}

TEST_CASE("validate_weil accepts the flagship polynomials") {
  CHECK(jacrank::validate_weil(f5()).ok);
  CHECK(jacrank::validate_weil(f13()).ok);
}

TEST_CASE("validate_weil rejects a broken functional equation") {
  // x^4 + 1 declared at p = 5: constant term 1 != 25
  auto w = WeilPolynomial::from_coefficients(5, 2, {1, 0, 0, 0, 1});
  auto v = jacrank::validate_weil(w);
  CHECK_FALSE(v.ok);
  CHECK(v.reason == WeilFailure::functional_equation);
}

TEST_CASE("validate_weil detects roots off the critical circle") {
  // h = (t-1)(t-5) = t^2 - 6t + 5: root 5 > 2 sqrt(5); e_1 = 6, e_2 = 15
  auto off = WeilPolynomial::from_coefficients(5, 2, {1, -6, 15, -30, 25});
  auto v1 = jacrank::validate_weil(off);
  CHECK_FALSE(v1.ok);
  CHECK(v1.reason == WeilFailure::root_out_of_range);

  // h = t^2 + 1 has no real root; e_1 = 0, e_2 = 11
  auto complex_h = WeilPolynomial::from_coefficients(5, 2, {1, 0, 11, 0, 25});
  auto v2 = jacrank::validate_weil(complex_h);
  CHECK_FALSE(v2.ok);
  CHECK(v2.reason == WeilFailure::not_real_rooted);
}

TEST_CASE("validate_weil handles endpoint and repeated roots exactly") {
  // f = (x^2 - 5)^2: h = t^2 - 4p with roots exactly +-2 sqrt(5)
  auto endpoint = WeilPolynomial::from_coefficients(5, 2, {1, 0, -10, 0, 25});
  CHECK(jacrank::validate_weil(endpoint).ok);

  // f = (x^2 + 5)^2: h = t^2, double root at 0
  auto doubled = WeilPolynomial::from_coefficients(5, 2, {1, 0, 10, 0, 25});
  CHECK(jacrank::validate_weil(doubled).ok);

  // genus 1 supersingular: x^2 + p, h = t
  auto ss = WeilPolynomial::from_coefficients(7, 1, {1, 0, 7});
  CHECK(jacrank::validate_weil(ss).ok);
}

TEST_CASE("ordinariness is p not dividing e_g") {
  CHECK(jacrank::is_ordinary(f5()));   // e_2 = 3
  CHECK(jacrank::is_ordinary(f13()));  // e_2 = 35
  auto ss = WeilPolynomial::from_coefficients(5, 2, {1, 0, 0, 0, 25});  // x^4 + 25, e_2 = 0
  CHECK_FALSE(jacrank::is_ordinary(ss));
}

TEST_CASE("Sturm machinery counts roots exactly") {
  // (t-1)(t-2)(t-3) has 3 real roots, all in (-sqrt(20), sqrt(20))
  IntPoly cubic{-6, 11, -6, 1};
  CHECK(jacrank::count_real_roots(cubic) == 3);
  CHECK(jacrank::count_real_roots_in_sqrt_interval(cubic, 20) == 3);
  // t^2 + 1 has none
  CHECK(jacrank::count_real_roots(IntPoly{1, 0, 1}) == 0);
  // t^2 - 7: roots +-sqrt(7); inside (-sqrt(8), sqrt(8)) but not (-sqrt(4), sqrt(4))
  CHECK(jacrank::count_real_roots_in_sqrt_interval(IntPoly{-7, 0, 1}, 8) == 2);
  CHECK(jacrank::count_real_roots_in_sqrt_interval(IntPoly{-7, 0, 1}, 4) == 0);
}

TEST_CASE("surd signs split even and odd parts correctly") {
  // f(t) = t - 2 at t = sqrt(5): positive (sqrt 5 > 2); at -sqrt(5): negative
  CHECK(jacrank::sign_at_sqrt(IntPoly{-2, 1}, 5, +1) == 1);
  CHECK(jacrank::sign_at_sqrt(IntPoly{-2, 1}, 5, -1) == -1);
  // f(t) = t^2 - 5 vanishes at +-sqrt(5)
  CHECK(jacrank::sign_at_sqrt(IntPoly{-5, 0, 1}, 5, +1) == 0);
  CHECK(jacrank::sign_at_sqrt(IntPoly{-5, 0, 1}, 5, -1) == 0);
  // f(t) = t^3 at sqrt(2) is positive, at -sqrt(2) negative
  CHECK(jacrank::sign_at_sqrt(IntPoly{0, 0, 0, 1}, 2, +1) == 1);
  CHECK(jacrank::sign_at_sqrt(IntPoly{0, 0, 0, 1}, 2, -1) == -1);
}

TEST_CASE("round trip counts -> polynomial -> predicted counts on random sextics") {
  testutil::SexticSampler sampler(101);
  int checked = 0;
  for (int i = 0; i < 6; ++i) {
    jacrank::HyperellipticCurve curve(sampler.next());
    for (std::uint64_t p : {5ull, 7ull}) {
      if (!jacrank::has_good_reduction(curve, p)) continue;
      std::vector<std::uint64_t> counts{jacrank::count_points(curve, p, 1),
                                        jacrank::count_points(curve, p, 2)};
      WeilPolynomial w = WeilPolynomial::from_counts(p, 2, counts);
      REQUIRE(jacrank::validate_weil(w).ok);
      REQUIRE(w.predicted_count(3) == jacrank::count_points(curve, p, 3));
      REQUIRE(w.predicted_count(4) == jacrank::count_points(curve, p, 4));
      ++checked;
    }
  }
  CHECK(checked >= 6);
}

TEST_SUITE_END();
