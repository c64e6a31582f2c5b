#include <doctest.h>

#include "jacrank/curve.hpp"
#include "jacrank/errors.hpp"
#include "test_util.hpp"

using jacrank::Error;
using jacrank::FiniteField;
using jacrank::FpPoly;
using jacrank::HyperellipticCurve;
using jacrank::IntPoly;

namespace {

// x^2 (x-1)^2 (x^2+1) + 3, expanded by the naive test-side oracle
IntPoly flagship_coeffs() {
  using testutil::add;
  using testutil::mul;
  auto f = mul(mul(mul({0, 1}, {0, 1}), mul({-1, 1}, {-1, 1})), {1, 0, 1});
  return add(f, {3});
}

HyperellipticCurve flagship() { return HyperellipticCurve(flagship_coeffs()); }

}  // namespace

TEST_SUITE_BEGIN("curve");

TEST_CASE("construction computes the genus and validates the model") {
  CHECK(flagship_coeffs() == IntPoly{3, 0, 1, -2, 2, -2, 1});
  CHECK(flagship().genus() == 2);

  CHECK(HyperellipticCurve(IntPoly{1, 0, 0, 0, 0, 1}).genus() == 2);  // x^5 + 1
  CHECK(HyperellipticCurve(IntPoly{0, -1, 0, 1}).genus() == 1);       // x^3 - x
  CHECK(HyperellipticCurve(IntPoly{1, 0, 0, 0, 1}).genus() == 1);     // quartic

  CHECK_THROWS_WITH_AS(HyperellipticCurve(IntPoly{0, 0, 1, 1}),  // x^2(x+1): repeated root
                       doctest::Contains("singular"), Error);
  CHECK_THROWS_AS(HyperellipticCurve(IntPoly{1, 0, 1}), Error);  // degree 2
}

TEST_CASE("good reduction at the flagship primes") {
  auto curve = flagship();
  CHECK_FALSE(jacrank::has_good_reduction(curve, 3));  // f mod 3 = x^2 (x-1)^2 (x^2+1)
  CHECK(jacrank::has_good_reduction(curve, 5));
  CHECK(jacrank::has_good_reduction(curve, 13));
  CHECK_FALSE(jacrank::has_good_reduction(curve, 2));
  CHECK_THROWS_AS(jacrank::has_good_reduction(curve, 6), Error);  // composite
}

TEST_CASE("reduce mod p is coefficient-wise") {
  auto curve = flagship();
  CHECK(jacrank::reduce_mod_p(curve, 3) == FpPoly{0, 0, 1, 1, 2, 1, 1});
  CHECK(jacrank::reduce_mod_p(curve, 5) == FpPoly{3, 0, 1, 3, 2, 3, 1});
  auto cubic = HyperellipticCurve(IntPoly{0, -1, 0, 1});
  CHECK(jacrank::reduce_mod_p(cubic, 7) == FpPoly{0, 6, 0, 1});
}

TEST_CASE("flagship point counts match the pair-enumeration oracle") {
  auto curve = flagship();
  CHECK(jacrank::count_points(curve, 5, 1) == 4);
  CHECK(jacrank::count_points(curve, 13, 1) == 21);
  CHECK(testutil::brute_force_count_fp(curve.f(), 5) == 4);
  CHECK(testutil::brute_force_count_fp(curve.f(), 13) == 21);

  auto quintic = HyperellipticCurve(IntPoly{1, 0, 0, 0, 0, 1});  // y^2 = x^5 + 1
  CHECK(jacrank::count_points(quintic, 3, 1) == 4);
}

TEST_CASE("count_points enforces its preconditions") {
  auto curve = flagship();
  CHECK_THROWS_WITH_AS(jacrank::count_points(curve, 3, 1), doctest::Contains("bad reduction"),
                       Error);
  CHECK_THROWS_WITH_AS(jacrank::count_points(curve, 5, 10, 1000),
                       doctest::Contains("enumeration cap"), Error);
}

TEST_CASE("counts agree with the oracle for every small curve and good prime") {
  testutil::SexticSampler sampler(7);
  for (int i = 0; i < 8; ++i) {
    IntPoly f = sampler.next();
    HyperellipticCurve curve(f);
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
      if (!jacrank::has_good_reduction(curve, p)) continue;
      CAPTURE(p);
      REQUIRE(jacrank::count_points(curve, p, 1) == testutil::brute_force_count_fp(f, p));
    }
  }
}

TEST_CASE("Weil bound and character-sum bound hold on counted data") {
  testutil::SexticSampler sampler(11);
  for (int i = 0; i < 6; ++i) {
    HyperellipticCurve curve(sampler.next());
    const unsigned g = curve.genus();
    const int deg = curve.f_degree();
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
      if (!jacrank::has_good_reduction(curve, p)) continue;
      for (unsigned n = 1; n <= 2; ++n) {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), p, n);
        mpz_class count(jacrank::count_points(curve, p, n));
        mpz_class dev = count - q - 1;
        REQUIRE(dev * dev <= 4 * g * g * q);

        // affine character sum S = (N - infinity) - q satisfies |S| <= (deg f - 1) sqrt(q)
        FiniteField field = FiniteField::make_extension(p, n);
        auto lc = field.from_integer(curve.f().back());
        mpz_class inf_points = deg % 2 == 1 ? 1 : 1 + field.quadratic_character(lc);
        mpz_class s = count - inf_points - q;
        REQUIRE(s * s <= (deg - 1) * (deg - 1) * q);
      }
    }
  }
}

TEST_CASE("counting is invariant under x -> x + c") {
  testutil::SexticSampler sampler(23);
  for (int i = 0; i < 4; ++i) {
    IntPoly f = sampler.next();
    HyperellipticCurve curve(f);
    for (long c : {1L, -2L, 5L}) {
      HyperellipticCurve shifted(testutil::shift(f, mpz_class(c)));
      for (std::uint64_t p : {5ull, 7ull, 13ull}) {
        if (!jacrank::has_good_reduction(curve, p)) continue;
        REQUIRE(jacrank::has_good_reduction(shifted, p));
        REQUIRE(jacrank::count_points(curve, p, 1) == jacrank::count_points(shifted, p, 1));
        REQUIRE(jacrank::count_points(curve, p, 2) == jacrank::count_points(shifted, p, 2));
      }
    }
  }
}

TEST_CASE("counts do not depend on the modulus presentation of F_25") {
  auto curve = flagship();
  FiniteField standard = FiniteField::make_extension(5, 2);  // x^2 + 2
  FiniteField other(5, FpPoly{1, 1, 1});                     // x^2 + x + 1, also irreducible
  CHECK(standard.modulus() != other.modulus());
  CHECK(jacrank::count_points_in_field(curve, standard) ==
        jacrank::count_points_in_field(curve, other));
  CHECK(jacrank::count_points_in_field(curve, standard) == jacrank::count_points(curve, 5, 2));
}

TEST_SUITE_END();
