#ifndef JACRANK_CURVE_HPP
#define JACRANK_CURVE_HPP

#include <cstdint>

#include "jacrank/finite_field.hpp"
#include "jacrank/intpoly.hpp"

namespace jacrank {

// Default bound on the enumeration size q = p^n for point counting.
inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// y^2 = f(x) with integer coefficients; f squarefree of degree >= 3, so the
// smooth projective model has genus floor((deg f - 1)/2) >= 1.
class HyperellipticCurve {
 public:
  explicit HyperellipticCurve(IntPoly f_coeffs);

  const IntPoly& f() const { return f_; }
  int f_degree() const { return degree(f_); }
  unsigned genus() const { return genus_; }

  bool operator==(const HyperellipticCurve& other) const { return f_ == other.f_; }

 private:
  IntPoly f_;
  unsigned genus_;
};

// Good reduction at p: p odd prime, p does not divide the leading
// coefficient, and f mod p is squarefree over F_p.
bool has_good_reduction(const HyperellipticCurve& curve, std::uint64_t p);

// Coefficient-wise reduction of f mod p (degree may drop).
FpPoly reduce_mod_p(const HyperellipticCurve& curve, std::uint64_t p);

// Number of F_{p^n}-points of the smooth projective model:
//   N = sum over x in F_q of (1 + chi(f(x))) + points at infinity,
// where the smooth model has 1 point at infinity for odd deg f and
// 1 + chi(lc f) points for even deg f.
std::uint64_t count_points(const HyperellipticCurve& curve, std::uint64_t p, unsigned n,
                           std::uint64_t q_cap = kDefaultEnumerationCap);

// Same count over an explicitly constructed field (the result does not
// depend on the modulus choice).
std::uint64_t count_points_in_field(const HyperellipticCurve& curve, const FiniteField& field);

}  // namespace jacrank

#endif
