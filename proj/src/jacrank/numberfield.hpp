#ifndef JACRANK_NUMBERFIELD_HPP
#define JACRANK_NUMBERFIELD_HPP

#include <string>
#include <vector>

#include "jacrank/intpoly.hpp"
#include "jacrank/weil.hpp"

namespace jacrank {

// Resultant as the determinant of the Sylvester matrix, computed by
// fraction-free (Bareiss) elimination over the integers.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^(d(d-1)/2) Res(f, f') for monic f of degree d >= 2.
mpz_class poly_discriminant(const IntPoly& f);

// Exact irreducibility over Q for monic integer polynomials of degree 2..4:
// rational-root test plus, for quartics, exhaustive search for a split into
// two monic integer quadratics over divisor pairs of the constant term.
bool is_irreducible_over_q(const IntPoly& f);

// Minimal polynomial over Q of x^d in Q[x]/(f) for monic squarefree f, by
// exact linear algebra on the power-basis coordinates of 1, t, t^2, ...;
// normalized to content 1 with positive leading coefficient.
IntPoly minpoly_power(const IntPoly& f, unsigned d);

// The d >= 1 with phi(d) <= 2g whose subfield conditions decide absolute
// simplicity, thinned to the divisibility-maximal elements (a degree drop at
// d implies one at every multiple of d in the set); ascending.
std::vector<unsigned> power_test_set(unsigned g);

struct SimplicityResult {
  bool simple;
  std::string witness;  // empty | "reducible" | decimal d of the first drop
};

// Absolutely simple iff f_p is irreducible over Q and deg Q(pi^d) stays 2g
// for every d in the test set. Requires validate_weil to pass.
SimplicityResult is_absolutely_simple(const WeilPolynomial& w);

mpz_class discriminant_gcd(const mpz_class& d1, const mpz_class& d2);

}  // namespace jacrank

#endif
