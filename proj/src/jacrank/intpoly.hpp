#ifndef JACRANK_INTPOLY_HPP
#define JACRANK_INTPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jacrank {

// Dense integer polynomial, coefficients in ascending powers.
using IntPoly = std::vector<mpz_class>;

int degree(const IntPoly& f);  // -1 for the zero polynomial
void trim(IntPoly& f);
bool is_zero(const IntPoly& f);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const mpz_class& c);
IntPoly poly_derivative(const IntPoly& f);

mpz_class poly_eval(const IntPoly& f, const mpz_class& x);

// Content is nonnegative; primitive part keeps the sign of the input.
mpz_class poly_content(const IntPoly& f);
IntPoly poly_primitive_part(const IntPoly& f);

// Exact division; throws internal_error if the division leaves a remainder.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
bool poly_divides(const IntPoly& b, const IntPoly& a);

// gcd via the primitive PRS; result is primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

bool poly_is_squarefree(const IntPoly& f);

}  // namespace jacrank

#endif
