#ifndef JACRANK_STURM_HPP
#define JACRANK_STURM_HPP

#include "jacrank/intpoly.hpp"

namespace jacrank {

// Sturm chain of f (integer polynomials, each scaled by a positive constant
// so the sign pattern is exact).
std::vector<IntPoly> sturm_chain(const IntPoly& f);

// Exact sign of f(s * sqrt(m)) for m >= 0, s in {-1, +1}, by splitting
// f(t) = P(t^2) + t*Q(t^2) and comparing P(m)^2 against m*Q(m)^2.
int sign_at_sqrt(const IntPoly& f, const mpz_class& m, int s);

int sign_variations_at_sqrt(const std::vector<IntPoly>& chain, const mpz_class& m, int s);
int sign_variations_at_infinity(const std::vector<IntPoly>& chain, int s);

// Number of distinct real roots of a squarefree f.
int count_real_roots(const IntPoly& f);

// Number of distinct real roots of a squarefree f in the open interval
// (-sqrt(m), sqrt(m)); the endpoints must not be roots.
int count_real_roots_in_sqrt_interval(const IntPoly& f, const mpz_class& m);

}  // namespace jacrank

#endif
