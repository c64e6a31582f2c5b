#ifndef JACRANK_WEIL_HPP
#define JACRANK_WEIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jacrank/intpoly.hpp"

namespace jacrank {

// Characteristic polynomial of Frobenius for genus g at prime p, stored as
// the signed elementary-symmetric data e_0..e_2g with
//   f_p(x) = sum_k (-1)^k e_k x^(2g-k),   e_0 = 1,
// so e_1 is the sum of the Frobenius eigenvalues and the functional equation
// reads e_(2g-k) = p^(g-k) e_k.
class WeilPolynomial {
 public:
  WeilPolynomial() = default;  // empty placeholder; fails validate_weil

  // Reconstruction from point counts N_1..N_g: power sums s_n = p^n + 1 - N_n,
  // Newton's identities k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) s_i (every
  // division by k must be exact), then the functional-equation extension.
  static WeilPolynomial from_counts(std::uint64_t p, unsigned g,
                                    const std::vector<std::uint64_t>& counts);

  // Structural construction from the coefficients of f_p in descending order;
  // no Weil-type validation beyond monicity (validate_weil is the gate).
  static WeilPolynomial from_coefficients(std::uint64_t p, unsigned g,
                                          const std::vector<mpz_class>& descending);

  std::uint64_t p() const { return p_; }
  unsigned genus() const { return g_; }
  const std::vector<mpz_class>& e() const { return e_; }

  std::vector<mpz_class> coefficients_descending() const;
  IntPoly to_poly() const;  // ascending coefficients

  // s_n for n >= 1: Newton recurrence up to 2g, then the linear recurrence
  // with characteristic polynomial f_p.
  mpz_class power_sum(unsigned n) const;
  // Predicted N_n = p^n + 1 - s_n.
  mpz_class predicted_count(unsigned n) const;

  std::string to_string() const;

  bool operator==(const WeilPolynomial& other) const = default;

 private:
  WeilPolynomial(std::uint64_t p, unsigned g, std::vector<mpz_class> e);

  std::uint64_t p_ = 0;
  unsigned g_ = 0;
  std::vector<mpz_class> e_;  // e_0..e_2g
};

enum class WeilFailure { none, functional_equation, not_real_rooted, root_out_of_range };

struct WeilValidity {
  bool ok;
  WeilFailure reason;
};

// The real Weil polynomial h of degree g with f_p(x) = x^g h(x + p/x),
// via the trace polynomials T_0 = 2, T_1 = t, T_j = t T_(j-1) - p T_(j-2):
//   h = sum_{k=0..g-1} (-1)^k e_k T_(g-k) + (-1)^g e_g.
IntPoly real_weil_polynomial(const WeilPolynomial& w);

// A Weil polynomial is genuine iff the functional equation holds and every
// root of h is real and lies in [-2 sqrt(p), 2 sqrt(p)]; checked exactly with
// a Sturm chain and surd-sign evaluation at the endpoints.
WeilValidity validate_weil(const WeilPolynomial& w);

// Ordinary iff p does not divide e_g (Newton polygon has slopes 0 and 1 only).
bool is_ordinary(const WeilPolynomial& w);

}  // namespace jacrank

#endif
