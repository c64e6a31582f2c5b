#ifndef JACRANK_FINITE_FIELD_HPP
#define JACRANK_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace jacrank {

// Dense polynomial over F_p, residues in [0, p), ascending powers.
using FpPoly = std::vector<std::uint64_t>;

// Irreducibility over F_p: poly is irreducible iff x^(p^d) = x mod poly and
// gcd(x^(p^(d/r)) - x, poly) = 1 for every prime r dividing d = deg poly.
// Requires a monic input.
bool is_irreducible_mod_p(const FpPoly& poly, std::uint64_t p);

// F_{p^n} presented as F_p[x] modulo a fixed monic irreducible of degree n.
// For n = 1 the modulus is x and elements are plain residues.
// Instances are immutable; all operations are pure.
class FiniteField {
 public:
  using Elt = std::vector<std::uint64_t>;  // length n, entries in [0, p)

  // Modulus is the first monic irreducible of degree n in the scan order
  // where the coefficient vector (c_0, ..., c_{n-1}) runs through base-p
  // digits of 0, 1, 2, ... with c_0 the fastest digit.
  static FiniteField make_extension(std::uint64_t p, unsigned n);

  FiniteField(std::uint64_t p, FpPoly modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  const FpPoly& modulus() const { return modulus_; }
  mpz_class cardinality() const;
  std::uint64_t cardinality_u64() const;  // throws resource_limit past 2^63

  Elt zero() const { return Elt(n_, 0); }
  Elt one() const;
  Elt from_residue(std::uint64_t r) const;
  Elt from_integer(const mpz_class& v) const;
  bool is_zero(const Elt& a) const;
  bool equal(const Elt& a, const Elt& b) const { return a == b; }

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, const mpz_class& e) const;
  Elt inverse(const Elt& a) const;

  // 0 at zero, +1 on nonzero squares, -1 otherwise; computed as
  // a^((q-1)/2) by square-and-multiply.
  int quadratic_character(const Elt& a) const;

  // Enumeration in lexicographic order of coefficient vectors: the element
  // of rank k has the base-p digits of k as coefficients, constant term first.
  Elt element_at(std::uint64_t rank) const;
  std::uint64_t rank_of(const Elt& a) const;
  // Advance to the next element in rank order; returns false after the last.
  bool next_element(Elt& a) const;

 private:
  std::uint64_t p_;
  unsigned n_;
  FpPoly modulus_;
};

// chi table for a prime field: index r in [0, p) maps to the character value.
std::vector<std::int8_t> quadratic_character_table(std::uint64_t p);

}  // namespace jacrank

#endif
