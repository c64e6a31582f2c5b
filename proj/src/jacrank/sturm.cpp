#include "jacrank/sturm.hpp"

#include "jacrank/errors.hpp"

namespace jacrank {

namespace {

int sign_of(const mpz_class& x) { return sgn(x); }

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain;
  IntPoly p0 = poly_primitive_part(f);
  if (is_zero(p0)) return chain;
  chain.push_back(p0);
  IntPoly p1 = poly_primitive_part(poly_derivative(p0));
  if (is_zero(p1)) return chain;
  chain.push_back(p1);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    int da = degree(a), db = degree(b);
    if (db < 0) break;
    // signed pseudo remainder: scale a by an even power of lc(b)
    IntPoly rem(a);
    const mpz_class& lead = b[static_cast<std::size_t>(db)];
    int steps = da - db + 1;
    if (steps < 0) steps = 0;
    if (steps % 2 == 1) ++steps;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : rem) c *= scale;
    while (degree(rem) >= db) {
      int d = degree(rem);
      mpz_class c = rem[static_cast<std::size_t>(d)] / lead;
      for (int i = 0; i <= db; ++i)
        rem[static_cast<std::size_t>(d - db + i)] -= c * b[static_cast<std::size_t>(i)];
      rem[static_cast<std::size_t>(d)] = 0;
      trim(rem);
    }
    if (is_zero(rem)) break;
    chain.push_back(poly_primitive_part(poly_neg(rem)));
  }
  return chain;
}

int sign_at_sqrt(const IntPoly& f, const mpz_class& m, int s) {
  if (m < 0) fail(errc::invalid_parameter, "sign_at_sqrt: negative radicand");
  mpz_class even = 0, odd = 0;  // P(m), Q(m) by Horner over split coefficients
  mpz_class mp = 1;
  for (std::size_t i = 0; i < f.size(); i += 2) {
    even += f[i] * mp;
    if (i + 1 < f.size()) odd += f[i + 1] * mp;
    mp *= m;
  }
  int sa = sign_of(even);
  int sb = sign_of(odd) * s;
  if (m == 0) return sa;
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  mpz_class lhs = even * even;
  mpz_class rhs = m * odd * odd;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

int sign_variations_at_sqrt(const std::vector<IntPoly>& chain, const mpz_class& m, int s) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_sqrt(p, m, s));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<IntPoly>& chain, int s) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int d = degree(p);
    if (d < 0) {
      signs.push_back(0);
      continue;
    }
    int lead = sign_of(p[static_cast<std::size_t>(d)]);
    signs.push_back(s < 0 && d % 2 == 1 ? -lead : lead);
  }
  return count_variations(signs);
}

int count_real_roots(const IntPoly& f) {
  auto chain = sturm_chain(f);
  if (chain.empty() || degree(chain.front()) < 1) return 0;
  return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

int count_real_roots_in_sqrt_interval(const IntPoly& f, const mpz_class& m) {
  auto chain = sturm_chain(f);
  if (chain.empty() || degree(chain.front()) < 1) return 0;
  if (sign_at_sqrt(chain.front(), m, -1) == 0 || sign_at_sqrt(chain.front(), m, +1) == 0)
    fail(errc::invalid_parameter, "interval endpoint is a root");
  return sign_variations_at_sqrt(chain, m, -1) - sign_variations_at_sqrt(chain, m, +1);
}

}  // namespace jacrank
