#include "jacrank/intpoly.hpp"

#include <algorithm>

#include "jacrank/errors.hpp"

namespace jacrank {

int degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const IntPoly& f) { return degree(f) < 0; }

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly poly_neg(const IntPoly& a) {
  IntPoly r(a);
  for (auto& c : r) c = -c;
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

IntPoly poly_scale(const IntPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

IntPoly poly_derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  IntPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mpz_class(i) * f[i];
  trim(r);
  return r;
}

mpz_class poly_eval(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class poly_content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly poly_primitive_part(const IntPoly& f) {
  mpz_class c = poly_content(f);
  if (c == 0) return {};
  IntPoly r(f);
  for (auto& x : r) x /= c;
  trim(r);
  return r;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  int db = degree(b);
  if (db < 0) fail(errc::internal_error, "polynomial division by zero");
  IntPoly rem(a);
  trim(rem);
  int da = degree(rem);
  if (da < db) {
    if (da < 0) return {};
    fail(errc::internal_error, "inexact polynomial division");
  }
  IntPoly q(static_cast<std::size_t>(da - db) + 1, mpz_class(0));
  const mpz_class& lead = b[static_cast<std::size_t>(db)];
  for (int d = da; d >= db; d = degree(rem)) {
    if (d < db) break;
    mpz_class c = rem[static_cast<std::size_t>(d)];
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      fail(errc::internal_error, "inexact polynomial division");
    c /= lead;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= c * b[static_cast<std::size_t>(i)];
    trim(rem);
    if (is_zero(rem)) break;
  }
  if (!is_zero(rem)) fail(errc::internal_error, "inexact polynomial division");
  trim(q);
  return q;
}

bool poly_divides(const IntPoly& b, const IntPoly& a) {
  try {
    poly_divexact(a, b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Remainder of lc(b)^k * a modulo b with k even, so the result has the exact
// sign of the true rational remainder scaled by a positive constant.
IntPoly signed_pseudo_rem(const IntPoly& a, const IntPoly& b) {
  int da = degree(a), db = degree(b);
  IntPoly rem(a);
  if (da < db) return rem;
  const mpz_class& lead = b[static_cast<std::size_t>(db)];
  int steps = da - db + 1;
  if (steps % 2 == 1) ++steps;  // even power keeps the scaling positive
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps));
  for (auto& c : rem) c *= scale;
  while (true) {
    int d = degree(rem);
    if (d < db) break;
    mpz_class c = rem[static_cast<std::size_t>(d)] / lead;
    if (c * lead != rem[static_cast<std::size_t>(d)])
      fail(errc::internal_error, "pseudo remainder under-scaled");
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= c * b[static_cast<std::size_t>(i)];
    rem[static_cast<std::size_t>(d)] = 0;
    trim(rem);
  }
  return rem;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = poly_primitive_part(a);
  IntPoly v = poly_primitive_part(b);
  if (is_zero(u)) std::swap(u, v);
  while (!is_zero(v)) {
    IntPoly r = signed_pseudo_rem(u, v);
    u = std::move(v);
    v = poly_primitive_part(r);
  }
  if (!u.empty() && u.back() < 0)
    for (auto& c : u) c = -c;
  return u;
}

bool poly_is_squarefree(const IntPoly& f) {
  if (degree(f) < 1) return degree(f) == 0;
  return degree(poly_gcd(f, poly_derivative(f))) == 0;
}

}  // namespace jacrank
