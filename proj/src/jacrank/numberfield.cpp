#include "jacrank/numberfield.hpp"

#include <algorithm>

#include "jacrank/arith.hpp"
#include "jacrank/errors.hpp"

namespace jacrank {

namespace {

// Bareiss fraction-free elimination; exact over Z.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          fail(errc::internal_error, "Bareiss elimination: inexact division");
        m[i][j] = num / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

std::vector<mpz_class> divisors_with_sign(const mpz_class& n) {
  std::vector<mpz_class> divs;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) continue;
    mpz_class q = a / d;
    divs.push_back(d);
    divs.push_back(-d);
    if (q != d) {
      divs.push_back(q);
      divs.push_back(-q);
    }
  }
  return divs;
}

bool has_rational_root(const IntPoly& f) {
  if (f[0] == 0) return true;  // root at 0
  for (const auto& r : divisors_with_sign(f[0])) {
    if (poly_eval(f, r) == 0) return true;
  }
  return false;
}

// Monic quartic x^4 + q3 x^3 + q2 x^2 + q1 x + q0 splitting into two monic
// integer quadratics (x^2 + a x + b)(x^2 + c x + d).
bool quartic_has_quadratic_split(const IntPoly& f) {
  const mpz_class &q0 = f[0], &q1 = f[1], &q2 = f[2], &q3 = f[3];
  if (q0 == 0) return true;  // x divides f
  for (const auto& b : divisors_with_sign(q0)) {
    mpz_class d = q0 / b;
    if (b != d) {
      // a(d - b) = q1 - q3 b, c = q3 - a
      mpz_class num = q1 - q3 * b;
      mpz_class den = d - b;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
      mpz_class a = num / den;
      mpz_class c = q3 - a;
      if (b + d + a * c == q2) return true;
    } else {
      // b = d: need b q3 = q1 and integers a + c = q3, a c = q2 - 2b
      if (b * q3 != q1) continue;
      mpz_class disc = q3 * q3 - 4 * (q2 - 2 * b);
      if (disc < 0) continue;
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
      if (root * root == disc && mpz_even_p(mpz_class(q3 + root).get_mpz_t())) return true;
    }
  }
  return false;
}

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return 0;
  if (da == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(db));
    return r;
  }
  if (db == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(da));
    return r;
  }
  const std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(da - j)];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(db - j)];
  return bareiss_determinant(std::move(m));
}

mpz_class poly_discriminant(const IntPoly& f) {
  int d = degree(f);
  if (d < 2) fail(errc::invalid_parameter, "poly_discriminant: degree must be >= 2");
  if (f[static_cast<std::size_t>(d)] != 1)
    fail(errc::invalid_parameter, "poly_discriminant: polynomial must be monic");
  mpz_class r = resultant(f, poly_derivative(f));
  return (d * (d - 1) / 2) % 2 == 0 ? r : mpz_class(-r);
}

bool is_irreducible_over_q(const IntPoly& f) {
  int d = degree(f);
  if (d < 2 || d > 4)
    fail(errc::unsupported_degree, "is_irreducible_over_q: only degrees 2..4 are supported");
  if (f[static_cast<std::size_t>(d)] != 1)
    fail(errc::invalid_parameter, "is_irreducible_over_q: polynomial must be monic");
  if (has_rational_root(f)) return false;
  if (d == 4) return !quartic_has_quadratic_split(f);
  return true;
}

IntPoly minpoly_power(const IntPoly& f, unsigned d) {
  const int m = degree(f);
  if (m < 1) fail(errc::invalid_input, "minpoly_power: degree must be >= 1");
  if (f[static_cast<std::size_t>(m)] != 1)
    fail(errc::invalid_input, "minpoly_power: f must be monic");
  if (!poly_is_squarefree(f)) fail(errc::invalid_input, "minpoly_power: f must be squarefree");
  if (d < 1) fail(errc::invalid_parameter, "minpoly_power: d must be >= 1");

  auto reduce = [&](IntPoly v) {
    for (int deg_v = degree(v); deg_v >= m; deg_v = degree(v)) {
      mpz_class c = v[static_cast<std::size_t>(deg_v)];
      v[static_cast<std::size_t>(deg_v)] = 0;
      for (int i = 0; i < m; ++i)
        v[static_cast<std::size_t>(deg_v - m + i)] -= c * f[static_cast<std::size_t>(i)];
      trim(v);
    }
    v.resize(static_cast<std::size_t>(m), mpz_class(0));
    return v;
  };

  // t = x^d mod f; power-basis coordinates of t^j are integer vectors because
  // f is monic.
  IntPoly xd(static_cast<std::size_t>(d) + 1, mpz_class(0));
  xd[d] = 1;
  IntPoly t = reduce(std::move(xd));

  std::vector<IntPoly> powers;
  powers.push_back(reduce(IntPoly{1}));
  for (int j = 1; j <= m; ++j) {
    IntPoly next = reduce(poly_mul(powers.back(), t));
    powers.push_back(std::move(next));

    // Is powers[j] a rational combination of powers[0..j-1]?  Row-reduce the
    // augmented system exactly over Q.
    const int cols = j;
    std::vector<std::vector<mpq_class>> rows(static_cast<std::size_t>(m),
                                             std::vector<mpq_class>(static_cast<std::size_t>(cols) + 1));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < cols; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            mpq_class(powers[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] =
          mpq_class(-powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < m; ++c) {
      int pr = -1;
      for (int r = rank; r < m; ++r) {
        if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
          pr = r;
          break;
        }
      }
      if (pr < 0) continue;
      std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pr)]);
      mpq_class inv = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      for (auto& x : rows[static_cast<std::size_t>(rank)]) x /= inv;
      for (int r = 0; r < m; ++r) {
        if (r == rank) continue;
        mpq_class factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (factor == 0) continue;
        for (int cc = 0; cc <= cols; ++cc)
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
              factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
      }
      pivot_col.push_back(c);
      ++rank;
    }
    bool consistent = true;
    for (int r = rank; r < m; ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] != 0) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;

    // Monic degree-j relation found; clear denominators and normalize.
    std::vector<mpq_class> coeff(static_cast<std::size_t>(j) + 1, mpq_class(0));
    coeff[static_cast<std::size_t>(j)] = 1;
    for (int idx = 0; idx < rank; ++idx)
      coeff[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(idx)])] =
          rows[static_cast<std::size_t>(idx)][static_cast<std::size_t>(cols)];
    mpz_class lcm_den = 1;
    for (const auto& q : coeff) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    IntPoly result(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      mpq_class scaled = coeff[i] * mpq_class(lcm_den);
      result[i] = scaled.get_num();
    }
    result = poly_primitive_part(result);
    if (result.back() < 0)
      for (auto& c : result) c = -c;
    return result;
  }
  fail(errc::internal_error, "minpoly_power: no relation found up to degree m");
}

std::vector<unsigned> power_test_set(unsigned g) {
  std::vector<unsigned> all;
  const unsigned bound = 8 * g * g + 8;  // phi(d) >= sqrt(d/2) > 2g beyond this
  for (unsigned d = 1; d <= bound; ++d) {
    if (euler_phi(d) <= 2 * g) all.push_back(d);
  }
  std::vector<unsigned> maximal;
  for (unsigned d : all) {
    bool is_max = std::none_of(all.begin(), all.end(),
                               [d](unsigned other) { return other != d && other % d == 0; });
    if (is_max) maximal.push_back(d);
  }
  return maximal;
}

SimplicityResult is_absolutely_simple(const WeilPolynomial& w) {
  if (!validate_weil(w).ok)
    fail(errc::invalid_weil, "is_absolutely_simple: not a valid Weil polynomial");
  IntPoly f = w.to_poly();
  const unsigned full_degree = 2 * w.genus();
  if (!is_irreducible_over_q(f)) return {false, "reducible"};
  for (unsigned d : power_test_set(w.genus())) {
    if (degree(minpoly_power(f, d)) != static_cast<int>(full_degree))
      return {false, std::to_string(d)};
  }
  return {true, ""};
}

mpz_class discriminant_gcd(const mpz_class& d1, const mpz_class& d2) {
  if (d1 == 0 || d2 == 0)
    fail(errc::invalid_discriminant,
         "discriminant_gcd: zero discriminant (the Weil polynomial is not squarefree)");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
  return g;
}

}  // namespace jacrank
