#include "jacrank/weil.hpp"

#include "jacrank/arith.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/sturm.hpp"

namespace jacrank {

namespace {

mpz_class p_power(std::uint64_t p, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

WeilPolynomial::WeilPolynomial(std::uint64_t p, unsigned g, std::vector<mpz_class> e)
    : p_(p), g_(g), e_(std::move(e)) {}

WeilPolynomial WeilPolynomial::from_counts(std::uint64_t p, unsigned g,
                                           const std::vector<std::uint64_t>& counts) {
  if (g < 1) fail(errc::invalid_parameter, "from_counts: genus must be >= 1");
  if (counts.size() != g)
    fail(errc::invalid_parameter, "from_counts: expected exactly g = " + std::to_string(g) + " counts");

  std::vector<mpz_class> s(g + 1);  // s_1..s_g
  for (unsigned n = 1; n <= g; ++n) {
    mpz_class qn = p_power(p, n);
    mpz_class nn(counts[n - 1]);
    // Weil bound: (N_n - p^n - 1)^2 <= 4 g^2 p^n
    mpz_class dev = nn - qn - 1;
    if (dev * dev > 4 * mpz_class(g) * mpz_class(g) * qn)
      fail(errc::invalid_counts,
           "from_counts: N_" + std::to_string(n) + " = " + nn.get_str() + " violates the Weil bound");
    s[n] = qn + 1 - nn;
  }

  std::vector<mpz_class> e(2 * g + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= g; ++k) {
    mpz_class acc = 0;
    for (unsigned i = 1; i <= k; ++i) {
      if (i % 2 == 1)
        acc += e[k - i] * s[i];
      else
        acc -= e[k - i] * s[i];
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k)))
      fail(errc::corrupt_counts,
           "from_counts: Newton's identity for e_" + std::to_string(k) +
               " does not divide exactly; the counts are not point counts of a curve");
    e[k] = acc / static_cast<unsigned long>(k);
  }
  for (unsigned k = 0; k < g; ++k) e[2 * g - k] = p_power(p, g - k) * e[k];
  return WeilPolynomial(p, g, std::move(e));
}

WeilPolynomial WeilPolynomial::from_coefficients(std::uint64_t p, unsigned g,
                                                 const std::vector<mpz_class>& descending) {
  if (g < 1) fail(errc::invalid_parameter, "from_coefficients: genus must be >= 1");
  if (descending.size() != 2 * g + 1)
    fail(errc::invalid_parameter, "from_coefficients: expected 2g+1 coefficients");
  if (descending[0] != 1) fail(errc::invalid_parameter, "from_coefficients: f_p must be monic");
  std::vector<mpz_class> e(2 * g + 1);
  for (unsigned k = 0; k <= 2 * g; ++k) e[k] = k % 2 == 0 ? descending[k] : -descending[k];
  return WeilPolynomial(p, g, std::move(e));
}

std::vector<mpz_class> WeilPolynomial::coefficients_descending() const {
  std::vector<mpz_class> c(e_.size());
  for (std::size_t k = 0; k < e_.size(); ++k) c[k] = k % 2 == 0 ? e_[k] : -e_[k];
  return c;
}

IntPoly WeilPolynomial::to_poly() const {
  auto desc = coefficients_descending();
  return IntPoly(desc.rbegin(), desc.rend());
}

mpz_class WeilPolynomial::power_sum(unsigned n) const {
  if (n < 1) fail(errc::invalid_parameter, "power_sum: n must be >= 1");
  if (g_ < 1 || e_.size() != 2 * g_ + 1) fail(errc::invalid_weil, "power_sum: empty Weil polynomial");
  const unsigned m = 2 * g_;
  std::vector<mpz_class> s(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    unsigned top = k <= m ? k - 1 : m;
    for (unsigned i = 1; i <= top; ++i) {
      if (i % 2 == 1)
        acc += e_[i] * s[k - i];
      else
        acc -= e_[i] * s[k - i];
    }
    if (k <= m) {
      // the k e_k term of Newton's identity
      mpz_class t = mpz_class(k) * e_[k];
      if (k % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    s[k] = acc;
  }
  return s[n];
}

mpz_class WeilPolynomial::predicted_count(unsigned n) const {
  return p_power(p_, n) + 1 - power_sum(n);
}

std::string WeilPolynomial::to_string() const {
  auto desc = coefficients_descending();
  const unsigned d = 2 * g_;
  std::string out;
  for (unsigned k = 0; k <= d; ++k) {
    const mpz_class& c = desc[k];
    if (c == 0) continue;
    unsigned power = d - k;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || power == 0) out += a.get_str();
    if (power > 0) {
      if (a != 1) out += "*";
      out += "x";
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out.empty() ? "0" : out;
}

IntPoly real_weil_polynomial(const WeilPolynomial& w) {
  const unsigned g = w.genus();
  const mpz_class p(w.p());
  // T_j(t), ascending coefficients
  std::vector<IntPoly> T(g + 1);
  T[0] = {2};
  if (g >= 1) T[1] = {0, 1};
  for (unsigned j = 2; j <= g; ++j) {
    IntPoly shifted(T[j - 1].size() + 1, mpz_class(0));
    for (std::size_t i = 0; i < T[j - 1].size(); ++i) shifted[i + 1] = T[j - 1][i];
    T[j] = poly_sub(shifted, poly_scale(T[j - 2], p));
  }
  IntPoly h;
  for (unsigned k = 0; k < g; ++k) {
    IntPoly term = poly_scale(T[g - k], w.e()[k]);
    h = k % 2 == 0 ? poly_add(h, term) : poly_sub(h, term);
  }
  IntPoly eg{w.e()[g]};
  h = g % 2 == 0 ? poly_add(h, eg) : poly_sub(h, eg);
  return h;
}

WeilValidity validate_weil(const WeilPolynomial& w) {
  const unsigned g = w.genus();
  const auto& e = w.e();
  if (g < 1 || e.size() != 2 * g + 1 || !is_prime_u64(w.p()) || w.p() == 2)
    return {false, WeilFailure::functional_equation};
  if (e[0] != 1) return {false, WeilFailure::functional_equation};
  for (unsigned k = 0; k <= g; ++k) {
    mpz_class expected = p_power(w.p(), g - k) * e[k];
    if (e[2 * g - k] != expected) return {false, WeilFailure::functional_equation};
  }

  // All roots of h must be real and lie in [-2 sqrt(p), 2 sqrt(p)].
  IntPoly h = real_weil_polynomial(w);
  IntPoly h1 = poly_divexact(h, poly_gcd(h, poly_derivative(h)));  // squarefree part
  const mpz_class four_p = 4 * mpz_class(w.p());
  // An endpoint root means t^2 - 4p divides h1 (it is the minimal polynomial
  // of 2 sqrt(p)); h1 is squarefree so the factor appears at most once.
  IntPoly endpoint{-four_p, 0, 1};
  if (poly_divides(endpoint, h1)) h1 = poly_divexact(h1, endpoint);
  int d = degree(h1);
  if (d <= 0) return {true, WeilFailure::none};
  if (count_real_roots(h1) != d) return {false, WeilFailure::not_real_rooted};
  if (count_real_roots_in_sqrt_interval(h1, four_p) != d)
    return {false, WeilFailure::root_out_of_range};
  return {true, WeilFailure::none};
}

bool is_ordinary(const WeilPolynomial& w) {
  if (w.genus() < 1 || w.e().size() != 2 * w.genus() + 1)
    fail(errc::invalid_weil, "is_ordinary: empty Weil polynomial");
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), w.e()[w.genus()].get_mpz_t(), static_cast<unsigned long>(w.p()));
  return g == 1;
}

}  // namespace jacrank
