#include "jacrank/curve.hpp"

#include "jacrank/arith.hpp"
#include "jacrank/errors.hpp"

namespace jacrank {

namespace {

int fp_degree(const FpPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

bool fp_squarefree(const FpPoly& f, std::uint64_t p) {
  // gcd(f, f') must be constant
  FpPoly a(f), b;
  if (a.size() > 1) {
    b.resize(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = mul_mod_u64(i % p, a[i], p);
  }
  while (fp_degree(b) >= 0) {
    int da = fp_degree(a), db = fp_degree(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    std::uint64_t inv = pow_mod_u64(b[static_cast<std::size_t>(db)], p - 2, p);
    while (da >= db && da >= 0) {
      std::uint64_t c = mul_mod_u64(a[static_cast<std::size_t>(da)], inv, p);
      for (int i = 0; i <= db; ++i) {
        std::uint64_t t = mul_mod_u64(c, b[static_cast<std::size_t>(i)], p);
        std::size_t k = static_cast<std::size_t>(da - db + i);
        a[k] = (a[k] + p - t) % p;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      da = fp_degree(a);
    }
    std::swap(a, b);
  }
  return fp_degree(a) == 0;
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(IntPoly f_coeffs) : f_(std::move(f_coeffs)), genus_(0) {
  trim(f_);
  int d = degree(f_);
  if (d < 3) fail(errc::unsupported_genus, "curve: deg f must be at least 3");
  if (!poly_is_squarefree(f_))
    fail(errc::singular_curve, "curve: f has a repeated factor, the model is singular");
  genus_ = static_cast<unsigned>((d - 1) / 2);
}

bool has_good_reduction(const HyperellipticCurve& curve, std::uint64_t p) {
  if (!is_prime_u64(p)) fail(errc::invalid_parameter, "has_good_reduction: p must be prime");
  if (p == 2) return false;
  const IntPoly& f = curve.f();
  int d = degree(f);
  if (mpz_divisible_ui_p(f[static_cast<std::size_t>(d)].get_mpz_t(), static_cast<unsigned long>(p)))
    return false;
  return fp_squarefree(reduce_mod_p(curve, p), p);
}

FpPoly reduce_mod_p(const HyperellipticCurve& curve, std::uint64_t p) {
  const IntPoly& f = curve.f();
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class m = f[i] % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    r[i] = mpz_get_ui(m.get_mpz_t());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

namespace {

// Counting over a prime field: q iterations of a plain Horner evaluation
// mod p. The character comes from a precomputed square table when p is
// small enough for the table to be cheap, and from exponentiation otherwise.
constexpr std::uint64_t kCharacterTableLimit = 1u << 22;

std::uint64_t count_points_prime_field(const FpPoly& f, std::uint64_t p, int lc_chi, bool odd_degree) {
  std::vector<std::int8_t> table;
  if (p <= kCharacterTableLimit) table = quadratic_character_table(p);
  auto chi = [&](std::uint64_t v) -> int {
    if (!table.empty()) return table[v];
    if (v == 0) return 0;
    return pow_mod_u64(v, (p - 1) / 2, p) == 1 ? 1 : -1;
  };
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (mul_mod_u64(v, x, p) + f[i]) % p;
    total += static_cast<std::uint64_t>(1 + chi(v));
  }
  total += odd_degree ? 1 : static_cast<std::uint64_t>(1 + lc_chi);
  return total;
}

}  // namespace

std::uint64_t count_points_in_field(const HyperellipticCurve& curve, const FiniteField& field) {
  const std::uint64_t p = field.characteristic();
  if (!has_good_reduction(curve, p))
    fail(errc::bad_reduction, "count_points: the curve has bad reduction at " + std::to_string(p));

  FpPoly f = reduce_mod_p(curve, p);
  const bool odd_degree = fp_degree(f) % 2 == 1;
  const std::uint64_t lc = f[static_cast<std::size_t>(fp_degree(f))];

  if (field.degree() == 1)
    return count_points_prime_field(f, p, field.quadratic_character(field.from_residue(lc)), odd_degree);

  const std::uint64_t q = field.cardinality_u64();
  std::uint64_t total = 0;
  FiniteField::Elt x = field.zero();
  std::vector<FiniteField::Elt> coeffs;
  coeffs.reserve(f.size());
  for (auto c : f) coeffs.push_back(field.from_residue(c));
  std::uint64_t seen = 0;
  do {
    FiniteField::Elt v = field.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) v = field.add(field.mul(v, x), coeffs[i]);
    total += static_cast<std::uint64_t>(1 + field.quadratic_character(v));
    ++seen;
  } while (field.next_element(x));
  if (seen != q) fail(errc::internal_error, "count_points: enumeration out of bounds");
  total += odd_degree ? 1 : static_cast<std::uint64_t>(1 + field.quadratic_character(field.from_residue(lc)));
  return total;
}

std::uint64_t count_points(const HyperellipticCurve& curve, std::uint64_t p, unsigned n,
                           std::uint64_t q_cap) {
  if (n < 1) fail(errc::invalid_parameter, "count_points: n must be >= 1");
  if (!has_good_reduction(curve, p))
    fail(errc::bad_reduction, "count_points: the curve has bad reduction at " + std::to_string(p));
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  if (q > q_cap)
    fail(errc::resource_limit,
         "count_points: q = " + q.get_str() + " exceeds the enumeration cap " + std::to_string(q_cap));
  return count_points_in_field(curve, FiniteField::make_extension(p, n));
}

}  // namespace jacrank
