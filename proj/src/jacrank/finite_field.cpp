#include "jacrank/finite_field.hpp"

#include <limits>

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

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  FpPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  // reduce by the monic modulus
  int dm = fp_degree(mod);
  for (int d = fp_degree(r); d >= dm; d = fp_degree(r)) {
    std::uint64_t c = r[static_cast<std::size_t>(d)];
    r[static_cast<std::size_t>(d)] = 0;
    if (c != 0) {
      for (int i = 0; i < dm; ++i) {
        std::uint64_t t = mul_mod_u64(c, mod[static_cast<std::size_t>(i)], p);
        std::size_t k = static_cast<std::size_t>(d - dm + i);
        r[k] = (r[k] + p - t) % p;
      }
    }
  }
  fp_trim(r);
  return r;
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod, std::uint64_t p) {
  FpPoly result{1};
  if (e == 0) return result;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mulmod(result, result, mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mulmod(result, base, mod, p);
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
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
      fp_trim(a);
      da = fp_degree(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const FpPoly& poly, std::uint64_t p) {
  FpPoly f(poly);
  fp_trim(f);
  int d = fp_degree(f);
  if (d < 1) fail(errc::invalid_parameter, "is_irreducible: degree must be at least 1");
  if (f[static_cast<std::size_t>(d)] != 1)
    fail(errc::invalid_parameter, "is_irreducible: polynomial must be monic");

  const FpPoly x{0, 1};
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  if (fp_powmod(x, pd, f, p) != fp_mulmod(x, {1}, f, p)) return false;

  std::vector<unsigned> prime_factors;
  unsigned rem = static_cast<unsigned>(d);
  for (unsigned r = 2; r * r <= rem; ++r) {
    if (rem % r == 0) {
      prime_factors.push_back(r);
      while (rem % r == 0) rem /= r;
    }
  }
  if (rem > 1) prime_factors.push_back(rem);

  for (unsigned r : prime_factors) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d) / r);
    FpPoly xe = fp_powmod(x, e, f, p);
    FpPoly diff(std::max<std::size_t>(xe.size(), 2), 0);
    for (std::size_t i = 0; i < xe.size(); ++i) diff[i] = xe[i];
    diff[1] = (diff[1] + p - 1) % p;  // subtract x
    if (fp_degree(fp_gcd(diff, f, p)) != 0) return false;
  }
  return true;
}

FiniteField FiniteField::make_extension(std::uint64_t p, unsigned n) {
  if (!is_prime_u64(p)) fail(errc::invalid_parameter, "make_extension: p must be prime");
  if (p == 2) fail(errc::invalid_parameter, "make_extension: p = 2 is not supported");
  if (n < 1) fail(errc::invalid_parameter, "make_extension: extension degree must be >= 1");
  if (p > std::numeric_limits<std::uint32_t>::max())
    fail(errc::invalid_parameter, "make_extension: p exceeds the supported range");

  FpPoly candidate(n + 1, 0);
  candidate[n] = 1;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t v = k;
    for (unsigned i = 0; i < n; ++i) {
      candidate[i] = v % p;
      v /= p;
    }
    if (v != 0) fail(errc::internal_error, "make_extension: no irreducible found");
    if (is_irreducible_mod_p(candidate, p)) return FiniteField(p, candidate);
  }
}

FiniteField::FiniteField(std::uint64_t p, FpPoly modulus) : p_(p), n_(0), modulus_(std::move(modulus)) {
  if (!is_prime_u64(p_) || p_ == 2) fail(errc::invalid_parameter, "FiniteField: p must be an odd prime");
  if (p_ > std::numeric_limits<std::uint32_t>::max())
    fail(errc::invalid_parameter, "FiniteField: p exceeds the supported range");
  fp_trim(modulus_);
  int d = fp_degree(modulus_);
  if (d < 1) fail(errc::invalid_parameter, "FiniteField: modulus must have degree >= 1");
  for (auto c : modulus_)
    if (c >= p_) fail(errc::invalid_parameter, "FiniteField: modulus coefficients must lie in [0, p)");
  if (!is_irreducible_mod_p(modulus_, p_))
    fail(errc::invalid_parameter, "FiniteField: modulus is reducible");
  n_ = static_cast<unsigned>(d);
}

mpz_class FiniteField::cardinality() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(n_));
  return q;
}

std::uint64_t FiniteField::cardinality_u64() const {
  mpz_class q = cardinality();
  if (!q.fits_ulong_p()) fail(errc::resource_limit, "field cardinality exceeds 64 bits");
  return mpz_get_ui(q.get_mpz_t());
}

FiniteField::Elt FiniteField::one() const {
  Elt e(n_, 0);
  e[0] = 1;
  return e;
}

FiniteField::Elt FiniteField::from_residue(std::uint64_t r) const {
  Elt e(n_, 0);
  e[0] = r % p_;
  return e;
}

FiniteField::Elt FiniteField::from_integer(const mpz_class& v) const {
  mpz_class r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return from_residue(mpz_get_ui(r.get_mpz_t()));
}

bool FiniteField::is_zero(const Elt& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

FiniteField::Elt FiniteField::add(const Elt& a, const Elt& b) const {
  Elt r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FiniteField::Elt FiniteField::sub(const Elt& a, const Elt& b) const {
  Elt r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FiniteField::Elt FiniteField::neg(const Elt& a) const {
  Elt r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return r;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
  FpPoly r = fp_mulmod(a, b, modulus_, p_);
  r.resize(n_, 0);
  return r;
}

FiniteField::Elt FiniteField::pow(const Elt& a, const mpz_class& e) const {
  if (e < 0) fail(errc::invalid_parameter, "pow: negative exponent");
  FpPoly r = fp_powmod(a, e, modulus_, p_);
  r.resize(n_, 0);
  return r;
}

FiniteField::Elt FiniteField::inverse(const Elt& a) const {
  if (is_zero(a)) fail(errc::invalid_parameter, "inverse of zero");
  return pow(a, cardinality() - 2);
}

int FiniteField::quadratic_character(const Elt& a) const {
  if (is_zero(a)) return 0;
  Elt r = pow(a, (cardinality() - 1) / 2);
  if (r == one()) return 1;
  if (r == neg(one())) return -1;
  fail(errc::internal_error, "quadratic character did not evaluate to +-1");
}

FiniteField::Elt FiniteField::element_at(std::uint64_t rank) const {
  Elt e(n_);
  for (unsigned i = 0; i < n_; ++i) {
    e[i] = rank % p_;
    rank /= p_;
  }
  if (rank != 0) fail(errc::invalid_parameter, "element rank out of range");
  return e;
}

std::uint64_t FiniteField::rank_of(const Elt& a) const {
  std::uint64_t r = 0;
  for (unsigned i = n_; i-- > 0;) r = r * p_ + a[i];
  return r;
}

bool FiniteField::next_element(Elt& a) const {
  for (unsigned i = 0; i < n_; ++i) {
    if (++a[i] < p_) return true;
    a[i] = 0;
  }
  return false;
}

std::vector<std::int8_t> quadratic_character_table(std::uint64_t p) {
  std::vector<std::int8_t> table(p, -1);
  table[0] = 0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) table[mul_mod_u64(x, x, p)] = 1;
  return table;
}

}  // namespace jacrank
