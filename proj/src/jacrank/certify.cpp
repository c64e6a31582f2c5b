#include "jacrank/certify.hpp"

#include <algorithm>

#include "jacrank/arith.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/expr.hpp"
#include "jacrank/numberfield.hpp"

namespace jacrank {

std::string to_string(EndRingVerdict v) {
  return v == EndRingVerdict::TrivialZ ? "TrivialZ" : "Inconclusive";
}

PrimeCertificate certify_prime(const HyperellipticCurve& curve, std::uint64_t p,
                               const CertifyOptions& options) {
  if (!has_good_reduction(curve, p))
    fail(errc::bad_reduction,
         "certify_prime: the curve has bad reduction at p = " + std::to_string(p));

  PrimeCertificate cert;
  cert.p = p;
  const unsigned g = curve.genus();
  for (unsigned n = 1; n <= g; ++n) cert.counts.push_back(count_points(curve, p, n, options.q_cap));
  cert.weil = WeilPolynomial::from_counts(p, g, cert.counts);
  cert.weil_valid = validate_weil(cert.weil).ok;
  cert.ordinary = cert.weil_valid && is_ordinary(cert.weil);
  if (cert.weil_valid) {
    SimplicityResult s = is_absolutely_simple(cert.weil);
    cert.absolutely_simple = s.simple;
    cert.simplicity_witness = s.witness;
  } else {
    cert.absolutely_simple = false;
    cert.simplicity_witness = "invalid-weil";
  }
  cert.discriminant = poly_discriminant(cert.weil.to_poly());
  return cert;
}

std::vector<PrimeCertificate> search_primes(const HyperellipticCurve& curve, std::uint64_t p_max,
                                            unsigned required, const CertifyOptions& options) {
  if (p_max < 3) fail(errc::invalid_parameter, "search_primes: p_max must be >= 3");
  if (required != 2)
    fail(errc::invalid_parameter, "search_primes: exactly two certificates are required");

  std::vector<PrimeCertificate> usable;
  std::string report;
  for (std::uint64_t p = 3; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    if (!has_good_reduction(curve, p)) continue;
    PrimeCertificate cert;
    try {
      cert = certify_prime(curve, p, options);
    } catch (const Error& e) {
      if (e.code() == errc::resource_limit) {
        report += " p=" + std::to_string(p) + ": skipped (enumeration cap);";
        continue;
      }
      throw;
    }
    bool candidate = options.relax_ordinary ? cert.usable_relaxed() : cert.usable();
    if (!candidate) {
      report += " p=" + std::to_string(p) + ": unusable (valid=" + (cert.weil_valid ? "1" : "0") +
                ", ordinary=" + (cert.ordinary ? "1" : "0") +
                ", simple=" + (cert.absolutely_simple ? "1" : "0") + ");";
      continue;
    }
    for (const auto& earlier : usable) {
      if (discriminant_gcd(earlier.discriminant, cert.discriminant) == 1)
        return {earlier, cert};
    }
    report += " p=" + std::to_string(p) + ": usable, disc=" + cert.discriminant.get_str() + ";";
    usable.push_back(std::move(cert));
  }
  fail(errc::search_exhausted,
       "search_primes: no pair of usable primes <= " + std::to_string(p_max) +
           " with coprime discriminants; partial results:" + (report.empty() ? " none" : report));
}

namespace {

DeductionStep step(unsigned index, std::string statement, std::string anchor) {
  return DeductionStep{index, std::move(statement), std::move(anchor)};
}

}  // namespace

EndRingConclusion conclude_end_ring(const PrimeCertificate& c1, const PrimeCertificate& c2,
                                    bool relax_ordinary) {
  if (c1.p == c2.p) fail(errc::invalid_pair, "conclude_end_ring: the two primes must be distinct");
  for (const PrimeCertificate* c : {&c1, &c2}) {
    bool candidate = relax_ordinary ? c->usable_relaxed() : c->usable();
    if (!candidate)
      fail(errc::unusable_certificate,
           "conclude_end_ring: certificate at p = " + std::to_string(c->p) + " is not usable");
  }
  const PrimeCertificate& a = c1.p < c2.p ? c1 : c2;
  const PrimeCertificate& b = c1.p < c2.p ? c2 : c1;
  const std::string pa = std::to_string(a.p), pb = std::to_string(b.p);

  EndRingConclusion out;
  out.disc_gcd = discriminant_gcd(a.discriminant, b.discriminant);

  out.steps.push_back(step(
      1,
      "The reduction maps at the good primes p = " + pa + " and p = " + pb +
          " embed Q (x) End(J over Qbar) into Q (x) End(J over Fbar_p) for each p.",
      "reduction-injects"));

  const bool both_ordinary = a.ordinary && b.ordinary;
  if (both_ordinary) {
    out.steps.push_back(step(
        2,
        "Each reduction is absolutely simple and ordinary, so Q (x) End(J over Fbar_p) = "
        "Q[x]/(f_p): f_" + pa + " = " + a.weil.to_string() + ", f_" + pb + " = " + b.weil.to_string() + ".",
        "endo-algebra-identification"));
  } else {
    out.steps.push_back(step(
        2,
        "Each reduction is absolutely simple but ordinariness fails at at least one prime, so the "
        "identification Q (x) End(J over Fbar_p) = Q[x]/(f_p) is not established (f_" + pa + " = " +
            a.weil.to_string() + ", f_" + pb + " = " + b.weil.to_string() + ").",
        "endo-algebra-identification-unverified"));
  }

  if (out.disc_gcd == 1 && both_ordinary) {
    out.steps.push_back(step(
        3,
        "gcd(disc(f_" + pa + "), disc(f_" + pb + ")) = gcd(" + a.discriminant.get_str() + ", " +
            b.discriminant.get_str() +
            ") = 1, so any number field embedding into both Q[x]/(f_" + pa + ") and Q[x]/(f_" + pb +
            ") is unramified at every prime; Q has no nontrivial unramified extension "
            "(Minkowski), so that field is Q.",
        "coprime-discriminants-minkowski"));
    out.steps.push_back(step(
        4,
        "Q (x) End(J over Qbar) embeds into both fields, hence equals Q; End(J over Qbar) is a "
        "subring with 1 of its maximal order Z, so End(J over Qbar) = Z.",
        "end-ring-trivial"));
    out.verdict = EndRingVerdict::TrivialZ;
  } else if (out.disc_gcd != 1) {
    out.steps.push_back(step(
        3,
        "gcd(disc(f_" + pa + "), disc(f_" + pb + ")) = gcd(" + a.discriminant.get_str() + ", " +
            b.discriminant.get_str() + ") = " + out.disc_gcd.get_str() +
            " != 1: the common-subfield criterion does not apply.",
        "coprime-discriminants-failed"));
    out.steps.push_back(step(4,
                             "Verdict: Inconclusive. The criterion is one-sided; no claim is made "
                             "about End(J over Qbar).",
                             "end-ring-inconclusive"));
    out.verdict = EndRingVerdict::Inconclusive;
  } else {
    out.steps.push_back(step(
        3,
        "The discriminants are coprime, but without ordinariness at both primes the endomorphism "
        "algebra identification is unverified; the deduction stops here.",
        "coprime-discriminants-minkowski"));
    out.steps.push_back(step(4,
                             "Verdict: Inconclusive (ordinariness relaxed). No claim is made about "
                             "End(J over Qbar).",
                             "end-ring-inconclusive"));
    out.verdict = EndRingVerdict::Inconclusive;
  }
  return out;
}

PicardConclusion conclude_picard_rank(EndRingVerdict verdict, unsigned g, unsigned first_step) {
  if (verdict != EndRingVerdict::TrivialZ)
    fail(errc::invalid_parameter, "conclude_picard_rank: requires the verdict End = Z");
  if (g < 1) fail(errc::invalid_parameter, "conclude_picard_rank: genus must be >= 1");

  PicardConclusion out;
  out.ns_rank = 1;
  out.steps.push_back(step(
      first_step,
      "NS(J over Qbar) embeds into End(J over Qbar) = Z and is torsion-free, so it is infinite "
      "cyclic: the Picard (Neron-Severi) rank is 1.",
      "ns-injects-torsion-free"));

  // theta = n c for a generator c; theta^g/g! = 1 forces n^g * (c^g/g!) = 1,
  // so n^g divides 1. Enumerate the integers with |n|^g <= 1 literally.
  std::vector<long> solutions;
  for (long n = -1; n <= 1; ++n) {
    if (n == 0) continue;  // theta is nonzero since theta^g/g! = 1
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(g));
    if (abs(power) == 1) solutions.push_back(n);
  }
  out.theta_generates = solutions.size() == 2 && solutions[0] == -1 && solutions[1] == 1;
  if (!out.theta_generates)
    fail(errc::internal_error, "conclude_picard_rank: unit enumeration failed");
  out.steps.push_back(step(
      first_step + 1,
      "Write theta = n*c for a generator c of NS(J over Qbar); theta^" + std::to_string(g) + "/" +
          std::to_string(g) + "! = 1 (Riemann-Roch on the Jacobian), so n^" + std::to_string(g) +
          " divides 1; the only integers with |n|^" + std::to_string(g) +
          " <= 1 and n != 0 are n = -1 and n = +1, so theta freely generates NS(J over Qbar).",
      "theta-riemann-roch-unit"));
  return out;
}

namespace {

Certificate assemble(const HyperellipticCurve& curve, std::string expression,
                     PrimeCertificate first, PrimeCertificate second, const CertifyOptions& options) {
  if (second.p < first.p) std::swap(first, second);
  EndRingConclusion conclusion = conclude_end_ring(first, second, options.relax_ordinary);

  Certificate cert{curve,
                   std::move(expression),
                   {std::move(first), std::move(second)},
                   conclusion.disc_gcd,
                   conclusion.verdict,
                   std::nullopt,
                   std::nullopt,
                   std::move(conclusion.steps)};
  if (cert.end_ring == EndRingVerdict::TrivialZ) {
    PicardConclusion picard = conclude_picard_rank(
        cert.end_ring, curve.genus(), static_cast<unsigned>(cert.deduction_log.size()) + 1);
    cert.ns_rank = picard.ns_rank;
    cert.theta_generates = picard.theta_generates;
    cert.deduction_log.insert(cert.deduction_log.end(), picard.steps.begin(), picard.steps.end());
  }
  return cert;
}

}  // namespace

Certificate certify_at(const HyperellipticCurve& curve, std::string expression, std::uint64_t p1,
                       std::uint64_t p2, const CertifyOptions& options) {
  if (p1 == p2) fail(errc::invalid_pair, "certify: the two primes must be distinct");
  PrimeCertificate c1 = certify_prime(curve, p1, options);
  PrimeCertificate c2 = certify_prime(curve, p2, options);
  return assemble(curve, std::move(expression), std::move(c1), std::move(c2), options);
}

Certificate certify_search(const HyperellipticCurve& curve, std::string expression,
                           std::uint64_t p_max, const CertifyOptions& options) {
  auto pair = search_primes(curve, p_max, 2, options);
  return assemble(curve, std::move(expression), std::move(pair[0]), std::move(pair[1]), options);
}

namespace {

std::string describe(const std::string& what, std::uint64_t p) {
  return what + " at p = " + std::to_string(p);
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert, std::uint64_t q_cap) {
  try {
    CertifyOptions options;
    options.q_cap = q_cap;

    // curve-level fields
    IntPoly parsed = parse_polynomial(cert.expression);
    if (parsed != cert.curve.f()) return {false, "expression does not expand to the stored coefficients"};
    if (cert.prime_certs.size() != 2) return {false, "certificate must contain exactly two primes"};
    if (cert.prime_certs[0].p >= cert.prime_certs[1].p)
      return {false, "prime certificates must be at distinct primes in ascending order"};

    const unsigned g = cert.curve.genus();
    for (const PrimeCertificate& pc : cert.prime_certs) {
      const std::uint64_t p = pc.p;
      if (!is_prime_u64(p)) return {false, describe("stored p is not prime", p)};
      if (!has_good_reduction(cert.curve, p)) return {false, describe("bad reduction", p)};
      if (pc.counts.size() != g) return {false, describe("count list has wrong length", p)};
      for (unsigned n = 1; n <= g; ++n) {
        std::uint64_t counted = count_points(cert.curve, p, n, q_cap);
        if (counted != pc.counts[n - 1])
          return {false, describe("recount mismatch for N_" + std::to_string(n), p)};
      }
      WeilPolynomial recomputed = WeilPolynomial::from_counts(p, g, pc.counts);
      if (!(recomputed == pc.weil)) return {false, describe("Weil polynomial mismatch", p)};
      if (validate_weil(recomputed).ok != pc.weil_valid)
        return {false, describe("weil_valid flag mismatch", p)};
      if (!pc.weil_valid) return {false, describe("certificate uses an invalid Weil polynomial", p)};
      if (is_ordinary(recomputed) != pc.ordinary)
        return {false, describe("ordinary flag mismatch", p)};
      SimplicityResult s = is_absolutely_simple(recomputed);
      if (s.simple != pc.absolutely_simple || s.witness != pc.simplicity_witness)
        return {false, describe("absolute-simplicity mismatch", p)};
      if (!s.simple) return {false, describe("certificate uses a non-simple reduction", p)};
      if (poly_discriminant(recomputed.to_poly()) != pc.discriminant)
        return {false, describe("discriminant mismatch", p)};

      // over-determination: the stored polynomial must predict the next g
      // brute-force counts
      for (unsigned n = g + 1; n <= 2 * g; ++n) {
        mpz_class predicted = recomputed.predicted_count(n);
        mpz_class counted(count_points(cert.curve, p, n, q_cap));
        if (predicted != counted)
          return {false, describe("over-determination failed at N_" + std::to_string(n), p)};
      }
    }

    const PrimeCertificate& a = cert.prime_certs[0];
    const PrimeCertificate& b = cert.prime_certs[1];
    mpz_class expected_gcd = discriminant_gcd(a.discriminant, b.discriminant);
    if (expected_gcd != cert.disc_gcd) return {false, "disc_gcd mismatch"};

    const bool relax = !(a.ordinary && b.ordinary);
    EndRingConclusion conclusion = conclude_end_ring(a, b, relax);
    if (conclusion.verdict != cert.end_ring) return {false, "end_ring verdict mismatch"};

    std::vector<DeductionStep> expected_log = conclusion.steps;
    if (cert.end_ring == EndRingVerdict::TrivialZ) {
      PicardConclusion picard = conclude_picard_rank(cert.end_ring, g,
                                                     static_cast<unsigned>(expected_log.size()) + 1);
      if (!cert.ns_rank || *cert.ns_rank != picard.ns_rank) return {false, "ns_rank mismatch"};
      if (!cert.theta_generates || *cert.theta_generates != picard.theta_generates)
        return {false, "theta_generates mismatch"};
      expected_log.insert(expected_log.end(), picard.steps.begin(), picard.steps.end());
    } else {
      if (cert.ns_rank || cert.theta_generates)
        return {false, "ns_rank/theta_generates must be unknown for an inconclusive verdict"};
    }
    if (expected_log != cert.deduction_log) return {false, "deduction log mismatch"};
    return {true, ""};
  } catch (const Error& e) {
    return {false, std::string("verification aborted: ") + e.what()};
  }
}

}  // namespace jacrank
