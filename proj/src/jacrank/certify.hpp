#ifndef JACRANK_CERTIFY_HPP
#define JACRANK_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacrank/curve.hpp"
#include "jacrank/weil.hpp"

namespace jacrank {

struct CertifyOptions {
  std::uint64_t q_cap = kDefaultEnumerationCap;
  // Treat non-ordinary reductions as usable; any verdict built on one is
  // downgraded to Inconclusive with a warning step.
  bool relax_ordinary = false;
};

// Everything computed from one good prime.
struct PrimeCertificate {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> counts;  // N_1..N_g
  WeilPolynomial weil;
  bool weil_valid = false;
  bool ordinary = false;
  bool absolutely_simple = false;
  std::string simplicity_witness;  // empty when absolutely simple
  mpz_class discriminant;

  bool usable() const { return weil_valid && ordinary && absolutely_simple; }
  bool usable_relaxed() const { return weil_valid && absolutely_simple; }
};

struct DeductionStep {
  unsigned step = 0;
  std::string statement;
  std::string anchor;

  bool operator==(const DeductionStep&) const = default;
};

enum class EndRingVerdict { TrivialZ, Inconclusive };

std::string to_string(EndRingVerdict v);

struct Certificate {
  HyperellipticCurve curve;
  std::string expression;  // source text, canonical when built from coefficients
  std::vector<PrimeCertificate> prime_certs;  // two, ascending p
  mpz_class disc_gcd;
  EndRingVerdict end_ring = EndRingVerdict::Inconclusive;
  std::optional<int> ns_rank;
  std::optional<bool> theta_generates;
  std::vector<DeductionStep> deduction_log;
};

// The pipeline at a single good prime: counts N_1..N_g, Weil polynomial,
// validity, ordinariness, absolute simplicity, discriminant.
PrimeCertificate certify_prime(const HyperellipticCurve& curve, std::uint64_t p,
                               const CertifyOptions& options = {});

// Scans primes 3, 5, 7, ... <= p_max, skipping bad reduction and unusable
// certificates, and returns the first pair with coprime discriminants.
std::vector<PrimeCertificate> search_primes(const HyperellipticCurve& curve, std::uint64_t p_max,
                                            unsigned required = 2, const CertifyOptions& options = {});

struct EndRingConclusion {
  EndRingVerdict verdict = EndRingVerdict::Inconclusive;
  mpz_class disc_gcd;
  std::vector<DeductionStep> steps;
};

EndRingConclusion conclude_end_ring(const PrimeCertificate& c1, const PrimeCertificate& c2,
                                    bool relax_ordinary = false);

struct PicardConclusion {
  int ns_rank = 0;
  bool theta_generates = false;
  std::vector<DeductionStep> steps;
};

// Requires verdict TrivialZ; deduces rank 1 and that the theta class
// generates, including the literal enumeration of n with |n|^g <= 1.
PicardConclusion conclude_picard_rank(EndRingVerdict verdict, unsigned g,
                                      unsigned first_step = 1);

Certificate certify_at(const HyperellipticCurve& curve, std::string expression, std::uint64_t p1,
                       std::uint64_t p2, const CertifyOptions& options = {});
Certificate certify_search(const HyperellipticCurve& curve, std::string expression,
                           std::uint64_t p_max, const CertifyOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::string divergence;  // empty when ok
};

// Recomputes every field from scratch and additionally recounts
// N_(g+1)..N_(2g), comparing against the counts predicted by the stored Weil
// polynomial. Returns false with the first divergence found.
VerifyResult verify_certificate(const Certificate& cert,
                                std::uint64_t q_cap = kDefaultEnumerationCap);

}  // namespace jacrank

#endif
