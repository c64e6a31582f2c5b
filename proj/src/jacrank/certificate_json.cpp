#include "jacrank/certificate_json.hpp"

#include <json.hpp>

#include "jacrank/errors.hpp"

namespace jacrank {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string decimal(const mpz_class& v) { return v.get_str(); }
std::string decimal(std::uint64_t v) { return std::to_string(v); }

mpz_class parse_decimal(const ordered_json& j, const char* what) {
  if (!j.is_string()) fail(errc::json_error, std::string(what) + ": expected a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  if (s.empty() || (s[0] == '-' && s.size() == 1))
    fail(errc::json_error, std::string(what) + ": empty decimal string");
  for (std::size_t i = s[0] == '-' ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(errc::json_error, std::string(what) + ": malformed decimal string '" + s + "'");
  }
  return mpz_class(s, 10);
}

std::uint64_t parse_u64(const ordered_json& j, const char* what) {
  mpz_class v = parse_decimal(j, what);
  if (v < 0 || !v.fits_ulong_p()) fail(errc::json_error, std::string(what) + ": out of range");
  return mpz_get_ui(v.get_mpz_t());
}

const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(errc::json_error, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  ordered_json doc;
  doc["schema_version"] = kCertificateSchemaVersion;

  ordered_json curve;
  curve["expression"] = cert.expression;
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : cert.curve.f()) coeffs.push_back(decimal(c));
  curve["coefficients"] = std::move(coeffs);
  curve["genus"] = decimal(cert.curve.genus());
  doc["curve"] = std::move(curve);

  ordered_json primes = ordered_json::array();
  for (const PrimeCertificate& pc : cert.prime_certs) {
    ordered_json entry;
    entry["p"] = decimal(pc.p);
    ordered_json counts = ordered_json::array();
    for (auto n : pc.counts) counts.push_back(decimal(n));
    entry["counts"] = std::move(counts);
    ordered_json weil = ordered_json::array();
    for (const auto& c : pc.weil.coefficients_descending()) weil.push_back(decimal(c));
    entry["weil_coefficients"] = std::move(weil);
    entry["weil_valid"] = pc.weil_valid;
    entry["ordinary"] = pc.ordinary;
    entry["absolutely_simple"] = pc.absolutely_simple;
    if (!pc.absolutely_simple) entry["simplicity_witness"] = pc.simplicity_witness;
    entry["discriminant"] = decimal(pc.discriminant);
    primes.push_back(std::move(entry));
  }
  doc["primes"] = std::move(primes);

  doc["disc_gcd"] = decimal(cert.disc_gcd);
  doc["end_ring"] = to_string(cert.end_ring);
  if (cert.ns_rank)
    doc["ns_rank"] = decimal(mpz_class(*cert.ns_rank));
  else
    doc["ns_rank"] = nullptr;
  if (cert.theta_generates)
    doc["theta_generates"] = *cert.theta_generates;
  else
    doc["theta_generates"] = nullptr;

  ordered_json log = ordered_json::array();
  for (const DeductionStep& s : cert.deduction_log) {
    ordered_json entry;
    entry["step"] = decimal(s.step);
    entry["statement"] = s.statement;
    entry["anchor"] = s.anchor;
    log.push_back(std::move(entry));
  }
  doc["deduction_log"] = std::move(log);

  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::json_error, std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::json_error, "certificate must be a JSON object");
  if (field(doc, "schema_version") != kCertificateSchemaVersion)
    fail(errc::json_error, "unsupported schema version");

  const ordered_json& jcurve = field(doc, "curve");
  IntPoly coeffs;
  for (const auto& c : field(jcurve, "coefficients")) coeffs.push_back(parse_decimal(c, "coefficient"));
  HyperellipticCurve curve(coeffs);
  if (parse_u64(field(jcurve, "genus"), "genus") != curve.genus())
    fail(errc::json_error, "genus does not match the stored coefficients");
  std::string expression = field(jcurve, "expression").get<std::string>();

  const ordered_json& jprimes = field(doc, "primes");
  if (!jprimes.is_array() || jprimes.size() != 2)
    fail(errc::json_error, "certificate must carry exactly two prime entries");

  std::vector<PrimeCertificate> prime_certs;
  for (const auto& entry : jprimes) {
    PrimeCertificate pc;
    pc.p = parse_u64(field(entry, "p"), "p");
    for (const auto& c : field(entry, "counts"))
      pc.counts.push_back(parse_u64(c, "count"));
    std::vector<mpz_class> weil;
    for (const auto& c : field(entry, "weil_coefficients"))
      weil.push_back(parse_decimal(c, "weil coefficient"));
    if (weil.size() != 2 * curve.genus() + 1)
      fail(errc::json_error, "weil_coefficients must have length 2g+1");
    pc.weil = WeilPolynomial::from_coefficients(pc.p, curve.genus(), weil);
    pc.weil_valid = field(entry, "weil_valid").get<bool>();
    pc.ordinary = field(entry, "ordinary").get<bool>();
    pc.absolutely_simple = field(entry, "absolutely_simple").get<bool>();
    if (!pc.absolutely_simple)
      pc.simplicity_witness = field(entry, "simplicity_witness").get<std::string>();
    pc.discriminant = parse_decimal(field(entry, "discriminant"), "discriminant");
    prime_certs.push_back(std::move(pc));
  }

  Certificate cert{std::move(curve),
                   std::move(expression),
                   std::move(prime_certs),
                   parse_decimal(field(doc, "disc_gcd"), "disc_gcd"),
                   EndRingVerdict::Inconclusive,
                   std::nullopt,
                   std::nullopt,
                   {}};

  const std::string verdict = field(doc, "end_ring").get<std::string>();
  if (verdict == "TrivialZ")
    cert.end_ring = EndRingVerdict::TrivialZ;
  else if (verdict == "Inconclusive")
    cert.end_ring = EndRingVerdict::Inconclusive;
  else
    fail(errc::json_error, "unknown end_ring verdict '" + verdict + "'");

  const ordered_json& jrank = field(doc, "ns_rank");
  if (!jrank.is_null()) {
    mpz_class r = parse_decimal(jrank, "ns_rank");
    if (!r.fits_sint_p()) fail(errc::json_error, "ns_rank out of range");
    cert.ns_rank = static_cast<int>(mpz_get_si(r.get_mpz_t()));
  }
  const ordered_json& jtheta = field(doc, "theta_generates");
  if (!jtheta.is_null()) {
    if (!jtheta.is_boolean()) fail(errc::json_error, "theta_generates must be boolean or null");
    cert.theta_generates = jtheta.get<bool>();
  }

  for (const auto& entry : field(doc, "deduction_log")) {
    DeductionStep s;
    s.step = static_cast<unsigned>(parse_u64(field(entry, "step"), "step"));
    s.statement = field(entry, "statement").get<std::string>();
    s.anchor = field(entry, "anchor").get<std::string>();
    cert.deduction_log.push_back(std::move(s));
  }
  return cert;
}

}  // namespace jacrank
