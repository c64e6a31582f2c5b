#include "jacrank.h"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

#include "jacrank/certificate_json.hpp"
#include "jacrank/certify.hpp"
#include "jacrank/curve.hpp"
#include "jacrank/errors.hpp"
#include "jacrank/expr.hpp"

struct jr_curve {
  jacrank::HyperellipticCurve curve;
  std::string expression;
};

struct jr_certificate {
  jacrank::Certificate cert;
};

namespace {

thread_local std::string g_last_error;

jr_status status_of(const jacrank::Error& e) {
  using jacrank::errc;
  switch (e.code()) {
    case errc::parse_error:
    case errc::json_error:
      return JR_ERROR_PARSE;
    case errc::singular_curve:
      return JR_ERROR_SINGULAR_CURVE;
    case errc::unsupported_genus:
    case errc::unsupported_degree:
      return JR_ERROR_UNSUPPORTED;
    case errc::bad_reduction:
      return JR_ERROR_BAD_REDUCTION;
    case errc::resource_limit:
      return JR_ERROR_RESOURCE_LIMIT;
    case errc::corrupt_counts:
    case errc::invalid_counts:
      return JR_ERROR_CORRUPT_COUNTS;
    case errc::search_exhausted:
      return JR_ERROR_SEARCH_EXHAUSTED;
    case errc::internal_error:
      return JR_ERROR_INTERNAL;
    default:
      return JR_ERROR_INVALID_ARGUMENT;
  }
}

template <typename Fn>
jr_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return JR_OK;
  } catch (const jacrank::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return JR_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JR_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jr_status require(bool cond, const char* message) {
  if (cond) return JR_OK;
  g_last_error = message;
  return JR_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* jr_version(void) { return "0.1.0"; }

const char* jr_last_error(void) { return g_last_error.c_str(); }

void jr_string_free(char* s) { delete[] s; }

jr_options jr_options_default(void) {
  jr_options o;
  o.q_cap = jacrank::kDefaultEnumerationCap;
  o.relax_ordinary = 0;
  return o;
}

jr_status jr_curve_parse(const char* expression, jr_curve** out) {
  if (jr_status s = require(expression && out, "jr_curve_parse: null argument"); s != JR_OK) return s;
  *out = nullptr;
  return guarded([&] {
    jacrank::IntPoly coeffs = jacrank::parse_polynomial(expression);
    *out = new jr_curve{jacrank::HyperellipticCurve(std::move(coeffs)), expression};
  });
}

jr_status jr_curve_from_coeffs_csv(const char* csv, jr_curve** out) {
  if (jr_status s = require(csv && out, "jr_curve_from_coeffs_csv: null argument"); s != JR_OK) return s;
  *out = nullptr;
  return guarded([&] {
    jacrank::IntPoly coeffs;
    std::string text(csv);
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      // trim spaces
      std::size_t a = item.find_first_not_of(" \t");
      std::size_t b = item.find_last_not_of(" \t");
      if (a == std::string::npos)
        jacrank::fail(jacrank::errc::parse_error, "empty coefficient in list");
      item = item.substr(a, b - a + 1);
      for (std::size_t i = item[0] == '-' || item[0] == '+' ? 1 : 0; i < item.size(); ++i) {
        if (item[i] < '0' || item[i] > '9')
          jacrank::fail(jacrank::errc::parse_error, "malformed integer '" + item + "'");
      }
      coeffs.emplace_back(item, 10);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    jacrank::HyperellipticCurve curve(std::move(coeffs));
    std::string expression = jacrank::render_polynomial(curve.f());
    *out = new jr_curve{std::move(curve), std::move(expression)};
  });
}

void jr_curve_free(jr_curve* curve) { delete curve; }

int jr_curve_genus(const jr_curve* curve) {
  return curve ? static_cast<int>(curve->curve.genus()) : -1;
}

jr_status jr_curve_expression(const jr_curve* curve, char** out) {
  if (jr_status s = require(curve && out, "jr_curve_expression: null argument"); s != JR_OK) return s;
  return guarded([&] { *out = copy_string(curve->expression); });
}

jr_status jr_curve_has_good_reduction(const jr_curve* curve, uint64_t p, int* out) {
  if (jr_status s = require(curve && out, "jr_curve_has_good_reduction: null argument"); s != JR_OK)
    return s;
  return guarded([&] { *out = jacrank::has_good_reduction(curve->curve, p) ? 1 : 0; });
}

jr_status jr_curve_count_points(const jr_curve* curve, uint64_t p, uint32_t n, uint64_t q_cap,
                                uint64_t* out) {
  if (jr_status s = require(curve && out, "jr_curve_count_points: null argument"); s != JR_OK) return s;
  return guarded([&] { *out = jacrank::count_points(curve->curve, p, n, q_cap); });
}

jr_status jr_curve_lpoly_json(const jr_curve* curve, uint64_t p, uint64_t q_cap, char** out_json) {
  if (jr_status s = require(curve && out_json, "jr_curve_lpoly_json: null argument"); s != JR_OK)
    return s;
  return guarded([&] {
    jacrank::CertifyOptions options;
    options.q_cap = q_cap;
    jacrank::PrimeCertificate pc = jacrank::certify_prime(curve->curve, p, options);
    nlohmann::ordered_json doc;
    doc["p"] = std::to_string(pc.p);
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (auto c : pc.counts) counts.push_back(std::to_string(c));
    doc["counts"] = std::move(counts);
    doc["weil_polynomial"] = pc.weil.to_string();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : pc.weil.coefficients_descending()) coeffs.push_back(c.get_str());
    doc["weil_coefficients"] = std::move(coeffs);
    doc["weil_valid"] = pc.weil_valid;
    doc["ordinary"] = pc.ordinary;
    doc["absolutely_simple"] = pc.absolutely_simple;
    if (!pc.absolutely_simple) doc["simplicity_witness"] = pc.simplicity_witness;
    doc["discriminant"] = pc.discriminant.get_str();
    *out_json = copy_string(doc.dump(2) + "\n");
  });
}

jr_status jr_certify_at_primes(const jr_curve* curve, uint64_t p1, uint64_t p2,
                               const jr_options* options, jr_certificate** out) {
  if (jr_status s = require(curve && out, "jr_certify_at_primes: null argument"); s != JR_OK) return s;
  *out = nullptr;
  return guarded([&] {
    jacrank::CertifyOptions opt;
    if (options) {
      opt.q_cap = options->q_cap;
      opt.relax_ordinary = options->relax_ordinary != 0;
    }
    *out = new jr_certificate{
        jacrank::certify_at(curve->curve, curve->expression, p1, p2, opt)};
  });
}

jr_status jr_certify_search(const jr_curve* curve, uint64_t p_max, const jr_options* options,
                            jr_certificate** out) {
  if (jr_status s = require(curve && out, "jr_certify_search: null argument"); s != JR_OK) return s;
  *out = nullptr;
  return guarded([&] {
    jacrank::CertifyOptions opt;
    if (options) {
      opt.q_cap = options->q_cap;
      opt.relax_ordinary = options->relax_ordinary != 0;
    }
    *out = new jr_certificate{jacrank::certify_search(curve->curve, curve->expression, p_max, opt)};
  });
}

void jr_certificate_free(jr_certificate* cert) { delete cert; }

jr_verdict jr_certificate_end_ring(const jr_certificate* cert) {
  if (!cert) return JR_VERDICT_INCONCLUSIVE;
  return cert->cert.end_ring == jacrank::EndRingVerdict::TrivialZ ? JR_VERDICT_TRIVIAL_Z
                                                                  : JR_VERDICT_INCONCLUSIVE;
}

int jr_certificate_ns_rank(const jr_certificate* cert) {
  if (!cert || !cert->cert.ns_rank) return -1;
  return *cert->cert.ns_rank;
}

int jr_certificate_theta_generates(const jr_certificate* cert) {
  if (!cert || !cert->cert.theta_generates) return -1;
  return *cert->cert.theta_generates ? 1 : 0;
}

jr_status jr_certificate_to_json(const jr_certificate* cert, char** out) {
  if (jr_status s = require(cert && out, "jr_certificate_to_json: null argument"); s != JR_OK)
    return s;
  return guarded([&] { *out = copy_string(jacrank::certificate_to_json(cert->cert)); });
}

jr_status jr_certificate_from_json(const char* json_text, jr_certificate** out) {
  if (jr_status s = require(json_text && out, "jr_certificate_from_json: null argument"); s != JR_OK)
    return s;
  *out = nullptr;
  return guarded([&] {
    *out = new jr_certificate{jacrank::certificate_from_json(json_text)};
  });
}

jr_status jr_certificate_verify(const jr_certificate* cert, uint64_t q_cap, int* ok, char** report) {
  if (jr_status s = require(cert && ok, "jr_certificate_verify: null argument"); s != JR_OK) return s;
  return guarded([&] {
    jacrank::VerifyResult result = jacrank::verify_certificate(cert->cert, q_cap);
    *ok = result.ok ? 1 : 0;
    if (report) *report = copy_string(result.divergence);
  });
}

}  // extern "C"
