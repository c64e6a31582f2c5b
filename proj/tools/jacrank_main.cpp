// jacrank CLI: batch certifier for Picard rank 1 of hyperelliptic Jacobians.
//
// Exit codes: 0 success/verified, 1 inconclusive verdict, 2 input error,
// 3 verification failure.

#include <jacrank.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailure = 3;

struct CurveDeleter {
  void operator()(jr_curve* c) const { jr_curve_free(c); }
};
struct CertDeleter {
  void operator()(jr_certificate* c) const { jr_certificate_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { jr_string_free(s); }
};

using CurvePtr = std::unique_ptr<jr_curve, CurveDeleter>;
using CertPtr = std::unique_ptr<jr_certificate, CertDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail_input(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = jr_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  return kExitInputError;
}

CurvePtr load_curve(const std::string& expression, const std::string& coeffs, int& exit_code) {
  jr_curve* raw = nullptr;
  jr_status status;
  if (!expression.empty())
    status = jr_curve_parse(expression.c_str(), &raw);
  else
    status = jr_curve_from_coeffs_csv(coeffs.c_str(), &raw);
  if (status != JR_OK) {
    exit_code = fail_input("could not load the curve");
    return nullptr;
  }
  exit_code = kExitOk;
  return CurvePtr(raw);
}

bool parse_prime_list(const std::string& text, std::vector<uint64_t>& out) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

// write-then-rename so readers never observe a partial certificate
bool write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) return false;
    stream << content;
    if (!stream.flush()) return false;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jacrank: certifies that the geometric endomorphism ring of the Jacobian of "
               "y^2 = f(x) is Z, hence Neron-Severi rank 1 with the theta class as a free "
               "generator, via exact point counts at two good primes"};
  app.require_subcommand(1);

  std::string curve_expr, curve_coeffs, primes_text, out_path, in_path;
  uint64_t p_max = 100;
  uint64_t q_cap = 2'000'000;
  uint64_t prime = 0;
  uint32_t power = 1;
  bool relax_ordinary = false;

  auto add_curve_flags = [&](CLI::App* cmd) {
    cmd->add_option("--curve", curve_expr, "curve as an expression for f(x), e.g. \"x^5+1\"");
    cmd->add_option("--coeffs", curve_coeffs, "comma-separated integer coefficients of f, ascending");
  };

  CLI::App* certify = app.add_subcommand("certify", "run the full pipeline and emit a certificate");
  add_curve_flags(certify);
  certify->add_option("--primes", primes_text, "use exactly these two primes instead of searching");
  certify->add_option("--p-max", p_max, "prime search bound (default 100)");
  certify->add_option("--q-cap", q_cap, "enumeration cap on q = p^n (default 2000000)");
  certify->add_option("--out", out_path, "write the certificate to this file (default: stdout)");
  certify->add_flag("--relax-ordinary", relax_ordinary,
                    "accept non-ordinary reductions (verdict downgrades to Inconclusive)");

  CLI::App* count = app.add_subcommand("count", "count points over F_{p^n}");
  add_curve_flags(count);
  count->add_option("--prime", prime, "the prime p")->required();
  count->add_option("--n", power, "extension degree n (default 1)");
  count->add_option("--q-cap", q_cap, "enumeration cap on q = p^n");

  CLI::App* lpoly = app.add_subcommand("lpoly", "Frobenius characteristic polynomial at one prime");
  add_curve_flags(lpoly);
  lpoly->add_option("--prime", prime, "the prime p")->required();
  lpoly->add_option("--q-cap", q_cap, "enumeration cap on q = p^n");

  CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate file from scratch");
  verify->add_option("--in", in_path, "certificate file to verify")->required();
  verify->add_option("--q-cap", q_cap, "enumeration cap for the recounts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (app.got_subcommand(verify)) {
    std::ifstream stream(in_path, std::ios::binary);
    if (!stream) {
      std::cerr << "error: cannot open '" << in_path << "'\n";
      return kExitInputError;
    }
    std::stringstream buffer;
    buffer << stream.rdbuf();
    std::string text = buffer.str();

    jr_certificate* raw = nullptr;
    if (jr_certificate_from_json(text.c_str(), &raw) != JR_OK)
      return fail_input("could not load the certificate");
    CertPtr cert(raw);

    int ok = 0;
    char* report_raw = nullptr;
    if (jr_certificate_verify(cert.get(), q_cap, &ok, &report_raw) != JR_OK)
      return fail_input("verification could not run");
    StringPtr report(report_raw);
    if (ok) {
      std::cout << "verified: certificate is internally consistent and reproducible\n";
      return kExitOk;
    }
    std::cout << "verification FAILED: " << (report ? report.get() : "") << "\n";
    return kExitVerifyFailure;
  }

  if (curve_expr.empty() && curve_coeffs.empty()) {
    std::cerr << "error: provide the curve via --curve or --coeffs\n";
    return kExitInputError;
  }
  int exit_code = kExitOk;
  CurvePtr curve = load_curve(curve_expr, curve_coeffs, exit_code);
  if (!curve) return exit_code;

  if (app.got_subcommand(count)) {
    uint64_t n_points = 0;
    if (jr_curve_count_points(curve.get(), prime, power, q_cap, &n_points) != JR_OK)
      return fail_input("count failed");
    std::cout << n_points << "\n";
    return kExitOk;
  }

  if (app.got_subcommand(lpoly)) {
    char* raw = nullptr;
    if (jr_curve_lpoly_json(curve.get(), prime, q_cap, &raw) != JR_OK)
      return fail_input("lpoly failed");
    StringPtr json(raw);
    std::cout << json.get();
    return kExitOk;
  }

  // certify
  jr_options options = jr_options_default();
  options.q_cap = q_cap;
  options.relax_ordinary = relax_ordinary ? 1 : 0;

  jr_certificate* raw_cert = nullptr;
  jr_status status;
  if (!primes_text.empty()) {
    std::vector<uint64_t> primes;
    if (!parse_prime_list(primes_text, primes) || primes.size() != 2) {
      std::cerr << "error: --primes expects exactly two comma-separated primes\n";
      return kExitInputError;
    }
    status = jr_certify_at_primes(curve.get(), primes[0], primes[1], &options, &raw_cert);
  } else {
    status = jr_certify_search(curve.get(), p_max, &options, &raw_cert);
  }
  if (status != JR_OK) return fail_input("certification failed");
  CertPtr cert(raw_cert);

  char* json_raw = nullptr;
  if (jr_certificate_to_json(cert.get(), &json_raw) != JR_OK)
    return fail_input("could not serialize the certificate");
  StringPtr json(json_raw);

  if (!out_path.empty()) {
    if (!write_atomically(out_path, json.get())) {
      std::cerr << "error: could not write '" << out_path << "'\n";
      return kExitInputError;
    }
  } else {
    std::cout << json.get();
  }

  const bool trivial = jr_certificate_end_ring(cert.get()) == JR_VERDICT_TRIVIAL_Z;
  std::cerr << "end ring: " << (trivial ? "Z (certified)" : "inconclusive") << "\n";
  if (trivial) {
    std::cerr << "Neron-Severi rank: " << jr_certificate_ns_rank(cert.get())
              << "; theta generates: " << (jr_certificate_theta_generates(cert.get()) == 1 ? "yes" : "no")
              << "\n";
  }
  if (!out_path.empty()) std::cerr << "certificate written to " << out_path << "\n";
  return trivial ? kExitOk : kExitInconclusive;
}
