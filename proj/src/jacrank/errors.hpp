#ifndef JACRANK_ERRORS_HPP
#define JACRANK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace jacrank {

enum class errc {
  invalid_parameter,
  parse_error,
  singular_curve,
  unsupported_genus,
  unsupported_degree,
  bad_reduction,
  resource_limit,
  corrupt_counts,
  invalid_counts,
  invalid_input,
  invalid_weil,
  invalid_discriminant,
  invalid_pair,
  unusable_certificate,
  search_exhausted,
  json_error,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace jacrank

#endif
