#ifndef JACRANK_ARITH_HPP
#define JACRANK_ARITH_HPP

#include <cstdint>

namespace jacrank {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t d);

}  // namespace jacrank

#endif
