#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace sober {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin over the full uint64 range.
bool is_prime_u64(uint64_t n);

uint64_t next_prime_after(uint64_t n);

/// q = p^k with p prime, k >= 1; nullopt otherwise (0 and 1 included).
std::optional<std::pair<uint64_t, unsigned>> prime_power_factor(uint64_t q);

}  // namespace sober
