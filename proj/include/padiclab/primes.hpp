#pragma once

#include <cstdint>

namespace padiclab {

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Throw InvalidModulusError unless p is prime.
void require_prime(std::uint64_t p);

// Throw InvalidModulusError unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

}  // namespace padiclab
