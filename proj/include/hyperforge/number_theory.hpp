#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperforge {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    int exponent;
};

/// Returns (p, k) with q = p^k, or nothing when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Prime powers 2 <= q <= bound, ascending.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound);

std::uint64_t ipow(std::uint64_t base, int exponent);

/// Modular exponentiation; modulus must be below 2^32.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

} // namespace hyperforge
