#include "hyperforge/number_theory.hpp"

#include <algorithm>

namespace hyperforge {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return PrimePower{f[0].first, f[0].second};
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= bound; ++q) {
        if (as_prime_power(q)) out.push_back(q);
    }
    return out;
}

std::uint64_t ipow(std::uint64_t base, int exponent) {
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    std::uint64_t r = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1U) r = r * base % modulus;
        base = base * base % modulus;
        exponent >>= 1U;
    }
    return r;
}

} // namespace hyperforge
