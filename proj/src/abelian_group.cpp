#include "hyperforge/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

namespace {

// Invariant factors from prime-power elementary divisors: for each prime,
// sort exponents descending and combine the i-th largest powers.
std::vector<std::uint64_t> normalize(const std::vector<std::uint64_t>& orders) {
    std::map<std::uint64_t, std::vector<int>> by_prime;
    for (auto n : orders) {
        if (n == 0) throw PreconditionError("cyclic factor of order 0");
        for (auto [p, e] : factorize(n)) by_prime[p].push_back(e);
    }
    std::size_t width = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.rbegin(), exps.rend());
        width = std::max(width, exps.size());
    }
    std::vector<std::uint64_t> out(width, 1);
    for (auto& [p, exps] : by_prime) {
        for (std::size_t i = 0; i < exps.size(); ++i) out[i] *= ipow(p, exps[i]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<std::uint64_t>& cyclic_orders)
    : factors_(normalize(cyclic_orders)) {
    order_ = 1;
    for (auto d : factors_) order_ *= d;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::uint64_t n) {
    return FiniteAbelianGroup(std::vector<std::uint64_t>{n});
}

std::vector<std::uint64_t> FiniteAbelianGroup::exponents(int a) const {
    std::vector<std::uint64_t> e(factors_.size());
    auto rest = static_cast<std::uint64_t>(a);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e[i] = rest % factors_[i];
        rest /= factors_[i];
    }
    return e;
}

int FiniteAbelianGroup::from_exponents(const std::vector<std::uint64_t>& exps) const {
    std::uint64_t idx = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) idx = idx * factors_[i] + exps[i] % factors_[i];
    return static_cast<int>(idx);
}

int FiniteAbelianGroup::op(int a, int b) const {
    std::uint64_t ra = static_cast<std::uint64_t>(a), rb = static_cast<std::uint64_t>(b);
    std::uint64_t idx = 0, scale = 1;
    for (auto d : factors_) {
        idx += ((ra % d + rb % d) % d) * scale;
        scale *= d;
        ra /= d;
        rb /= d;
    }
    return static_cast<int>(idx);
}

int FiniteAbelianGroup::inverse(int a) const {
    auto e = exponents(a);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (factors_[i] - e[i]) % factors_[i];
    return from_exponents(e);
}

int FiniteAbelianGroup::power(int a, std::int64_t k) const {
    auto e = exponents(a);
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto d = static_cast<std::int64_t>(factors_[i]);
        auto v = (static_cast<std::int64_t>(e[i]) * (k % d)) % d;
        e[i] = static_cast<std::uint64_t>((v + d) % d);
    }
    return from_exponents(e);
}

std::uint64_t FiniteAbelianGroup::element_order(int a) const {
    auto e = exponents(a);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t o = factors_[i] / std::gcd(factors_[i], e[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::string FiniteAbelianGroup::name() const {
    if (factors_.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(factors_[i]);
    }
    return s;
}

std::vector<FiniteAbelianGroup> all_abelian_groups(std::uint64_t n) {
    if (n == 0) throw PreconditionError("group order must be positive");
    // Per prime p^e, choose a partition of e; combine across primes.
    std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
    for (auto [p, e] : factorize(n)) {
        std::vector<std::vector<std::uint64_t>> options;
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int remaining, int max_part) {
            if (remaining == 0) {
                std::vector<std::uint64_t> cyc;
                for (int k : parts) cyc.push_back(ipow(p, k));
                options.push_back(cyc);
                return;
            }
            for (int k = std::min(remaining, max_part); k >= 1; --k) {
                parts.push_back(k);
                rec(remaining - k, k);
                parts.pop_back();
            }
        };
        rec(e, e);
        per_prime.push_back(std::move(options));
    }
    std::vector<FiniteAbelianGroup> out;
    std::vector<std::uint64_t> acc;
    std::function<void(std::size_t)> combine = [&](std::size_t i) {
        if (i == per_prime.size()) {
            out.emplace_back(acc);
            return;
        }
        for (const auto& opt : per_prime[i]) {
            auto saved = acc.size();
            acc.insert(acc.end(), opt.begin(), opt.end());
            combine(i + 1);
            acc.resize(saved);
        }
    };
    combine(0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.invariant_factors().size() < b.invariant_factors().size();
    });
    return out;
}

bool invariant_factor_iso(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
    return g.invariant_factors() == h.invariant_factors();
}

std::vector<CyclicSubgroup> subgroups_of_cyclic(std::uint64_t n) {
    if (n == 0) throw PreconditionError("cyclic group order must be positive");
    std::vector<CyclicSubgroup> out;
    for (auto d : divisors(n)) out.push_back({d, n / d, n / d});
    return out;
}

} // namespace hyperforge
