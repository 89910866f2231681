#pragma once

// Random witness families for certificate/oracle cross-checks.
//
// Every element is  m * prod Q^e * conj(Q)^f  with m in the base ring,
// Q drawn from a small pool of split primes and e, f in {0, 1}. Units other
// than base-ring constants and ramified primes such as 1+i or X are left
// out: they change a/conj(a) by a root of unity that valuations cannot see,
// and then the certificate and the conjugation test legitimately disagree.
// With these choices all valuation entries are in {-1, 0, 1}, so for k <= 3
// any dependency has a witness with |n_i| <= 2.

#include <random>
#include <vector>

#include "hyperforge/rank_witness.hpp"

namespace hyperforge::testing {

inline RingElement random_base_element(const CaseTag& tag, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    if (tag.kind == WitnessCase::Gauss) {
        static const long long choices[] = {1, -1, 3, -7, 21, 5, -10};
        std::uniform_int_distribution<int> idx(0, 6);
        return GaussianInteger(choices[idx(rng)], 0);
    }
    const auto p = tag.p;
    std::uniform_int_distribution<FpPolynomial::Coeff> coeff(0, p - 1), unit(1, p - 1);
    FpPolynomial g(p, {unit(rng)});
    const int degree = pick(rng) == 0 ? 1 : 0; // usually a constant
    if (degree == 1) g = FpPolynomial(p, {coeff(rng), unit(rng)});
    const FpPolynomial t = tag.kind == WitnessCase::FpSquare ? FpPolynomial::monomial(p, 1, 2) : FpPolynomial(2, {0, 1, 1});
    return g.compose(t);
}

inline RingElement times(const RingElement& a, const RingElement& b) {
    if (const auto* f = std::get_if<FpPolynomial>(&a)) return *f * std::get<FpPolynomial>(b);
    return std::get<GaussianInteger>(a) * std::get<GaussianInteger>(b);
}

struct RandomFamily {
    WitnessFamily family;
    bool planted = false; // a dependency was inserted on purpose
};

inline RandomFamily random_family(std::mt19937_64& rng) {
    static const CaseTag tags[] = {CaseTag::gauss(), CaseTag::fp_square(3), CaseTag::fp_square(5),
                                   CaseTag::f2_artin_schreier()};
    std::uniform_int_distribution<int> tag_pick(0, 3), k_pick(1, 3), bit(0, 1), pool_pick(0, 3), plant_pick(0, 2);
    const CaseTag tag = tags[tag_pick(rng)];
    const auto pool = split_records(tag, 4);
    const int k = k_pick(rng);
    std::vector<RingElement> elements;
    for (int i = 0; i < k; ++i) {
        RingElement x = random_base_element(tag, rng);
        for (int draw = 0; draw < 2; ++draw) {
            const auto& rec = pool[static_cast<std::size_t>(pool_pick(rng))];
            if (bit(rng)) x = times(x, rec.factor);
            if (bit(rng)) x = times(x, rec.conjugate_factor);
        }
        elements.push_back(x);
    }
    bool planted = false;
    if (plant_pick(rng) == 0) {
        planted = true;
        if (elements.size() == 3) elements.pop_back();
        std::uniform_int_distribution<int> which(0, static_cast<int>(elements.size()) - 1), how(0, 2);
        const auto& a = elements[static_cast<std::size_t>(which(rng))];
        const auto& b = elements[static_cast<std::size_t>(which(rng))];
        switch (how(rng)) {
        case 0: elements.push_back(conjugate(tag, a)); break;
        case 1: elements.push_back(random_base_element(tag, rng)); break;
        default: elements.push_back(times(a, b)); break;
        }
    }
    return {make_family(tag, std::move(elements)), planted};
}

} // namespace hyperforge::testing
