#include "hyperforge/finite_field.hpp"

#include <sstream>

#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

FiniteField::Element FiniteField::add(Element a, Element b) const {
    const std::uint32_t p = tables_->p;
    if (p == 2) return a ^ b;
    Element out = 0, scale = 1;
    for (int i = 0; i < tables_->k; ++i) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
    const std::uint32_t p = tables_->p;
    if (p == 2) return a;
    Element out = 0, scale = 1;
    for (int i = 0; i < tables_->k; ++i) {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    const auto n = tables_->q - 1;
    return tables_->exp[(tables_->log[a] + tables_->log[b]) % n];
}

FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0) throw PreconditionError("zero has no multiplicative inverse");
    const auto n = tables_->q - 1;
    return tables_->exp[(n - tables_->log[a]) % n];
}

FiniteField::Element FiniteField::pow(Element a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw PreconditionError("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const auto n = static_cast<std::int64_t>(tables_->q - 1);
    auto i = (static_cast<std::int64_t>(tables_->log[a]) * (e % n)) % n;
    return tables_->exp[static_cast<std::size_t>((i + n) % n)];
}

std::uint32_t FiniteField::log(Element a) const {
    if (a == 0) throw PreconditionError("logarithm of zero");
    return tables_->log[a];
}

FpPolynomial FiniteField::to_poly(Element a) const {
    std::vector<FpPolynomial::Coeff> c(static_cast<std::size_t>(tables_->k));
    for (auto& v : c) {
        v = a % tables_->p;
        a /= tables_->p;
    }
    return FpPolynomial(tables_->p, std::move(c));
}

FiniteField::Element FiniteField::from_poly(const FpPolynomial& f) const {
    FpPolynomial r = f % tables_->modulus;
    Element out = 0;
    for (int i = r.degree(); i >= 0; --i) out = out * tables_->p + r.coeff(i);
    return out;
}

FiniteField make_finite_field(std::uint64_t q, std::uint64_t bound) {
    auto pp = as_prime_power(q);
    if (!pp) {
        std::ostringstream msg;
        msg << "q = " << q << " is not a prime power";
        if (q >= 2) {
            msg << " (" << q << " =";
            bool first = true;
            for (auto [p, e] : factorize(q)) {
                msg << (first ? " " : " * ") << p;
                if (e > 1) msg << "^" << e;
                first = false;
            }
            msg << ")";
        }
        throw PreconditionError(msg.str());
    }
    if (q > bound) {
        throw BoundError("field order " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
    }
    auto t = std::make_shared<FiniteField::Tables>();
    t->p = static_cast<std::uint32_t>(pp->prime);
    t->k = pp->exponent;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = least_monic_irreducible(t->p, t->k);

    auto encode = [&](const FpPolynomial& f) {
        std::uint32_t out = 0;
        for (int i = f.degree(); i >= 0; --i) out = out * t->p + f.coeff(i);
        return out;
    };
    auto decode = [&](std::uint32_t a) {
        std::vector<FpPolynomial::Coeff> c(static_cast<std::size_t>(t->k));
        for (auto& v : c) {
            v = a % t->p;
            a /= t->p;
        }
        return FpPolynomial(t->p, std::move(c));
    };

    const std::uint32_t n = t->q - 1;
    for (std::uint32_t cand = 1; cand < t->q; ++cand) {
        FpPolynomial g = decode(cand);
        std::vector<FiniteField::Element> powers{1};
        FpPolynomial cur = FpPolynomial::constant(t->p, 1);
        for (;;) {
            cur = cur * g % t->modulus;
            auto e = encode(cur);
            if (e == 1) break;
            powers.push_back(e);
        }
        if (powers.size() == n) {
            t->exp = std::move(powers);
            break;
        }
    }
    t->log.assign(t->q, 0);
    for (std::uint32_t i = 0; i < n; ++i) t->log[t->exp[i]] = i;
    return FiniteField(std::move(t));
}

MultiplicativeGroup multiplicative_group(const FiniteField& f) {
    return {FiniteAbelianGroup::cyclic(f.order() - 1), f.primitive_element()};
}

std::vector<FiniteField::Element> subgroup_elements(const FiniteField& f, std::uint64_t order) {
    const std::uint64_t n = f.order() - 1;
    if (order == 0 || n % order != 0) {
        throw PreconditionError("subgroup order " + std::to_string(order) + " does not divide " + std::to_string(n));
    }
    std::vector<FiniteField::Element> out;
    const std::uint64_t step = n / order;
    for (std::uint64_t i = 0; i < order; ++i) out.push_back(f.exp(i * step));
    return out;
}

} // namespace hyperforge
