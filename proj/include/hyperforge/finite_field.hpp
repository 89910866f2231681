#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hyperforge/abelian_group.hpp"
#include "hyperforge/polynomial.hpp"

namespace hyperforge {

inline constexpr std::uint64_t kDefaultFieldBound = 4096;

/// The finite field F_q = F_p[X]/(m) with m the least monic irreducible of
/// degree k in canonical order. Elements are encoded as integers
/// c0 + c1*p + ... + c_{k-1}*p^{k-1} (the coefficients of their residue
/// polynomial), so 0 and 1 are the field's zero and one. Arithmetic runs on
/// shared log/antilog tables; copies are cheap and immutable.
class FiniteField {
public:
    using Element = std::uint32_t;

    std::uint32_t characteristic() const noexcept { return tables_->p; }
    int degree() const noexcept { return tables_->k; }
    std::uint32_t order() const noexcept { return tables_->q; }
    const FpPolynomial& modulus() const noexcept { return tables_->modulus; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, std::int64_t e) const;

    /// Least element (in encoding order) generating the multiplicative group.
    Element primitive_element() const noexcept { return tables_->exp[1 % tables_->exp.size()]; }
    /// Discrete logarithm to the base primitive_element(); a must be nonzero.
    std::uint32_t log(Element a) const;
    Element exp(std::uint64_t i) const { return tables_->exp[i % (tables_->q - 1)]; }

    FpPolynomial to_poly(Element a) const;
    Element from_poly(const FpPolynomial& f) const;
    std::string to_string(Element a) const { return to_poly(a).to_string('a'); }

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept { return a.tables_->q == b.tables_->q; }

private:
    friend FiniteField make_finite_field(std::uint64_t q, std::uint64_t bound);

    struct Tables {
        std::uint32_t p = 0;
        int k = 0;
        std::uint32_t q = 0;
        FpPolynomial modulus{2};
        std::vector<Element> exp;
        std::vector<std::uint32_t> log;
    };

    explicit FiniteField(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}

    std::shared_ptr<const Tables> tables_;
};

/// Builds F_q; q must be a prime power not above bound.
FiniteField make_finite_field(std::uint64_t q, std::uint64_t bound = kDefaultFieldBound);

struct MultiplicativeGroup {
    FiniteAbelianGroup group;         // cyclic of order q-1
    FiniteField::Element generator;   // least primitive element
};

MultiplicativeGroup multiplicative_group(const FiniteField& f);

/// Elements of the subgroup of F^x of the given order (which must divide
/// q-1), listed as powers of its generator starting from 1.
std::vector<FiniteField::Element> subgroup_elements(const FiniteField& f, std::uint64_t order);

} // namespace hyperforge
