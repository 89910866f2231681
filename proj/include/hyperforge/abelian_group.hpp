#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperforge {

/// Finite abelian group C_{d1} x ... x C_{dk} in invariant-factor form
/// (d1 | d2 | ... | dk, each >= 2). Elements are exponent tuples, encoded
/// as mixed-radix indices in [0, order) with the first factor least
/// significant; index 0 is the identity.
class FiniteAbelianGroup {
public:
    /// Trivial group.
    FiniteAbelianGroup() = default;

    /// Accepts any list of cyclic orders (>= 1) and normalizes it, so
    /// {2, 3} and {6} give the same group.
    explicit FiniteAbelianGroup(const std::vector<std::uint64_t>& cyclic_orders);

    static FiniteAbelianGroup cyclic(std::uint64_t n);

    const std::vector<std::uint64_t>& invariant_factors() const noexcept { return factors_; }
    std::uint64_t order() const noexcept { return order_; }

    int op(int a, int b) const;
    int inverse(int a) const;
    int power(int a, std::int64_t e) const;
    /// Order of an element.
    std::uint64_t element_order(int a) const;

    std::vector<std::uint64_t> exponents(int a) const;
    int from_exponents(const std::vector<std::uint64_t>& exps) const;

    /// "C4", "C2xC2", "C1" for the trivial group.
    std::string name() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<std::uint64_t> factors_;
    std::uint64_t order_ = 1;
};

/// Every isomorphism type of abelian group of order n, in a fixed order
/// (fewest factors first).
std::vector<FiniteAbelianGroup> all_abelian_groups(std::uint64_t n);

/// Finite abelian groups are elementarily equivalent exactly when they are
/// isomorphic, which happens exactly when the invariant factors agree.
bool invariant_factor_iso(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

/// Subgroup of a cyclic group C_n = <g>: the unique subgroup of the given order.
struct CyclicSubgroup {
    std::uint64_t order;
    std::uint64_t index;              // n / order
    std::uint64_t generator_exponent; // subgroup = <g^index>
};

/// One subgroup per divisor of n, ascending by order.
std::vector<CyclicSubgroup> subgroups_of_cyclic(std::uint64_t n);

} // namespace hyperforge
