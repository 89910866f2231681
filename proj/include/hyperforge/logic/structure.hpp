#pragma once

#include <string>
#include <vector>

#include "hyperforge/abelian_group.hpp"
#include "hyperforge/element_set.hpp"
#include "hyperforge/hyperfield.hpp"
#include "hyperforge/logic/formula.hpp"

namespace hyperforge::logic {

/// Largest carrier evaluate will enumerate.
inline constexpr int kMaxEvalCarrier = 10'000;

/// A finite structure over (some of) the symbols {0, 1, mul, inv, neg, add}.
/// Missing symbols are marked by -1 constants or empty tables; a formula
/// that uses one is rejected rather than evaluated.
struct FiniteStructure {
    int size = 0;
    std::string label;
    int zero = -1;
    int one = -1;
    std::vector<int> mul;        // size * size
    std::vector<int> inv;        // size
    std::vector<int> neg;        // size
    std::vector<ElementSet> add; // size * size; z in add[x*size+y] iff add(x,y,z)

    /// Hyperfield view: add(x,y,z) iff z in x+y, inv(0) = 0.
    static FiniteStructure of(const FiniteHyperfield& h);
    /// Group view over {1, mul, inv}; element 0 of the group is the identity.
    static FiniteStructure of(const FiniteAbelianGroup& g);

    bool has_zero() const { return zero >= 0; }
    bool has_one() const { return one >= 0; }
    bool has_mul() const { return !mul.empty(); }
    bool has_inv() const { return !inv.empty(); }
    bool has_neg() const { return !neg.empty(); }
    bool has_add() const { return !add.empty(); }

    int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) + static_cast<std::size_t>(b)]; }
    bool sum_contains(int a, int b, int c) const {
        return add[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) + static_cast<std::size_t>(b)].contains(c);
    }

    /// True when both structures interpret the same symbols.
    bool same_signature(const FiniteStructure& o) const;
};

/// Tarskian truth of a sentence by exhaustive enumeration of quantifiers.
/// Throws PreconditionError for free variables, for symbols the structure
/// does not interpret and for carriers above kMaxEvalCarrier.
bool evaluate(const FiniteStructure& s, const Formula& sentence);

/// Truth of a formula under an assignment of its free variables.
bool evaluate(const FiniteStructure& s, const Formula& f, const std::vector<std::pair<std::string, int>>& assignment);

} // namespace hyperforge::logic
