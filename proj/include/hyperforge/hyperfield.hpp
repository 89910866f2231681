#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforge/abelian_group.hpp"
#include "hyperforge/element_set.hpp"
#include "hyperforge/finite_field.hpp"

namespace hyperforge {

/// A finite hyperfield given by tables. Element 0 is the additive neutral
/// element; the nonzero elements form an abelian group under mul with
/// identity one(), and 0 absorbs. Hyperaddition maps each ordered pair to a
/// nonempty subset of the carrier.
///
/// Construction checks well-formedness only (table shapes, ranges, nonempty
/// sums, the multiplicative group); the hyperfield axioms themselves are
/// judged by verify_axioms.
class FiniteHyperfield {
public:
    /// mul and hyperadd are row-major n*n tables. Throws MalformedError.
    FiniteHyperfield(int n, int one, std::vector<int> mul, std::vector<int> neg, std::vector<ElementSet> hyperadd,
                     std::string label = {});

    int size() const noexcept { return n_; }
    int one() const noexcept { return one_; }
    const std::string& label() const noexcept { return label_; }

    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    /// Multiplicative inverse, with inv(0) = 0.
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    const ElementSet& add(int a, int b) const { return add_[idx(a, b)]; }

    /// Union of a + b over a in the set.
    ElementSet add(const ElementSet& s, int b) const;
    /// Union of a + b over a in s, b in t.
    ElementSet add(const ElementSet& s, const ElementSet& t) const;

    /// Multiplicative order of a nonzero element.
    int multiplicative_order(int a) const;

    /// Copy with one hyperaddition entry replaced (used for negative controls).
    FiniteHyperfield with_sum(int a, int b, ElementSet value, std::string label = {}) const;
    FiniteHyperfield relabeled(std::string label) const;

    friend bool operator==(const FiniteHyperfield& a, const FiniteHyperfield& b) {
        return a.n_ == b.n_ && a.one_ == b.one_ && a.mul_ == b.mul_ && a.neg_ == b.neg_ && a.add_ == b.add_;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b); }

    int n_;
    int one_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> neg_;
    std::vector<ElementSet> add_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Constructions

/// K/G for a field K and a subgroup G of K^x given by its elements. Element
/// i+1 of the result is the coset g^i G (g the primitive element of K), so
/// one() == 1. Throws PreconditionError when G is not a subgroup.
FiniteHyperfield krasner_quotient(const FiniteField& field, const std::vector<FiniteField::Element>& subgroup);

/// K/G with G the subgroup of K^x of the given order.
FiniteHyperfield krasner_quotient(const FiniteField& field, std::uint64_t subgroup_order);

/// L/K^x for L = F_{q^n} and K = F_q, with F_q embedded through a root of its
/// modulus in L.
FiniteHyperfield extension_quotient(std::uint64_t q, int n, std::uint64_t field_bound = kDefaultFieldBound);

/// H_G: G with 0 adjoined, x + x = {x, 0}, x + 0 = {x}, and for distinct
/// nonzero x, y the sum is H \ {0, x, y}, which is the addition of L/K^x
/// for a quadratic extension L/K. When |G| = 2 that complement is empty and
/// H \ {0} is used instead. Element i+1 is group element i.
FiniteHyperfield from_group(const FiniteAbelianGroup& group);

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom { Commutativity, Associativity, UniqueInverse, Reversibility, NeutralElement, Distributivity };

inline constexpr std::array<Axiom, 6> kAllAxioms = {Axiom::Commutativity, Axiom::Associativity, Axiom::UniqueInverse,
                                                    Axiom::Reversibility, Axiom::NeutralElement, Axiom::Distributivity};

/// "commutativity", "associativity", "unique inverse", "reversibility",
/// "neutral element", "distributivity".
std::string_view axiom_name(Axiom axiom);

struct AxiomVerdict {
    Axiom axiom;
    bool pass = true;
    /// First failing tuple in lexicographic order; empty when passing.
    /// (x, y) for commutativity, (x, y, z) for associativity, reversibility
    /// (z in x + y) and distributivity (z * (x + y)), (x) otherwise.
    std::vector<int> counterexample;
};

struct AxiomReport {
    std::array<AxiomVerdict, 6> verdicts;

    bool all_pass() const;
    const AxiomVerdict& operator[](Axiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
};

/// Exhaustive check of the six hyperfield axioms. Associativity and
/// distributivity are compared as set equalities. The unique-inverse check
/// also requires the stored neg table to agree with the unique inverse.
AxiomReport verify_axioms(const FiniteHyperfield& h);

/// x + x = {x, 0} for every nonzero x, and 0 + 0 = {0}.
bool is_cc(const FiniteHyperfield& h);

struct CcSubfieldResult {
    bool quotient_is_cc;      // is_cc(K/G)
    bool closed_under_add;    // {0} u G closed under addition in K
};

/// Both sides of the CC/subfield equivalence for a nontrivial subgroup.
CcSubfieldResult cc_subfield_equivalence(const FiniteField& field, std::uint64_t subgroup_order);

// ---------------------------------------------------------------------------
// Isomorphism and searches

/// A bijection (image of each element) fixing 0 and 1 that respects mul,
/// neg and hyperadd, or nothing. Candidates are tried in lexicographic order
/// of generator images, so the result is reproducible.
std::optional<std::vector<int>> are_isomorphic(const FiniteHyperfield& a, const FiniteHyperfield& b);

struct KrasnerWitness {
    std::uint64_t q;
    std::uint64_t subgroup_order;
};

/// First (q, G) with q <= q_max such that K_q/G is isomorphic to h.
std::optional<KrasnerWitness> is_krasner_within(const FiniteHyperfield& h, std::uint64_t q_max);

inline constexpr int kMaxEnumerationOrder = 5;

/// All hyperfields of the given order up to isomorphism.
std::vector<FiniteHyperfield> enumerate_hyperfields(int order);

} // namespace hyperforge
