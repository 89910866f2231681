#pragma once

#include <optional>

#include "hyperforge/abelian_group.hpp"
#include "hyperforge/logic/formula.hpp"
#include "hyperforge/logic/structure.hpp"

namespace hyperforge::logic {

inline constexpr int kMaxEfCarrier = 64;
inline constexpr int kMaxEfDepth = 4;
inline constexpr std::uint64_t kMaxTransferGroupOrder = 32;

/// True iff Duplicator wins the d-round Ehrenfeucht-Fraisse game.
///
/// A position is winning for Duplicator when the chosen elements, together
/// with the constants, generate isomorphic substructures under the induced
/// map (functions closed off, add compared on the closure). Positions are
/// memoized by that closure map. Both structures must interpret the same
/// symbols; carriers are limited to kMaxEfCarrier and d to kMaxEfDepth.
bool ef_equivalent(const FiniteStructure& a, const FiniteStructure& b, int depth);

/// A sentence of quantifier depth at most `depth` that holds in a and fails
/// in b, read off a winning Spoiler strategy at the smallest depth where one
/// exists. Absent when a and b are depth-equivalent.
std::optional<Formula> distinguishing_sentence(const FiniteStructure& a, const FiniteStructure& b, int depth);

struct TransferReport {
    int depth = 0;
    bool groups_equivalent = false;      // G and H as groups over {1, mul, inv}
    bool hyperfields_equivalent = false; // H_G and H_H as hyperfields
    bool implication_holds() const { return !groups_equivalent || hyperfields_equivalent; }
};

/// Plays the depth-d game on G, H as groups and on from_group(G),
/// from_group(H) as hyperfields. Orders up to kMaxTransferGroupOrder.
TransferReport group_to_hyperfield_transfer_check(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h, int depth);

} // namespace hyperforge::logic
