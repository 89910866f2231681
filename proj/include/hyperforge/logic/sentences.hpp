#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperforge/hyperfield.hpp"
#include "hyperforge/logic/formula.hpp"

namespace hyperforge::logic {

struct NamedSentence {
    std::string name;
    Formula sentence;
    /// The table-level axiom this sentence expresses, if any.
    std::optional<Axiom> axiom;
};

/// The six hyperfield axioms, named as axiom_name() names them, followed by
/// the multiplicative-group sentences. Each axiom sentence is the exact
/// first-order transcription of the corresponding verify_axioms check, so
/// the two agree on every finite structure.
std::vector<NamedSentence> hyperfield_axiom_sentences();

/// forall x. forall z. (add(x,x,z) <-> (z = x \/ z = 0))
Formula cc_sentence();

} // namespace hyperforge::logic
