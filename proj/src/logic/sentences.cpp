#include "hyperforge/logic/sentences.hpp"

namespace hyperforge::logic {

std::vector<NamedSentence> hyperfield_axiom_sentences() {
    struct Source {
        const char* name;
        const char* text;
        std::optional<Axiom> axiom;
    };
    static const Source sources[] = {
        {"commutativity", "forall x. forall y. forall z. (add(x, y, z) -> add(y, x, z))", Axiom::Commutativity},
        {"associativity",
         "forall x. forall y. forall z. forall w. "
         "((exists u. (add(x, y, u) /\\ add(u, z, w))) <-> exists v. (add(y, z, v) /\\ add(x, v, w)))",
         Axiom::Associativity},
        {"unique inverse", "forall x. (add(x, neg(x), 0) /\\ forall y. (add(x, y, 0) -> y = neg(x)))",
         Axiom::UniqueInverse},
        {"reversibility", "forall x. forall y. forall z. (add(x, y, z) -> add(z, neg(x), y))", Axiom::Reversibility},
        {"neutral element", "forall x. forall z. (add(x, 0, z) <-> z = x)", Axiom::NeutralElement},
        {"distributivity",
         "forall x. forall y. forall z. forall w. "
         "((exists u. (add(x, y, u) /\\ w = mul(z, u))) <-> add(mul(z, x), mul(z, y), w))",
         Axiom::Distributivity},
        {"multiplicative associativity", "forall x. forall y. forall z. mul(mul(x, y), z) = mul(x, mul(y, z))",
         std::nullopt},
        {"multiplicative commutativity", "forall x. forall y. mul(x, y) = mul(y, x)", std::nullopt},
        {"multiplicative identity", "forall x. mul(x, 1) = x", std::nullopt},
        {"multiplicative inverse", "forall x. (~(x = 0) -> mul(x, inv(x)) = 1)", std::nullopt},
        {"zero absorbs", "forall x. mul(x, 0) = 0", std::nullopt},
        {"zero is not one", "~(0 = 1)", std::nullopt},
    };
    std::vector<NamedSentence> out;
    for (const auto& s : sources) out.push_back({s.name, parse(s.text), s.axiom});
    return out;
}

Formula cc_sentence() { return parse("forall x. forall z. (add(x, x, z) <-> (z = x \\/ z = 0))"); }

} // namespace hyperforge::logic
