#include "hyperforge/errors.hpp"
#include "hyperforge/hyperfield.hpp"

namespace hyperforge {

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Associativity: return "associativity";
    case Axiom::UniqueInverse: return "unique inverse";
    case Axiom::Reversibility: return "reversibility";
    case Axiom::NeutralElement: return "neutral element";
    case Axiom::Distributivity: return "distributivity";
    }
    return "?";
}

bool AxiomReport::all_pass() const {
    for (const auto& v : verdicts) {
        if (!v.pass) return false;
    }
    return true;
}

namespace {

void fail(AxiomVerdict& v, std::vector<int> witness) {
    if (!v.pass) return;
    v.pass = false;
    v.counterexample = std::move(witness);
}

} // namespace

AxiomReport verify_axioms(const FiniteHyperfield& h) {
    const int n = h.size();
    AxiomReport r;
    for (std::size_t i = 0; i < kAllAxioms.size(); ++i) r.verdicts[i].axiom = kAllAxioms[i];
    auto& comm = r.verdicts[static_cast<std::size_t>(Axiom::Commutativity)];
    auto& assoc = r.verdicts[static_cast<std::size_t>(Axiom::Associativity)];
    auto& inverse = r.verdicts[static_cast<std::size_t>(Axiom::UniqueInverse)];
    auto& rev = r.verdicts[static_cast<std::size_t>(Axiom::Reversibility)];
    auto& neutral = r.verdicts[static_cast<std::size_t>(Axiom::NeutralElement)];
    auto& dist = r.verdicts[static_cast<std::size_t>(Axiom::Distributivity)];

    for (int x = 0; x < n && comm.pass; ++x) {
        for (int y = 0; y < n; ++y) {
            if (h.add(x, y) != h.add(y, x)) {
                fail(comm, {x, y});
                break;
            }
        }
    }

    for (int x = 0; x < n && assoc.pass; ++x) {
        for (int y = 0; y < n && assoc.pass; ++y) {
            const ElementSet& xy = h.add(x, y);
            for (int z = 0; z < n; ++z) {
                ElementSet left = h.add(xy, z);
                ElementSet right;
                h.add(y, z).for_each([&](int v) { right |= h.add(x, v); });
                if (left != right) {
                    fail(assoc, {x, y, z});
                    break;
                }
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        int count = 0, witness = -1;
        for (int y = 0; y < n; ++y) {
            if (h.add(x, y).contains(0)) {
                ++count;
                if (witness < 0) witness = y;
            }
        }
        if (count != 1 || witness != h.neg(x)) {
            fail(inverse, {x});
            break;
        }
    }

    for (int x = 0; x < n && rev.pass; ++x) {
        const int minus_x = h.neg(x);
        for (int y = 0; y < n && rev.pass; ++y) {
            h.add(x, y).for_each([&](int z) {
                if (rev.pass && !h.add(z, minus_x).contains(y)) fail(rev, {x, y, z});
            });
        }
    }

    for (int x = 0; x < n; ++x) {
        if (h.add(x, 0) != ElementSet{x}) {
            fail(neutral, {x});
            break;
        }
    }

    for (int x = 0; x < n && dist.pass; ++x) {
        for (int y = 0; y < n && dist.pass; ++y) {
            const ElementSet& xy = h.add(x, y);
            for (int z = 0; z < n; ++z) {
                ElementSet scaled;
                xy.for_each([&](int u) { scaled.insert(h.mul(z, u)); });
                if (scaled != h.add(h.mul(z, x), h.mul(z, y))) {
                    fail(dist, {x, y, z});
                    break;
                }
            }
        }
    }
    return r;
}

bool is_cc(const FiniteHyperfield& h) {
    if (h.add(0, 0) != ElementSet{0}) return false;
    for (int x = 1; x < h.size(); ++x) {
        if (h.add(x, x) != ElementSet{x, 0}) return false;
    }
    return true;
}

CcSubfieldResult cc_subfield_equivalence(const FiniteField& field, std::uint64_t subgroup_order) {
    if (subgroup_order <= 1) throw PreconditionError("the CC/subfield equivalence needs a nontrivial subgroup");
    const auto elems = subgroup_elements(field, subgroup_order);
    std::vector<bool> member(field.order(), false);
    member[0] = true;
    for (auto x : elems) member[x] = true;
    bool closed = true;
    for (FiniteField::Element a = 0; a < field.order() && closed; ++a) {
        if (!member[a]) continue;
        for (FiniteField::Element b = 0; b < field.order(); ++b) {
            if (member[b] && !member[field.add(a, b)]) {
                closed = false;
                break;
            }
        }
    }
    return {is_cc(krasner_quotient(field, elems)), closed};
}

} // namespace hyperforge
