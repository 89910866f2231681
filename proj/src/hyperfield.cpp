#include "hyperforge/hyperfield.hpp"

#include <algorithm>
#include <set>

#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

FiniteHyperfield::FiniteHyperfield(int n, int one, std::vector<int> mul_table, std::vector<int> neg_table,
                                   std::vector<ElementSet> hyperadd, std::string label)
    : n_(n), one_(one), mul_(std::move(mul_table)), neg_(std::move(neg_table)), add_(std::move(hyperadd)), label_(std::move(label)) {
    if (n_ < 2) throw MalformedError("carrier must contain 0 and a distinct 1");
    if (n_ > kMaxCarrier) {
        throw BoundError("carrier size " + std::to_string(n_) + " exceeds " + std::to_string(kMaxCarrier));
    }
    const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    if (mul_.size() != nn || add_.size() != nn || neg_.size() != static_cast<std::size_t>(n_)) {
        throw MalformedError("table dimensions do not match carrier size " + std::to_string(n_));
    }
    if (one_ <= 0 || one_ >= n_) throw MalformedError("one must be a nonzero element");
    auto in_range = [&](int x) { return x >= 0 && x < n_; };
    for (int x : mul_) {
        if (!in_range(x)) throw MalformedError("mul entry out of range");
    }
    for (int x : neg_) {
        if (!in_range(x)) throw MalformedError("neg entry out of range");
    }
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            const auto& s = add(a, b);
            if (s.empty()) {
                throw MalformedError("empty sum at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            }
            bool ok = true;
            s.for_each([&](int x) { ok = ok && x < n_; });
            if (!ok) throw MalformedError("sum member out of range");
        }
    }
    // Multiplicative structure: 0 absorbs; nonzero part is an abelian group.
    inv_.assign(static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a) {
        if (mul(0, a) != 0 || mul(a, 0) != 0) throw MalformedError("0 must absorb under multiplication");
        if (a == 0) continue;
        if (mul(one_, a) != a) throw MalformedError("one is not a multiplicative identity");
        int found = 0;
        for (int b = 1; b < n_; ++b) {
            const int ab = mul(a, b);
            if (ab == 0) throw MalformedError("product of nonzero elements is zero");
            if (ab != mul(b, a)) throw MalformedError("multiplication is not commutative");
            if (ab == one_) {
                inv_[static_cast<std::size_t>(a)] = b;
                ++found;
            }
            for (int c = 1; c < n_; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c))) throw MalformedError("multiplication is not associative");
            }
        }
        if (found != 1) throw MalformedError("nonzero element without a unique multiplicative inverse");
    }
}

ElementSet FiniteHyperfield::add(const ElementSet& s, int b) const {
    ElementSet out;
    s.for_each([&](int a) { out |= add(a, b); });
    return out;
}

ElementSet FiniteHyperfield::add(const ElementSet& s, const ElementSet& t) const {
    ElementSet out;
    t.for_each([&](int b) { out |= add(s, b); });
    return out;
}

int FiniteHyperfield::multiplicative_order(int a) const {
    if (a == 0) throw PreconditionError("0 has no multiplicative order");
    int x = a, k = 1;
    while (x != one_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

FiniteHyperfield FiniteHyperfield::with_sum(int a, int b, ElementSet value, std::string label) const {
    auto table = add_;
    table[idx(a, b)] = value;
    return FiniteHyperfield(n_, one_, mul_, neg_, std::move(table), label.empty() ? label_ + "*" : std::move(label));
}

FiniteHyperfield FiniteHyperfield::relabeled(std::string label) const {
    FiniteHyperfield copy(*this);
    copy.label_ = std::move(label);
    return copy;
}

// ---------------------------------------------------------------------------

FiniteHyperfield krasner_quotient(const FiniteField& field, const std::vector<FiniteField::Element>& subgroup) {
    const std::uint32_t q = field.order();
    std::set<FiniteField::Element> g(subgroup.begin(), subgroup.end());
    if (g.empty()) throw PreconditionError("subgroup must be nonempty");
    for (auto x : g) {
        if (x == 0 || x >= q) throw PreconditionError("subgroup element " + std::to_string(x) + " is not in K^x");
    }
    for (auto x : g) {
        if (!g.count(field.inv(x))) throw PreconditionError("subset is not closed under inverses");
        for (auto y : g) {
            if (!g.count(field.mul(x, y))) throw PreconditionError("subset is not closed under products");
        }
    }
    const auto d = static_cast<std::uint32_t>(g.size());
    const std::uint32_t classes = (q - 1) / d;
    const int n = static_cast<int>(classes) + 1;
    if (n > kMaxCarrier) {
        throw BoundError("quotient has " + std::to_string(n) + " elements, above " + std::to_string(kMaxCarrier));
    }
    // In the cyclic group K^x the order-d subgroup is <g^classes>, so the
    // coset of x is determined by log(x) mod classes.
    auto cls = [&](FiniteField::Element x) -> int {
        return x == 0 ? 0 : static_cast<int>(field.log(x) % classes) + 1;
    };
    std::vector<int> mul(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> neg(static_cast<std::size_t>(n), 0);
    for (std::uint32_t a = 0; a < classes; ++a) {
        for (std::uint32_t b = 0; b < classes; ++b) {
            mul[(a + 1) * static_cast<std::size_t>(n) + b + 1] = static_cast<int>((a + b) % classes) + 1;
        }
        neg[a + 1] = cls(field.neg(field.exp(a)));
    }
    std::vector<ElementSet> add(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (FiniteField::Element x = 0; x < q; ++x) {
        const int cx = cls(x);
        for (FiniteField::Element y = 0; y < q; ++y) {
            add[static_cast<std::size_t>(cx) * static_cast<std::size_t>(n) + static_cast<std::size_t>(cls(y))].insert(
                cls(field.add(x, y)));
        }
    }
    std::string label = "F" + std::to_string(q) + "/G" + std::to_string(d);
    return FiniteHyperfield(n, 1, std::move(mul), std::move(neg), std::move(add), std::move(label));
}

FiniteHyperfield krasner_quotient(const FiniteField& field, std::uint64_t subgroup_order) {
    return krasner_quotient(field, subgroup_elements(field, subgroup_order));
}

FiniteHyperfield extension_quotient(std::uint64_t q, int n, std::uint64_t field_bound) {
    if (n < 2) throw PreconditionError("extension degree must be at least 2");
    auto pp = as_prime_power(q);
    if (!pp) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    const std::uint64_t big_order = ipow(q, n);
    if (big_order > field_bound) {
        throw BoundError("q^n = " + std::to_string(big_order) + " exceeds field bound " + std::to_string(field_bound));
    }
    const FiniteField big = make_finite_field(big_order, field_bound);
    const FiniteField small = make_finite_field(q, field_bound);

    // Prime-field constants are encoded identically in both fields.
    auto eval_in_big = [&](const FpPolynomial& f, FiniteField::Element x) {
        FiniteField::Element acc = 0;
        for (int i = f.degree(); i >= 0; --i) acc = big.add(big.mul(acc, x), f.coeff(i));
        return acc;
    };
    std::optional<FiniteField::Element> root;
    for (FiniteField::Element x = 0; x < big.order() && !root; ++x) {
        if (eval_in_big(small.modulus(), x) == 0) root = x;
    }
    if (!root) throw Error("no root of the subfield modulus found"); // impossible when the degree divides
    std::vector<FiniteField::Element> image;
    for (FiniteField::Element a = 1; a < small.order(); ++a) image.push_back(eval_in_big(small.to_poly(a), *root));
    auto h = krasner_quotient(big, image);
    return h.relabeled("F" + std::to_string(big_order) + "/F" + std::to_string(q) + "^x");
}

FiniteHyperfield from_group(const FiniteAbelianGroup& group) {
    const int m = static_cast<int>(group.order());
    const int n = m + 1;
    if (n > kMaxCarrier) throw BoundError("group too large for a hyperfield table");
    const auto sn = static_cast<std::size_t>(n);
    std::vector<int> mul(sn * sn, 0);
    std::vector<int> neg(sn, 0);
    std::vector<ElementSet> add(sn * sn);
    ElementSet nonzero;
    for (int x = 1; x < n; ++x) nonzero.insert(x);
    for (int x = 0; x < n; ++x) {
        if (x > 0) neg[static_cast<std::size_t>(x)] = x;
        for (int y = 0; y < n; ++y) {
            const auto k = static_cast<std::size_t>(x) * sn + static_cast<std::size_t>(y);
            if (x > 0 && y > 0) mul[k] = group.op(x - 1, y - 1) + 1;
            if (x == 0) {
                add[k] = ElementSet{y};
            } else if (y == 0) {
                add[k] = ElementSet{x};
            } else if (x == y) {
                add[k] = ElementSet{x, 0};
            } else if (m > 2) {
                add[k] = nonzero;
                add[k].erase(x);
                add[k].erase(y);
            } else {
                add[k] = nonzero; // the complement of {x, y} would be empty
            }
        }
    }
    return FiniteHyperfield(n, 1, std::move(mul), std::move(neg), std::move(add), "H[" + group.name() + "]");
}

} // namespace hyperforge
