#include <algorithm>
#include <deque>
#include <functional>

#include "hyperforge/errors.hpp"
#include "hyperforge/hyperfield.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

namespace {

std::vector<int> order_profile(const FiniteHyperfield& h) {
    std::vector<int> orders;
    for (int x = 1; x < h.size(); ++x) orders.push_back(h.multiplicative_order(x));
    std::sort(orders.begin(), orders.end());
    return orders;
}

// Elements generated by gens under multiplication (nonzero part only).
std::vector<bool> span(const FiniteHyperfield& h, const std::vector<int>& gens) {
    std::vector<bool> in(static_cast<std::size_t>(h.size()), false);
    std::deque<int> queue{h.one()};
    in[static_cast<std::size_t>(h.one())] = true;
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (int g : gens) {
            int f = h.mul(e, g);
            if (!in[static_cast<std::size_t>(f)]) {
                in[static_cast<std::size_t>(f)] = true;
                queue.push_back(f);
            }
        }
    }
    return in;
}

// Greedy generating set of the multiplicative group in index order.
std::vector<int> greedy_generators(const FiniteHyperfield& h) {
    std::vector<int> gens;
    auto in = span(h, gens);
    for (int x = 1; x < h.size(); ++x) {
        if (!in[static_cast<std::size_t>(x)]) {
            gens.push_back(x);
            in = span(h, gens);
        }
    }
    return gens;
}

// Extends generator images to a multiplicative map, or fails on conflict.
std::optional<std::vector<int>> extend_hom(const FiniteHyperfield& a, const FiniteHyperfield& b,
                                           const std::vector<int>& gens, const std::vector<int>& images) {
    std::vector<int> f(static_cast<std::size_t>(a.size()), -1);
    f[0] = 0;
    f[static_cast<std::size_t>(a.one())] = b.one();
    std::deque<int> queue{a.one()};
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int target = a.mul(e, gens[i]);
            int value = b.mul(f[static_cast<std::size_t>(e)], images[i]);
            int& slot = f[static_cast<std::size_t>(target)];
            if (slot < 0) {
                slot = value;
                queue.push_back(target);
            } else if (slot != value) {
                return std::nullopt;
            }
        }
    }
    return f;
}

bool respects_addition(const FiniteHyperfield& a, const FiniteHyperfield& b, const std::vector<int>& f) {
    std::vector<bool> seen(static_cast<std::size_t>(b.size()), false);
    for (int v : f) {
        if (v < 0 || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int x = 0; x < a.size(); ++x) {
        if (f[static_cast<std::size_t>(a.neg(x))] != b.neg(f[static_cast<std::size_t>(x)])) return false;
        for (int y = x; y < a.size(); ++y) {
            ElementSet mapped;
            a.add(x, y).for_each([&](int z) { mapped.insert(f[static_cast<std::size_t>(z)]); });
            if (mapped != b.add(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) return false;
            if (x != y) {
                ElementSet mapped_rev;
                a.add(y, x).for_each([&](int z) { mapped_rev.insert(f[static_cast<std::size_t>(z)]); });
                if (mapped_rev != b.add(f[static_cast<std::size_t>(y)], f[static_cast<std::size_t>(x)])) return false;
            }
        }
    }
    return true;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteHyperfield& a, const FiniteHyperfield& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (order_profile(a) != order_profile(b)) return std::nullopt;
    const auto gens = greedy_generators(a);
    std::vector<int> gen_orders;
    for (int g : gens) gen_orders.push_back(a.multiplicative_order(g));
    std::vector<int> images(gens.size(), 0);
    std::optional<std::vector<int>> found;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (found) return;
        if (i == gens.size()) {
            auto f = extend_hom(a, b, gens, images);
            if (f && respects_addition(a, b, *f)) found = std::move(f);
            return;
        }
        for (int y = 1; y < b.size() && !found; ++y) {
            if (b.multiplicative_order(y) != gen_orders[i]) continue;
            images[i] = y;
            assign(i + 1);
        }
    };
    assign(0);
    return found;
}

std::optional<KrasnerWitness> is_krasner_within(const FiniteHyperfield& h, std::uint64_t q_max) {
    const auto classes = static_cast<std::uint64_t>(h.size() - 1);
    for (auto q : prime_powers_up_to(q_max)) {
        if ((q - 1) % classes != 0) continue;
        const std::uint64_t d = (q - 1) / classes;
        auto candidate = krasner_quotient(make_finite_field(q, std::max<std::uint64_t>(q, kDefaultFieldBound)), d);
        if (are_isomorphic(candidate, h)) return KrasnerWitness{q, d};
    }
    return std::nullopt;
}

std::vector<FiniteHyperfield> enumerate_hyperfields(int order) {
    if (order > kMaxEnumerationOrder) {
        throw BoundError("enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
    }
    std::vector<FiniteHyperfield> found;
    if (order < 2) return found;
    const int n = order;
    const auto sn = static_cast<std::size_t>(n);
    const int subsets = (1 << n) - 1;
    auto subset_of = [](int mask) {
        ElementSet s;
        for (int b = 0; (mask >> b) != 0; ++b) {
            if ((mask >> b) & 1) s.insert(b);
        }
        return s;
    };
    for (const auto& group : all_abelian_groups(static_cast<std::uint64_t>(n - 1))) {
        const FiniteHyperfield base = from_group(group); // only its multiplication is reused
        // Distributivity forces x + y = x * (1 + x^-1 y); so it suffices to
        // choose S_u = 1 + u for each nonzero u, subject to commutativity
        // S_u = u * S_{u^-1}.
        std::vector<int> free_units;
        for (int u = 1; u < n; ++u) {
            if (base.inv(u) >= u) free_units.push_back(u);
        }
        std::vector<ElementSet> s(sn);
        auto scale = [&](int u, const ElementSet& set) {
            ElementSet out;
            set.for_each([&](int z) { out.insert(base.mul(u, z)); });
            return out;
        };
        std::function<void(std::size_t)> choose = [&](std::size_t i) {
            if (i == free_units.size()) {
                int zero_hits = 0, eps = 0;
                for (int u = 1; u < n; ++u) {
                    if (s[static_cast<std::size_t>(u)].contains(0)) {
                        ++zero_hits;
                        eps = u;
                    }
                }
                if (zero_hits != 1) return;
                std::vector<int> mul(sn * sn), neg(sn, 0);
                std::vector<ElementSet> add(sn * sn);
                for (int x = 0; x < n; ++x) {
                    if (x > 0) neg[static_cast<std::size_t>(x)] = base.mul(x, eps);
                    for (int y = 0; y < n; ++y) {
                        const auto k = static_cast<std::size_t>(x) * sn + static_cast<std::size_t>(y);
                        mul[k] = base.mul(x, y);
                        if (x == 0) {
                            add[k] = ElementSet{y};
                        } else if (y == 0) {
                            add[k] = ElementSet{x};
                        } else {
                            add[k] = scale(x, s[static_cast<std::size_t>(base.mul(base.inv(x), y))]);
                        }
                    }
                }
                FiniteHyperfield cand(n, 1, std::move(mul), std::move(neg), std::move(add));
                if (!verify_axioms(cand).all_pass()) return;
                for (const auto& h : found) {
                    if (are_isomorphic(h, cand)) return;
                }
                found.push_back(cand.relabeled("hyperfield" + std::to_string(n) + "#" + std::to_string(found.size())));
                return;
            }
            const int u = free_units[i];
            const int ui = base.inv(u);
            for (int mask = 1; mask <= subsets; ++mask) {
                ElementSet su = subset_of(mask);
                ElementSet sui = scale(ui, su);
                if (ui == u && sui != su) continue;
                s[static_cast<std::size_t>(u)] = su;
                s[static_cast<std::size_t>(ui)] = sui;
                choose(i + 1);
            }
        };
        choose(0);
    }
    return found;
}

} // namespace hyperforge
