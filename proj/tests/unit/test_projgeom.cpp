#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"
#include "hyperforge/projgeom.hpp"

using namespace hyperforge;

namespace {

std::set<std::vector<int>> line_set(const ProjectiveGeometry& g) { return {g.lines.begin(), g.lines.end()}; }

// Some relabeling of the points carries one line set onto the other.
bool same_up_to_relabeling(const ProjectiveGeometry& a, const ProjectiveGeometry& b) {
    if (a.points != b.points || a.lines.size() != b.lines.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.points));
    std::iota(perm.begin(), perm.end(), 0);
    const auto target = line_set(b);
    do {
        if (line_set(permuted(a, perm)) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ProjectiveGeometry standard_fano() {
    return {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}, "fano"};
}

} // namespace

TEST_CASE("Fano plane from F8 modulo F2 units") {
    auto g = geometry_of(extension_quotient(2, 3));
    CHECK(g.points == 7);
    CHECK(g.lines.size() == 7);
    for (const auto& l : g.lines) CHECK(l.size() == 3);
    CHECK(same_up_to_relabeling(g, standard_fano()));
    CHECK(dimension(g) == 2);
    auto r = check_incidence_axioms(g);
    CHECK(r.pair_uniqueness == Verdict::Pass);
    CHECK(r.veblen_young == Verdict::Pass);
    CHECK(r.thickness == Verdict::Pass);
    CHECK(is_desarguesian(g));
}

TEST_CASE("single-line geometries") {
    for (auto h : {extension_quotient(3, 2), from_group(FiniteAbelianGroup::cyclic(5))}) {
        auto g = geometry_of(h);
        REQUIRE(g.lines.size() == 1);
        CHECK(static_cast<int>(g.lines[0].size()) == g.points);
        CHECK(dimension(g) == 1);
        auto r = check_incidence_axioms(g);
        CHECK(r.pair_uniqueness == Verdict::Pass);
        CHECK(r.veblen_young == Verdict::Vacuous);
        CHECK(r.thickness == Verdict::DegenerateAdmitted);
        CHECK_THROWS_AS(is_desarguesian(g), PreconditionError);
    }
    CHECK(geometry_of(extension_quotient(3, 2)).points == 4);
    CHECK(geometry_of(from_group(FiniteAbelianGroup::cyclic(5))).points == 5);
}

TEST_CASE("PG(2,3) and PG(3,2) are Desarguesian") {
    auto plane = geometry_of(extension_quotient(3, 3));
    CHECK(plane.points == 13);
    CHECK(dimension(plane) == 2);
    CHECK(is_desarguesian(plane));
    auto space = geometry_of(extension_quotient(2, 4));
    CHECK(dimension(space) == 3);
    CHECK(is_desarguesian(space));
    CHECK_THROWS_AS(is_desarguesian(geometry_of(extension_quotient(2, 6))), BoundError);
}

TEST_CASE("a non-Desarguesian configuration is caught") {
    // The Fano plane with one line broken up: no longer a projective plane,
    // but still of dimension 2, so Desargues is checked and fails.
    auto g = standard_fano();
    g.lines.erase(g.lines.begin() + 6);
    g.lines.push_back({2, 4});
    g.lines.push_back({2, 5});
    g.lines.push_back({4, 5});
    CHECK(dimension(g) == 2);
    CHECK_FALSE(is_desarguesian(g));
    auto r = check_incidence_axioms(g);
    CHECK(r.thickness == Verdict::Fail);
}

TEST_CASE("duplicated line fails pair uniqueness") {
    auto g = geometry_of(extension_quotient(2, 3));
    g.lines.push_back(g.lines[2]);
    auto r = check_incidence_axioms(g);
    CHECK(r.pair_uniqueness == Verdict::Fail);
    REQUIRE(r.offending_pair);
    const auto [a, b] = *r.offending_pair;
    const auto& dup = g.lines[2];
    CHECK(std::find(dup.begin(), dup.end(), a) != dup.end());
    CHECK(std::find(dup.begin(), dup.end(), b) != dup.end());
}

TEST_CASE("Veblen-Young failure") {
    // Two lines meeting at 0 plus joins that miss each other.
    ProjectiveGeometry g{7, {{0, 1, 2}, {0, 3, 4}, {1, 3}, {2, 4}, {1, 4, 5}, {2, 3, 6}, {0, 5}, {0, 6}, {5, 6}}, "broken"};
    CHECK(check_incidence_axioms(g).veblen_young == Verdict::Fail);
}

TEST_CASE("geometry rejects unsuitable hyperfields") {
    CHECK_THROWS_AS(geometry_of(krasner_quotient(make_finite_field(5), 1)), PreconditionError);
    CHECK_THROWS_AS(geometry_of(from_group(FiniteAbelianGroup())), PreconditionError);
}

TEST_CASE("dimension law for extension quotients") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
        for (int n = 2; ipow(q, n) <= 64; ++n) {
            auto g = geometry_of(extension_quotient(q, n));
            INFO("q=" << q << " n=" << n);
            CHECK(static_cast<std::uint64_t>(g.points) == (ipow(q, n) - 1) / (q - 1));
            CHECK(dimension(g) == n - 1);
            CHECK(check_incidence_axioms(g).ok());
            if (n >= 3) {
                for (const auto& l : g.lines) CHECK(l.size() == q + 1);
            }
        }
    }
}

TEST_CASE("pair uniqueness on every CC quotient") {
    for (auto q : prime_powers_up_to(64)) {
        for (auto d : divisors(q - 1)) {
            auto h = krasner_quotient(make_finite_field(q), d);
            if (!is_cc(h) || h.size() < 3) continue;
            CHECK(check_incidence_axioms(geometry_of(h)).pair_uniqueness == Verdict::Pass);
        }
    }
}

TEST_CASE("dimension is invariant under relabeling") {
    std::mt19937 rng(17);
    for (auto [q, n] : {std::pair<std::uint64_t, int>{2, 3}, {2, 4}, {3, 3}, {2, 5}, {4, 3}}) {
        auto g = geometry_of(extension_quotient(q, n));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(g.points));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(dimension(permuted(g, perm)) == n - 1);
        }
    }
}
