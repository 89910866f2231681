#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "../support/families.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"
#include "hyperforge/rank_witness.hpp"

using namespace hyperforge;

namespace {

GaussianInteger gi(long long a, long long b) { return {a, b}; }

FpPolynomial poly(std::uint32_t p, std::string_view s) { return FpPolynomial::parse(p, s); }

// Primes = 1 mod 4 from a sieve, with a > b > 0 by a double loop.
std::vector<std::pair<std::uint64_t, std::pair<long long, long long>>> sieve_split_primes(std::size_t count) {
    std::vector<std::pair<std::uint64_t, std::pair<long long, long long>>> out;
    std::vector<bool> composite(2000, false);
    for (std::uint64_t n = 2; n < composite.size() && out.size() < count; ++n) {
        if (composite[n]) continue;
        for (std::uint64_t m = n * n; m < composite.size(); m += n) composite[m] = true;
        if (n % 4 != 1) continue;
        for (long long a = 1; a * a < static_cast<long long>(n); ++a) {
            for (long long b = 1; b < a; ++b) {
                if (static_cast<std::uint64_t>(a * a + b * b) == n) out.push_back({n, {a, b}});
            }
        }
    }
    return out;
}

FpPolynomial random_poly(std::uint32_t p, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
    std::uniform_int_distribution<int> d(0, max_degree);
    std::vector<FpPolynomial::Coeff> coeffs(static_cast<std::size_t>(d(rng)) + 1);
    for (auto& x : coeffs) x = c(rng);
    return {p, coeffs};
}

} // namespace

TEST_CASE("Gaussian split primes") {
    auto recs = gaussian_split_primes(20);
    auto oracle = sieve_split_primes(20);
    REQUIRE(recs.size() == oracle.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(std::get<std::uint64_t>(recs[i].base) == oracle[i].first);
        const auto& r = std::get<GaussianInteger>(recs[i].factor);
        CHECK(r == gi(oracle[i].second.first, oracle[i].second.second));
        CHECK(std::get<GaussianInteger>(recs[i].conjugate_factor) == r.conj());
        CHECK(r.norm() == BigInt(oracle[i].first));
        CHECK_FALSE(associated(r, r.conj()));
    }
    CHECK(to_string(recs[0].factor) == "2+i");
    CHECK(to_string(recs[1].factor) == "3+2i");
    CHECK(to_string(recs[2].factor) == "4+i");
    for (const auto& r : recs) CHECK(std::get<std::uint64_t>(r.base) != 7);
}

TEST_CASE("F3 square split stream") {
    auto recs = fp_square_split_polys(3, 6);
    REQUIRE(recs.size() == 6);
    CHECK(recs[0].base_string() == "T+2");
    CHECK(std::get<FpPolynomial>(recs[0].factor) == poly(3, "X+2"));
    CHECK(std::get<FpPolynomial>(recs[0].conjugate_factor) == poly(3, "X+1"));
    bool has_t2_plus_1 = false;
    for (const auto& r : recs) {
        const auto& g = std::get<FpPolynomial>(r.base);
        CHECK(g != FpPolynomial::parse(3, "T+1", 'T'));
        const auto& q = std::get<FpPolynomial>(r.factor);
        const auto& sq = std::get<FpPolynomial>(r.conjugate_factor);
        // g(X^2) = Q * conj(Q), with conj(Q) = Q(-X) up to sign.
        CHECK(g.compose(poly(3, "X^2")) == q * sq);
        CHECK(std::get<FpPolynomial>(conjugate(CaseTag::fp_square(3), q)).monic() == sq);
        if (g == FpPolynomial::parse(3, "T^2+1", 'T')) {
            has_t2_plus_1 = true;
            CHECK(q * sq == poly(3, "X^4+1"));
            CHECK(std::set<FpPolynomial>{q, sq} == std::set<FpPolynomial>{poly(3, "X^2+X+2"), poly(3, "X^2+2*X+2")});
        }
    }
    CHECK(has_t2_plus_1);
    CHECK_THROWS_AS(fp_square_split_polys(2, 1), PreconditionError);
}

TEST_CASE("F2 Artin-Schreier split stream") {
    auto recs = f2_artin_schreier_split_polys(5);
    REQUIRE(recs.size() == 5);
    CHECK(recs[0].base_string() == "T");
    CHECK(std::set<FpPolynomial>{std::get<FpPolynomial>(recs[0].factor), std::get<FpPolynomial>(recs[0].conjugate_factor)} ==
          std::set<FpPolynomial>{poly(2, "X"), poly(2, "X+1")});
    const auto t = poly(2, "X^2+X");
    for (const auto& r : recs) {
        const auto& g = std::get<FpPolynomial>(r.base);
        CHECK(g != FpPolynomial::parse(2, "T+1", 'T'));
        CHECK(is_irreducible(g));
        const auto& q = std::get<FpPolynomial>(r.factor);
        CHECK(g.compose(t) == q * std::get<FpPolynomial>(r.conjugate_factor));
        CHECK(q.compose(poly(2, "X+1")) == std::get<FpPolynomial>(r.conjugate_factor));
    }
    // The only irreducible quadratic, T^2+T+1, stays inert: X^4+X^3+X^2+X+1
    // is irreducible over F_2. Next entries frozen from the factorization run.
    CHECK(is_irreducible(poly(2, "X^4+X^3+X^2+X+1")));
    CHECK(recs[1].base_string() == "T^3+T+1");
    CHECK(to_string(recs[1].factor) == "X^3+X^2+1");
    CHECK(recs[2].base_string() == "T^4+T+1");
}

TEST_CASE("fifty records in each stream") {
    CHECK(gaussian_split_primes(50).size() == 50);
    CHECK(fp_square_split_polys(3, 50).size() == 50);
    CHECK(f2_artin_schreier_split_polys(50).size() == 50);
}

TEST_CASE("valuations") {
    const RingElement five = gi(5, 0);
    CHECK(valuation(five, gi(2, 1)) == 1);
    CHECK(valuation(five, gi(2, -1)) == 1);
    CHECK(valuation(gi(2, 1), gi(2, -1)) == 0);
    CHECK(valuation(poly(3, "X^2+X+1"), poly(3, "X+2")) == 2); // (X-1)^2
    CHECK_THROWS_AS(valuation(gi(0, 0), gi(2, 1)), PreconditionError);
    CHECK_THROWS_AS(valuation(five, gi(0, 1)), PreconditionError);
}

TEST_CASE("families and certificates") {
    auto g2 = build_witness_family(CaseTag::gauss(), 2);
    CHECK(to_string(g2.elements[0]) == "2+i");
    CHECK(to_string(g2.elements[1]) == "3+2i");
    auto cert = independence_certificate(g2);
    CHECK(cert.matrix == IntMatrix{{1, 0}, {0, 1}});
    CHECK(cert.rank == 2);
    CHECK(cert.independent);
    CHECK_FALSE(brute_force_relation(g2, 3));

    auto f3 = build_witness_family(CaseTag::fp_square(3), 2);
    CHECK(std::get<FpPolynomial>(f3.elements[0]) == poly(3, "X+2"));

    // (2+i, (2+i)^2 * 7) against the first two split primes.
    auto dep = make_family(CaseTag::gauss(), {gi(2, 1), gi(2, 1) * gi(2, 1) * gi(7, 0)}, gaussian_split_primes(2));
    auto dc = independence_certificate(dep);
    CHECK(dc.matrix == IntMatrix{{1, 0}, {2, 0}});
    CHECK(dc.rank == 1);
    CHECK_FALSE(dc.independent);

    auto single = make_family(CaseTag::gauss(), {gi(5, 0)});
    auto sc = independence_certificate(single);
    CHECK(sc.matrix == IntMatrix{{0}});
    CHECK(sc.rank == 0);
    CHECK_FALSE(sc.independent);
    CHECK(brute_force_relation(single, 1) == std::vector<int>{1});

    auto pair = make_family(CaseTag::gauss(), {gi(2, 1), gi(2, -1)});
    CHECK_FALSE(independence_certificate(pair).independent);
    CHECK(brute_force_relation(pair, 1) == std::vector<int>{1, 1});

    CHECK_THROWS_AS(build_witness_family(CaseTag::gauss(), 0), PreconditionError);
    CHECK_THROWS_AS(make_family(CaseTag::gauss(), {poly(3, "X")}), PreconditionError);
    CHECK_THROWS_AS(make_family(CaseTag::gauss(), {gi(0, 0)}), PreconditionError);
}

TEST_CASE("built families have identity certificates") {
    for (auto tag : {CaseTag::gauss(), CaseTag::fp_square(3), CaseTag::fp_square(5), CaseTag::f2_artin_schreier()}) {
        for (std::size_t k : {1u, 4u, 10u}) {
            auto cert = independence_certificate(build_witness_family(tag, k));
            IntMatrix id(k, std::vector<BigInt>(k, 0));
            for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
            CHECK(cert.matrix == id);
            CHECK(cert.rank == static_cast<int>(k));
        }
    }
}

TEST_CASE("oracle budget") {
    auto fam = build_witness_family(CaseTag::gauss(), 10);
    CHECK_THROWS_AS(brute_force_relation(fam, 2, 1000), BoundError);
    CHECK_THROWS_AS(brute_force_relation(fam, 3), BoundError);
    // 5^k - 1 exactly at the budget is allowed.
    auto small = build_witness_family(CaseTag::gauss(), 3);
    CHECK_FALSE(brute_force_relation(small, 2, 124));
    CHECK_THROWS_AS(brute_force_relation(small, 2, 123), BoundError);
}

TEST_CASE("budget from the environment") {
    ::setenv("HYPERFORGE_BUDGET", "1234", 1);
    CHECK(step_budget_from_env() == 1234);
    ::setenv("HYPERFORGE_BUDGET", "junk", 1);
    CHECK(step_budget_from_env() == kDefaultStepBudget);
    ::unsetenv("HYPERFORGE_BUDGET");
    CHECK(step_budget_from_env() == kDefaultStepBudget);
}

TEST_CASE("relation order is deterministic") {
    // conj pair at positions 2 and 3; 0 first, then 1, -1, ...
    auto fam = make_family(CaseTag::gauss(), {gi(3, 2), gi(2, 1), gi(2, -1)});
    CHECK(brute_force_relation(fam, 2) == std::vector<int>{0, 1, 1});
    auto sq = make_family(CaseTag::gauss(), {gi(2, 1), gi(3, 4)}); // 3+4i = (2+i)^2, so the quotient is 1
    CHECK(brute_force_relation(sq, 2) == std::vector<int>{2, -1});
    auto sq2 = make_family(CaseTag::gauss(), {gi(2, 1), gi(3, -4)}); // (2-i)^2
    CHECK(brute_force_relation(sq2, 2) == std::vector<int>{2, 1});
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> small(-50, 50);
    for (int i = 0; i < 200; ++i) {
        RingElement a = gi(small(rng), small(rng)), b = gi(small(rng), small(rng));
        const auto tag = CaseTag::gauss();
        CHECK(conjugate(tag, conjugate(tag, a)) == a);
        CHECK(conjugate(tag, testing::times(a, b)) == testing::times(conjugate(tag, a), conjugate(tag, b)));
    }
    for (auto tag : {CaseTag::fp_square(3), CaseTag::fp_square(5), CaseTag::f2_artin_schreier()}) {
        for (int i = 0; i < 200; ++i) {
            RingElement a = random_poly(tag.p, 8, rng), b = random_poly(tag.p, 8, rng);
            CHECK(conjugate(tag, conjugate(tag, a)) == a);
            CHECK(conjugate(tag, testing::times(a, b)) == testing::times(conjugate(tag, a), conjugate(tag, b)));
            const auto sum = std::get<FpPolynomial>(a) + std::get<FpPolynomial>(b);
            CHECK(conjugate(tag, sum) ==
                  RingElement(std::get<FpPolynomial>(conjugate(tag, a)) + std::get<FpPolynomial>(conjugate(tag, b))));
        }
    }
}

TEST_CASE("fixed ring is the base ring (small degrees)") {
    // Oracle: the base ring built as the image of g(T) -> g(t).
    for (auto tag : {CaseTag::fp_square(3), CaseTag::fp_square(5), CaseTag::f2_artin_schreier()}) {
        const int max_degree = tag.p == 5 ? 6 : 8;
        const FpPolynomial t = tag.p == 2 ? poly(2, "X^2+X") : poly(tag.p, "X^2");
        std::set<FpPolynomial> image;
        const std::uint64_t count_g = ipow(tag.p, max_degree / 2 + 1);
        for (std::uint64_t code = 0; code < count_g; ++code) {
            std::vector<FpPolynomial::Coeff> c;
            for (auto v = code; c.size() < static_cast<std::size_t>(max_degree / 2 + 1); v /= tag.p) {
                c.push_back(static_cast<FpPolynomial::Coeff>(v % tag.p));
            }
            image.insert(FpPolynomial(tag.p, c).compose(t));
        }
        const std::uint64_t total = ipow(tag.p, max_degree + 1);
        std::size_t fixed = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<FpPolynomial::Coeff> c;
            for (auto v = code; c.size() < static_cast<std::size_t>(max_degree + 1); v /= tag.p) {
                c.push_back(static_cast<FpPolynomial::Coeff>(v % tag.p));
            }
            const FpPolynomial f(tag.p, c);
            const bool is_fixed = conjugate(tag, f) == RingElement(f);
            if (is_fixed) ++fixed;
            if (is_fixed != (image.count(f) == 1)) {
                FAIL("fixed-ring mismatch at " << f.to_string());
            }
            CHECK(in_base_ring(tag, f) == is_fixed);
        }
        CHECK(fixed == image.size());
    }
}

TEST_CASE("certificate agrees with the oracle on random families") {
    std::mt19937_64 rng(2024);
    int planted = 0, independent = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto rf = testing::random_family(rng);
        auto cert = independence_certificate(rf.family);
        auto rel = brute_force_relation(rf.family, 2);
        INFO(rf.family.tag.name());
        CHECK(cert.independent == !rel.has_value());
        if (rel) CHECK(is_relation(rf.family, *rel));
        if (rf.planted) {
            ++planted;
            CHECK_FALSE(cert.independent);
        }
        independent += cert.independent ? 1 : 0;
    }
    CHECK(planted > 0);
    CHECK(independent > 0);
    CHECK(independent < 60);
}

TEST_CASE("torsion reports") {
    for (auto q : prime_powers_up_to(64)) {
        auto r = torsion_rank_report(q);
        CHECK(r.quotient_order == q + 1);
        CHECK(r.all_torsion);
        CHECK(r.rational_rank == 0);
        REQUIRE(r.class_orders.size() == q + 1);
        // Class of g^j has order (q+1)/gcd(j, q+1).
        for (std::uint64_t j = 0; j <= q; ++j) CHECK(r.class_orders[j] == (q + 1) / std::gcd(j, q + 1));
    }
    CHECK(torsion_rank_report(3).quotient_order == 4);
    CHECK(torsion_rank_report(2).quotient_order == 3);
    CHECK(torsion_rank_report(4).quotient_order == 5);
    CHECK_THROWS_AS(torsion_rank_report(6), PreconditionError);
}

TEST_CASE("case tags") {
    CHECK(CaseTag::parse("gauss") == CaseTag::gauss());
    CHECK(CaseTag::parse("fp_square(3)") == CaseTag::fp_square(3));
    CHECK(CaseTag::parse("fp_square:5") == CaseTag::fp_square(5));
    CHECK(CaseTag::parse("f2_artin_schreier") == CaseTag::f2_artin_schreier());
    CHECK(CaseTag::fp_square(7).name() == "fp_square(7)");
    CHECK_THROWS_AS(CaseTag::parse("fp_square(4)"), PreconditionError);
    CHECK_THROWS_AS(CaseTag::parse("nope"), PreconditionError);
}
