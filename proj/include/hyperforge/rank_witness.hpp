#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperforge/gaussian.hpp"
#include "hyperforge/int_matrix.hpp"
#include "hyperforge/polynomial.hpp"

namespace hyperforge {

enum class WitnessCase { Gauss, FpSquare, F2ArtinSchreier };

/// Which quadratic extension a family lives in:
///   Gauss            Q(i) over Q,            a+bi -> a-bi
///   FpSquare(p)      F_p(X) over F_p(X^2),   f(X) -> f(-X), p odd
///   F2ArtinSchreier  F_2(X) over F_2(X^2+X), f(X) -> f(X+1)
struct CaseTag {
    WitnessCase kind = WitnessCase::Gauss;
    std::uint32_t p = 0; // characteristic for the polynomial cases

    static CaseTag gauss() { return {WitnessCase::Gauss, 0}; }
    static CaseTag fp_square(std::uint32_t p);
    static CaseTag f2_artin_schreier() { return {WitnessCase::F2ArtinSchreier, 2}; }

    /// "gauss", "fp_square(3)", "f2_artin_schreier".
    std::string name() const;
    /// Accepts the names above, plus "fp_square:3".
    static CaseTag parse(std::string_view text);

    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

using RingElement = std::variant<GaussianInteger, FpPolynomial>;

std::string to_string(const RingElement& x);
/// Parses an element of the ambient ring of the case ("3+2i", "X^2+1").
RingElement parse_element(const CaseTag& tag, std::string_view text);

/// The nontrivial automorphism of the extension, restricted to the ring.
RingElement conjugate(const CaseTag& tag, const RingElement& x);

/// f with f(X) = g(t) for the base-ring generator t (X^2 or X^2+X), when f
/// lies in the base ring. Polynomial cases only.
std::optional<FpPolynomial> to_base_variable(const CaseTag& tag, const FpPolynomial& f);

/// True when x is fixed by conjugation's base ring (Z, F_p[X^2], F_2[X^2+X]).
bool in_base_ring(const CaseTag& tag, const RingElement& x);

/// A prime of the base ring that splits into two conjugate primes.
struct SplitPrimeRecord {
    CaseTag tag;
    /// Rational prime p (Gauss) or irreducible g(T) over F_p.
    std::variant<std::uint64_t, FpPolynomial> base;
    /// Q and its conjugate: a+bi with a > b > 0 and a-bi, or the larger and
    /// smaller monic factor of g(t) in canonical order.
    RingElement factor;
    RingElement conjugate_factor;

    std::string base_string() const;
};

/// First count primes p = 1 mod 4 with p = a^2 + b^2, a > b > 0.
std::vector<SplitPrimeRecord> gaussian_split_primes(std::size_t count);
/// Irreducible g(T) over F_p in canonical order with g(X^2) a product of two
/// distinct conjugate factors.
std::vector<SplitPrimeRecord> fp_square_split_polys(std::uint32_t p, std::size_t count);
/// Irreducible g(T) over F_2 in canonical order with g(X^2+X) split.
std::vector<SplitPrimeRecord> f2_artin_schreier_split_polys(std::size_t count);
std::vector<SplitPrimeRecord> split_records(const CaseTag& tag, std::size_t count);

struct WitnessFamily {
    CaseTag tag;
    std::vector<RingElement> elements;
    /// Primes the family was built from; they come first in the certificate.
    std::vector<SplitPrimeRecord> records;
};

/// a_i = Q_i for the first k split records. PreconditionError when k = 0.
WitnessFamily build_witness_family(const CaseTag& tag, std::size_t k);

/// An arbitrary family; checks element types and that no element is zero.
WitnessFamily make_family(const CaseTag& tag, std::vector<RingElement> elements,
                          std::vector<SplitPrimeRecord> records = {});

/// Multiplicity of prime in x. PreconditionError for x = 0 or a unit/zero prime.
int valuation(const RingElement& x, const RingElement& prime);

struct IndependenceCertificate {
    /// Family records, then any further split primes dividing an element.
    std::vector<SplitPrimeRecord> columns;
    /// M[i][j] = v_Q(a_i) - v_sigmaQ(a_i) for Q the j-th column.
    IntMatrix matrix;
    int rank = 0;
    bool independent = false;
};

IndependenceCertificate independence_certificate(const WitnessFamily& fam);

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

/// HYPERFORGE_BUDGET when set to a positive integer, else kDefaultStepBudget.
std::uint64_t step_budget_from_env();

/// Product of a_i^{n_i} is fixed by conjugation, tested exactly as
/// L == conj(L) with L = prod_{n_i>0} a_i^{n_i} * prod_{n_i<0} conj(a_i)^{-n_i}.
bool is_relation(const WitnessFamily& fam, const std::vector<int>& exponents);

/// First nonzero exponent tuple with |n_i| <= bound that is a relation.
/// Tuples are visited with the first coordinate slowest and each coordinate
/// in the order 0, 1, -1, 2, -2, ... BoundError when (2N+1)^k - 1 exceeds
/// the budget.
std::optional<std::vector<int>> brute_force_relation(const WitnessFamily& fam, int bound,
                                                     std::uint64_t budget = kDefaultStepBudget);

struct TorsionReport {
    std::uint64_t q = 0;
    std::uint64_t quotient_order = 0;   // |F_{q^2}^x / F_q^x|
    std::vector<std::uint64_t> class_orders; // order of the class of g^j, j = 0..q
    bool all_torsion = false;
    int rational_rank = -1;
};

/// F_{q^2}^x / F_q^x computed class by class.
TorsionReport torsion_rank_report(std::uint64_t q);

} // namespace hyperforge
