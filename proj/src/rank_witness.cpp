#include "hyperforge/rank_witness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

#include "hyperforge/errors.hpp"
#include "hyperforge/finite_field.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

// ---------------------------------------------------------------------------
// Case tags and elements

CaseTag CaseTag::fp_square(std::uint32_t p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("fp_square needs an odd prime, got " + std::to_string(p));
    return {WitnessCase::FpSquare, p};
}

std::string CaseTag::name() const {
    switch (kind) {
    case WitnessCase::Gauss: return "gauss";
    case WitnessCase::FpSquare: return "fp_square(" + std::to_string(p) + ")";
    case WitnessCase::F2ArtinSchreier: return "f2_artin_schreier";
    }
    return "?";
}

CaseTag CaseTag::parse(std::string_view text) {
    if (text == "gauss") return gauss();
    if (text == "f2_artin_schreier" || text == "f2") return f2_artin_schreier();
    for (std::string_view prefix : {"fp_square(", "fp_square:"}) {
        if (text.substr(0, prefix.size()) != prefix) continue;
        auto digits = text.substr(prefix.size());
        if (prefix.back() == '(') {
            if (digits.empty() || digits.back() != ')') break;
            digits.remove_suffix(1);
        }
        if (digits.empty() || digits.size() > 9 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            break;
        }
        return fp_square(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    throw PreconditionError("unknown witness case '" + std::string(text) + "'");
}

std::string to_string(const RingElement& x) {
    return std::visit([](const auto& v) { return v.to_string(); }, x);
}

RingElement parse_element(const CaseTag& tag, std::string_view text) {
    if (tag.kind == WitnessCase::Gauss) return GaussianInteger::parse(text);
    return FpPolynomial::parse(tag.p, text);
}

namespace {

const GaussianInteger& as_gauss(const RingElement& x) {
    if (const auto* g = std::get_if<GaussianInteger>(&x)) return *g;
    throw PreconditionError("expected a Gaussian integer");
}

const FpPolynomial& as_poly(const CaseTag& tag, const RingElement& x) {
    const auto* f = std::get_if<FpPolynomial>(&x);
    if (!f || f->characteristic() != tag.p) {
        throw PreconditionError("expected a polynomial over F_" + std::to_string(tag.p));
    }
    return *f;
}

void check_element(const CaseTag& tag, const RingElement& x) {
    if (tag.kind == WitnessCase::Gauss) {
        as_gauss(x);
    } else {
        as_poly(tag, x);
    }
}

FpPolynomial flip_sign(const FpPolynomial& f) {
    auto c = f.coeffs();
    const auto p = f.characteristic();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = (p - c[i]) % p;
    return {p, std::move(c)};
}

FpPolynomial artin_schreier_variable() { return FpPolynomial(2, {0, 1, 1}); }

FpPolynomial conjugate_poly(const CaseTag& tag, const FpPolynomial& f) {
    if (tag.kind == WitnessCase::FpSquare) return flip_sign(f);
    return f.compose(FpPolynomial(2, {1, 1}));
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    return std::visit(
        [](const auto& x, const auto& y) -> RingElement {
            if constexpr (std::is_same_v<decltype(x), decltype(y)>) {
                return x * y;
            } else {
                throw PreconditionError("mixed element types");
            }
        },
        a, b);
}

RingElement one_like(const RingElement& x) {
    if (const auto* f = std::get_if<FpPolynomial>(&x)) return FpPolynomial::constant(f->characteristic(), 1);
    return GaussianInteger(1, 0);
}

RingElement power(const RingElement& x, int e) {
    RingElement acc = one_like(x);
    for (int i = 0; i < e; ++i) acc = multiply(acc, x);
    return acc;
}

bool is_zero(const RingElement& x) {
    return std::visit([](const auto& v) { return v.is_zero(); }, x);
}

bool is_unit(const RingElement& x) {
    if (const auto* f = std::get_if<FpPolynomial>(&x)) return f->degree() == 0;
    return std::get<GaussianInteger>(x).is_unit();
}

std::optional<RingElement> divide(const RingElement& x, const RingElement& y) {
    if (const auto* f = std::get_if<FpPolynomial>(&x)) {
        const auto& g = std::get<FpPolynomial>(y);
        auto qr = divmod(*f, g);
        if (!qr.remainder.is_zero()) return std::nullopt;
        return RingElement(qr.quotient);
    }
    auto q = exact_divide(std::get<GaussianInteger>(x), std::get<GaussianInteger>(y));
    if (!q) return std::nullopt;
    return RingElement(*q);
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// p = a^2 + b^2 with a > b > 0.
SplitPrimeRecord gauss_record(std::uint64_t p) {
    for (std::uint64_t b = 1; 2 * b * b < p; ++b) {
        const std::uint64_t a = isqrt(p - b * b);
        if (a * a + b * b == p && a > b) {
            GaussianInteger r(static_cast<long long>(a), static_cast<long long>(b));
            return {CaseTag::gauss(), p, r, r.conj()};
        }
    }
    throw Error("no two-squares decomposition for " + std::to_string(p));
}

// Record for an irreducible factor f of the ambient polynomial ring whose
// conjugate is a different prime; nothing when f is fixed up to units.
std::optional<SplitPrimeRecord> poly_record(const CaseTag& tag, const FpPolynomial& f) {
    const FpPolynomial g = conjugate_poly(tag, f).monic();
    if (g == f) return std::nullopt;
    const FpPolynomial& q = std::max(f, g);
    const FpPolynomial& sq = std::min(f, g);
    auto base = to_base_variable(tag, q * sq);
    if (!base) throw Error("norm of a split factor left the base ring");
    return SplitPrimeRecord{tag, *base, q, sq};
}

std::vector<SplitPrimeRecord> poly_stream(const CaseTag& tag, std::size_t count) {
    std::vector<SplitPrimeRecord> out;
    const FpPolynomial t = tag.kind == WitnessCase::FpSquare ? FpPolynomial::monomial(tag.p, 1, 2) : artin_schreier_variable();
    for (int d = 1; out.size() < count; ++d) {
        if (2 * d > kMaxFactorDegree) throw BoundError("split stream exhausted the factorization bound");
        for (const auto& g : monic_irreducibles(tag.p, d)) {
            if (out.size() == count) break;
            const auto fac = factor_over_fp(g.compose(t));
            if (fac.factors.size() != 2 || fac.factors[0].multiplicity != 1 || fac.factors[1].multiplicity != 1) continue;
            auto rec = poly_record(tag, fac.factors[1].poly);
            if (!rec || std::get<FpPolynomial>(rec->conjugate_factor) != fac.factors[0].poly) continue;
            out.push_back(std::move(*rec));
        }
    }
    return out;
}

bool same_record(const SplitPrimeRecord& a, const SplitPrimeRecord& b) { return a.base == b.base; }

bool base_less(const SplitPrimeRecord& a, const SplitPrimeRecord& b) {
    if (a.base.index() != b.base.index()) return a.base.index() < b.base.index();
    if (const auto* p = std::get_if<std::uint64_t>(&a.base)) return *p < std::get<std::uint64_t>(b.base);
    return std::get<FpPolynomial>(a.base) < std::get<FpPolynomial>(b.base);
}

std::uint64_t small_norm(const GaussianInteger& z) {
    const BigInt n = z.norm();
    if (n > BigInt(std::numeric_limits<std::uint64_t>::max() >> 2)) {
        throw BoundError("norm " + n.str() + " is too large to factor");
    }
    return static_cast<std::uint64_t>(n);
}

// Split primes dividing x.
std::vector<SplitPrimeRecord> split_divisors(const CaseTag& tag, const RingElement& x) {
    std::vector<SplitPrimeRecord> out;
    if (tag.kind == WitnessCase::Gauss) {
        const auto n = small_norm(as_gauss(x));
        for (auto [p, e] : factorize(n)) {
            if (p % 4 == 1) out.push_back(gauss_record(p));
        }
        return out;
    }
    for (const auto& f : factor_over_fp(as_poly(tag, x)).factors) {
        if (auto rec = poly_record(tag, f.poly)) {
            if (std::none_of(out.begin(), out.end(), [&](const auto& r) { return same_record(r, *rec); })) {
                out.push_back(std::move(*rec));
            }
        }
    }
    return out;
}

} // namespace

RingElement conjugate(const CaseTag& tag, const RingElement& x) {
    if (tag.kind == WitnessCase::Gauss) return as_gauss(x).conj();
    return conjugate_poly(tag, as_poly(tag, x));
}

std::optional<FpPolynomial> to_base_variable(const CaseTag& tag, const FpPolynomial& f) {
    if (tag.kind == WitnessCase::Gauss) throw PreconditionError("the Gaussian case has no polynomial base ring");
    std::vector<FpPolynomial::Coeff> digits;
    if (tag.kind == WitnessCase::FpSquare) {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (i % 2 == 1) {
                if (f.coeffs()[i] != 0) return std::nullopt;
            } else {
                digits.push_back(f.coeffs()[i]);
            }
        }
        return FpPolynomial(f.characteristic(), std::move(digits));
    }
    // Expansion in powers of t = X^2 + X; every digit must be a constant.
    const FpPolynomial t = artin_schreier_variable();
    FpPolynomial rest = f;
    while (!rest.is_zero()) {
        auto qr = divmod(rest, t);
        if (qr.remainder.degree() > 0) return std::nullopt;
        digits.push_back(qr.remainder.coeff(0));
        rest = qr.quotient;
    }
    return FpPolynomial(2, std::move(digits));
}

bool in_base_ring(const CaseTag& tag, const RingElement& x) {
    if (tag.kind == WitnessCase::Gauss) return as_gauss(x).imag() == 0;
    return to_base_variable(tag, as_poly(tag, x)).has_value();
}

std::string SplitPrimeRecord::base_string() const {
    if (const auto* p = std::get_if<std::uint64_t>(&base)) return std::to_string(*p);
    return std::get<FpPolynomial>(base).to_string('T');
}

// ---------------------------------------------------------------------------
// Streams and families

std::vector<SplitPrimeRecord> gaussian_split_primes(std::size_t count) {
    std::vector<SplitPrimeRecord> out;
    for (std::uint64_t p = 5; out.size() < count; p += 4) {
        if (is_prime(p)) out.push_back(gauss_record(p));
    }
    return out;
}

std::vector<SplitPrimeRecord> fp_square_split_polys(std::uint32_t p, std::size_t count) {
    return poly_stream(CaseTag::fp_square(p), count);
}

std::vector<SplitPrimeRecord> f2_artin_schreier_split_polys(std::size_t count) {
    return poly_stream(CaseTag::f2_artin_schreier(), count);
}

std::vector<SplitPrimeRecord> split_records(const CaseTag& tag, std::size_t count) {
    switch (tag.kind) {
    case WitnessCase::Gauss: return gaussian_split_primes(count);
    case WitnessCase::FpSquare: return fp_square_split_polys(tag.p, count);
    case WitnessCase::F2ArtinSchreier: return f2_artin_schreier_split_polys(count);
    }
    throw PreconditionError("unsupported witness case");
}

WitnessFamily build_witness_family(const CaseTag& tag, std::size_t k) {
    if (k == 0) throw PreconditionError("a witness family needs at least one element");
    auto records = split_records(tag, k);
    std::vector<RingElement> elements;
    for (const auto& r : records) elements.push_back(r.factor);
    return {tag, std::move(elements), std::move(records)};
}

WitnessFamily make_family(const CaseTag& tag, std::vector<RingElement> elements, std::vector<SplitPrimeRecord> records) {
    if (tag.kind == WitnessCase::FpSquare) CaseTag::fp_square(tag.p);
    if (tag.kind == WitnessCase::F2ArtinSchreier && tag.p != 2) throw PreconditionError("Artin-Schreier case is over F_2");
    if (elements.empty()) throw PreconditionError("a witness family needs at least one element");
    for (const auto& x : elements) {
        check_element(tag, x);
        if (is_zero(x)) throw PreconditionError("family elements must be nonzero");
    }
    for (const auto& r : records) {
        if (r.tag != tag) throw PreconditionError("record belongs to another case");
    }
    return {tag, std::move(elements), std::move(records)};
}

int valuation(const RingElement& x, const RingElement& prime) {
    if (x.index() != prime.index()) throw PreconditionError("element and prime live in different rings");
    if (is_zero(x)) throw PreconditionError("valuation of 0 is undefined");
    if (is_zero(prime) || is_unit(prime)) throw PreconditionError("valuation needs a nonzero non-unit prime");
    int v = 0;
    RingElement rest = x;
    while (auto q = divide(rest, prime)) {
        rest = std::move(*q);
        ++v;
    }
    return v;
}

IndependenceCertificate independence_certificate(const WitnessFamily& fam) {
    IndependenceCertificate cert;
    cert.columns = fam.records;
    std::vector<SplitPrimeRecord> extra;
    for (const auto& x : fam.elements) {
        for (auto& rec : split_divisors(fam.tag, x)) {
            auto known = [&](const SplitPrimeRecord& r) { return same_record(r, rec); };
            if (std::none_of(cert.columns.begin(), cert.columns.end(), known) &&
                std::none_of(extra.begin(), extra.end(), known)) {
                extra.push_back(std::move(rec));
            }
        }
    }
    std::sort(extra.begin(), extra.end(), base_less);
    cert.columns.insert(cert.columns.end(), extra.begin(), extra.end());
    for (const auto& x : fam.elements) {
        std::vector<BigInt> row;
        for (const auto& c : cert.columns) row.emplace_back(valuation(x, c.factor) - valuation(x, c.conjugate_factor));
        cert.matrix.push_back(std::move(row));
    }
    cert.rank = cert.columns.empty() ? 0 : rank_fraction_free(cert.matrix);
    cert.independent = cert.rank == static_cast<int>(fam.elements.size());
    return cert;
}

// ---------------------------------------------------------------------------
// Relation search

std::uint64_t step_budget_from_env() {
    if (const char* env = std::getenv("HYPERFORGE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultStepBudget;
}

bool is_relation(const WitnessFamily& fam, const std::vector<int>& exponents) {
    if (exponents.size() != fam.elements.size()) throw PreconditionError("exponent count differs from family size");
    RingElement left = one_like(fam.elements.front());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const int n = exponents[i];
        if (n > 0) left = multiply(left, power(fam.elements[i], n));
        if (n < 0) left = multiply(left, power(conjugate(fam.tag, fam.elements[i]), -n));
    }
    return left == conjugate(fam.tag, left);
}

namespace {

// Homomorphic images of the ring in a few finite fields. For each image the
// discrete log of h(a_i) / h(conj a_i) is stored; a tuple can only be a
// relation if sum n_i * log_i vanishes in every image.
struct Fingerprint {
    std::vector<std::uint64_t> moduli;           // q_j - 1
    std::vector<std::vector<std::uint64_t>> logs; // [j][i]
};

constexpr std::size_t kFingerprintImages = 4;

Fingerprint make_fingerprint(const WitnessFamily& fam) {
    Fingerprint fp;
    const std::size_t k = fam.elements.size();
    std::vector<RingElement> conj;
    for (const auto& a : fam.elements) conj.push_back(conjugate(fam.tag, a));
    auto add_image = [&](const FiniteField& f, const auto& h) {
        std::vector<std::uint64_t> row;
        const std::uint64_t m = f.order() - 1;
        for (std::size_t i = 0; i < k; ++i) {
            const auto x = h(fam.elements[i]), y = h(conj[i]);
            if (x == 0 || y == 0) return;
            row.push_back((f.log(x) + m - f.log(y)) % m);
        }
        fp.moduli.push_back(m);
        fp.logs.push_back(std::move(row));
    };
    if (fam.tag.kind == WitnessCase::Gauss) {
        // Z[i] -> F_l with i -> a square root of -1, for primes l = 1 mod 4.
        for (std::uint64_t l = kDefaultFieldBound; l > 4 && fp.logs.size() < kFingerprintImages; --l) {
            if (l % 4 != 1 || !is_prime(l)) continue;
            const FiniteField f = make_finite_field(l);
            const auto s = f.exp((l - 1) / 4);
            const BigInt big_l(l);
            auto reduce = [&](const BigInt& v) {
                BigInt r = v % big_l;
                if (r < 0) r += big_l;
                return static_cast<FiniteField::Element>(r);
            };
            add_image(f, [&](const RingElement& x) {
                const auto& z = std::get<GaussianInteger>(x);
                return f.add(reduce(z.real()), f.mul(reduce(z.imag()), s));
            });
        }
    } else {
        // F_p[X] -> F_{p^m} by evaluation at primitive elements.
        std::uint64_t q = fam.tag.p;
        while (q * fam.tag.p <= kDefaultFieldBound) q *= fam.tag.p;
        const FiniteField f = make_finite_field(q);
        for (std::uint64_t j = 1; j < q - 1 && fp.logs.size() < kFingerprintImages; ++j) {
            if (std::gcd(j, q - 1) != 1) continue;
            const auto beta = f.exp(j);
            add_image(f, [&](const RingElement& x) {
                FiniteField::Element acc = 0;
                const auto& g = std::get<FpPolynomial>(x);
                for (int i = g.degree(); i >= 0; --i) acc = f.add(f.mul(acc, beta), g.coeff(i));
                return acc;
            });
        }
    }
    return fp;
}

} // namespace

std::optional<std::vector<int>> brute_force_relation(const WitnessFamily& fam, int bound, std::uint64_t budget) {
    if (bound < 1) throw PreconditionError("oracle bound must be at least 1");
    const std::size_t k = fam.elements.size();
    std::uint64_t tuples = 1;
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (tuples > (budget + 1) / width + 1) {
            tuples = budget + 2;
            break;
        }
        tuples *= width;
    }
    if (tuples - 1 > budget) {
        throw BoundError("oracle needs (2N+1)^k - 1 = " + (tuples > budget + 1 ? std::string("more than ") + std::to_string(budget)
                                                                                 : std::to_string(tuples - 1)) +
                         " candidate tuples, above the step budget " + std::to_string(budget));
    }
    std::vector<int> digits{0};
    for (int v = 1; v <= bound; ++v) {
        digits.push_back(v);
        digits.push_back(-v);
    }
    const Fingerprint fp = make_fingerprint(fam);
    const std::size_t images = fp.moduli.size();
    // partial[level][j]: fingerprint of the first `level` coordinates.
    std::vector<std::vector<std::uint64_t>> partial(k + 1, std::vector<std::uint64_t>(images, 0));
    std::vector<int> current(k, 0);
    std::optional<std::vector<int>> found;
    bool all_zero_seen = false;

    auto step = [&](auto&& self, std::size_t level) -> void {
        if (found) return;
        if (level == k) {
            if (!all_zero_seen) {
                all_zero_seen = true; // the all-zero tuple comes first
                return;
            }
            for (std::size_t j = 0; j < images; ++j) {
                if (partial[k][j] != 0) return;
            }
            if (is_relation(fam, current)) found = current;
            return;
        }
        for (int d : digits) {
            current[level] = d;
            for (std::size_t j = 0; j < images; ++j) {
                const auto m = fp.moduli[j];
                const auto term = (static_cast<std::uint64_t>(d < 0 ? -d : d) * fp.logs[j][level]) % m;
                partial[level + 1][j] = (partial[level][j] + (d < 0 ? m - term : term)) % m;
            }
            self(self, level + 1);
            if (found) return;
        }
        current[level] = 0;
    };
    step(step, 0);
    return found;
}

// ---------------------------------------------------------------------------

TorsionReport torsion_rank_report(std::uint64_t q) {
    if (!as_prime_power(q)) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    const std::uint64_t big = q * q;
    const FiniteField f = make_finite_field(big);
    TorsionReport r;
    r.q = q;
    // x lies in F_q^x exactly when x^(q-1) = 1.
    auto in_small = [&](FiniteField::Element x) { return f.pow(x, static_cast<std::int64_t>(q - 1)) == 1; };
    std::uint64_t small_count = 0;
    for (FiniteField::Element x = 1; x < f.order(); ++x) small_count += in_small(x) ? 1 : 0;
    r.quotient_order = (big - 1) / small_count;
    r.all_torsion = true;
    for (std::uint64_t j = 0; j < r.quotient_order; ++j) {
        const auto g = f.exp(j);
        auto x = g;
        std::uint64_t order = 1;
        while (!in_small(x) && order <= r.quotient_order) {
            x = f.mul(x, g);
            ++order;
        }
        if (order > r.quotient_order) r.all_torsion = false;
        r.class_orders.push_back(order);
    }
    r.rational_rank = r.all_torsion ? 0 : -1;
    return r;
}

} // namespace hyperforge
