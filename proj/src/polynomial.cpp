#include "hyperforge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>

#include "hyperforge/errors.hpp"
#include "hyperforge/number_theory.hpp"

namespace hyperforge {

namespace {

using Coeff = FpPolynomial::Coeff;

void require_same_field(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.characteristic() != b.characteristic()) {
        throw PreconditionError("polynomials over different prime fields");
    }
}

} // namespace

FpPolynomial::FpPolynomial(Coeff p) : p_(p) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

FpPolynomial::FpPolynomial(Coeff p, std::vector<Coeff> coeffs) : FpPolynomial(p) {
    c_ = std::move(coeffs);
    for (auto& c : c_) c %= p_;
    normalize();
}

FpPolynomial FpPolynomial::from_signed(Coeff p, const std::vector<std::int64_t>& coeffs) {
    std::vector<Coeff> c(coeffs.size());
    auto sp = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<Coeff>(((coeffs[i] % sp) + sp) % sp);
    return FpPolynomial(p, std::move(c));
}

FpPolynomial FpPolynomial::constant(Coeff p, Coeff c) { return FpPolynomial(p, {c}); }

FpPolynomial FpPolynomial::monomial(Coeff p, Coeff c, int degree) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return FpPolynomial(p, std::move(v));
}

void FpPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Coeff FpPolynomial::coeff(int i) const noexcept {
    return i >= 0 && static_cast<std::size_t>(i) < c_.size() ? c_[static_cast<std::size_t>(i)] : 0;
}

FpPolynomial FpPolynomial::scaled(Coeff c) const {
    FpPolynomial r(*this);
    for (auto& v : r.c_) v = static_cast<Coeff>(std::uint64_t{v} * c % p_);
    r.normalize();
    return r;
}

FpPolynomial FpPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(inverse_mod(leading(), p_));
}

FpPolynomial FpPolynomial::derivative() const {
    FpPolynomial r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = static_cast<Coeff>(std::uint64_t{c_[i]} * (i % p_) % p_);
    r.normalize();
    return r;
}

FpPolynomial FpPolynomial::compose(const FpPolynomial& inner) const {
    require_same_field(*this, inner);
    FpPolynomial r(p_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(p_, c_[i]);
    return r;
}

Coeff FpPolynomial::evaluate(Coeff x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
    return static_cast<Coeff>(acc);
}

FpPolynomial FpPolynomial::operator-() const {
    FpPolynomial r(*this);
    for (auto& v : r.c_) v = v == 0 ? 0 : p_ - v;
    return r;
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
    require_same_field(a, b);
    FpPolynomial r(a);
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), 0);
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = (r.c_[i] + b.c_[i]) % a.p_;
    r.normalize();
    return r;
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) { return a + (-b); }

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
    require_same_field(a, b);
    FpPolynomial r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
    }
    r.c_.assign(acc.begin(), acc.end());
    r.normalize();
    return r;
}

FpPolynomial operator/(const FpPolynomial& a, const FpPolynomial& b) { return divmod(a, b).quotient; }
FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b) { return divmod(a, b).remainder; }

std::strong_ordering operator<=>(const FpPolynomial& a, const FpPolynomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return a.p_ <=> b.p_;
}

std::string FpPolynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        Coeff c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FpPolynomial FpPolynomial::parse(Coeff p, std::string_view text, char var) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw ParseError("empty polynomial", 1, 1);
    std::vector<std::int64_t> coeffs;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, static_cast<int>(i) + 1); };
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return std::stoll(s.substr(start, i - start));
    };
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::int64_t coef = 1;
        int deg = 0;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_int();
            have_coef = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != var) fail(std::string("expected '") + var + "' after '*'");
            }
        }
        if (i < s.size() && s[i] == var) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                deg = static_cast<int>(read_int());
            }
        } else if (!have_coef) {
            fail("expected term");
        }
        if (coeffs.size() <= static_cast<std::size_t>(deg)) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
        coeffs[static_cast<std::size_t>(deg)] += sign * coef;
    }
    return from_signed(p, coeffs);
}

Coeff inverse_mod(Coeff a, Coeff p) {
    if (a % p == 0) throw PreconditionError("zero has no inverse mod " + std::to_string(p));
    return static_cast<Coeff>(hyperforge::powmod(a, p - 2, p));
}

DivMod divmod(const FpPolynomial& a, const FpPolynomial& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const Coeff p = a.characteristic();
    if (a.degree() < b.degree()) return {FpPolynomial(p), a};
    std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Coeff> quot(rem.size() - db, 0);
    const std::uint64_t inv_lead = inverse_mod(b.leading(), p);
    for (std::size_t i = rem.size(); i-- > db;) {
        std::uint64_t c = rem[i] % p;
        if (c == 0) continue;
        std::uint64_t f = c * inv_lead % p;
        quot[i - db] = static_cast<Coeff>(f);
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = (rem[i - db + j] + (p - f) * bc[j]) % p;
        }
    }
    rem.resize(db);
    return {FpPolynomial(p, std::move(quot)), FpPolynomial(p, std::vector<Coeff>(rem.begin(), rem.end()))};
}

FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b) {
    FpPolynomial x = a, y = b;
    while (!y.is_zero()) {
        FpPolynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPolynomial powmod(const FpPolynomial& base, std::uint64_t exponent, const FpPolynomial& modulus) {
    FpPolynomial result = FpPolynomial::constant(base.characteristic(), 1) % modulus;
    FpPolynomial b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1U) result = result * b % modulus;
        b = b * b % modulus;
        exponent >>= 1U;
    }
    return result;
}

namespace {

// x^(p^k) mod f by k repeated p-th powers.
FpPolynomial frobenius_power(const FpPolynomial& x, int k, const FpPolynomial& f) {
    FpPolynomial r = x % f;
    for (int i = 0; i < k; ++i) r = powmod(r, r.characteristic(), f);
    return r;
}

// p-th root of a polynomial whose derivative vanishes: f(X) = g(X^p) and
// over F_p every coefficient is its own p-th root.
FpPolynomial pth_root(const FpPolynomial& f) {
    const Coeff p = f.characteristic();
    std::vector<Coeff> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return FpPolynomial(p, std::move(c));
}

void square_free(const FpPolynomial& f, int mult, std::vector<Factor>& out) {
    if (f.degree() < 1) return;
    FpPolynomial c = gcd(f, f.derivative());
    FpPolynomial w = f / c;
    int i = 1;
    while (!w.is_one()) {
        FpPolynomial y = gcd(w, c);
        FpPolynomial fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) square_free(pth_root(c), mult * static_cast<int>(c.characteristic()), out);
}

std::vector<std::pair<FpPolynomial, int>> distinct_degree(FpPolynomial f) {
    std::vector<std::pair<FpPolynomial, int>> out;
    const Coeff p = f.characteristic();
    const FpPolynomial x = FpPolynomial::x(p);
    FpPolynomial h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, p, f);
        FpPolynomial g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

FpPolynomial random_poly(Coeff p, int below_degree, std::mt19937_64& rng) {
    std::vector<Coeff> c(static_cast<std::size_t>(below_degree));
    std::uniform_int_distribution<Coeff> dist(0, p - 1);
    for (auto& v : c) v = dist(rng);
    return FpPolynomial(p, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const FpPolynomial& f, int d, std::mt19937_64& rng, std::vector<FpPolynomial>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Coeff p = f.characteristic();
    for (;;) {
        FpPolynomial a = random_poly(p, f.degree(), rng);
        if (a.degree() < 1) continue;
        FpPolynomial b(p);
        if (p == 2) {
            // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
            FpPolynomial t = a % f;
            b = t;
            for (int j = 1; j < d; ++j) {
                t = t * t % f;
                b = b + t;
            }
        } else {
            // a^((p^d-1)/2) = (a^(1+p+...+p^(d-1)))^((p-1)/2), kept below 64 bits.
            FpPolynomial norm = a % f, t = a % f;
            for (int j = 1; j < d; ++j) {
                t = powmod(t, p, f);
                norm = norm * t % f;
            }
            b = powmod(norm, (p - 1) / 2, f) - FpPolynomial::constant(p, 1);
        }
        FpPolynomial g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(const FpPolynomial& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const FpPolynomial g = f.monic();
    const FpPolynomial x = FpPolynomial::x(f.characteristic());
    if (frobenius_power(x, n, g) != x % g) return false;
    for (auto [r, e] : factorize(static_cast<std::uint64_t>(n))) {
        FpPolynomial h = frobenius_power(x, n / static_cast<int>(r), g);
        if (!gcd(h - x, g).is_one()) return false;
    }
    return true;
}

namespace {

// Visits monic polynomials of the given degree in canonical order until the
// visitor returns false.
template <class Visitor>
void for_each_monic(Coeff p, int degree, Visitor&& visit) {
    const std::uint64_t total = ipow(p, degree);
    std::vector<Coeff> c(static_cast<std::size_t>(degree) + 1, 0);
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t rest = v;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<Coeff>(rest % p);
            rest /= p;
        }
        c.back() = 1;
        if (!visit(FpPolynomial(p, c))) return;
    }
}

} // namespace

std::vector<FpPolynomial> monic_irreducibles(Coeff p, int degree) {
    if (degree < 1) throw PreconditionError("irreducible degree must be positive");
    std::vector<FpPolynomial> out;
    for_each_monic(p, degree, [&](FpPolynomial f) {
        if (is_irreducible(f)) out.push_back(std::move(f));
        return true;
    });
    return out;
}

FpPolynomial least_monic_irreducible(Coeff p, int degree) {
    if (degree < 1) throw PreconditionError("irreducible degree must be positive");
    std::optional<FpPolynomial> found;
    for_each_monic(p, degree, [&](FpPolynomial f) {
        if (!is_irreducible(f)) return true;
        found = std::move(f);
        return false;
    });
    return *found; // every degree has an irreducible
}

Factorization factor_over_fp(const FpPolynomial& f) {
    if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
    if (f.degree() > kMaxFactorDegree) {
        throw BoundError("degree " + std::to_string(f.degree()) + " exceeds factorization bound " +
                         std::to_string(kMaxFactorDegree));
    }
    Factorization result{f.characteristic(), f.leading(), {}};
    std::vector<Factor> sq;
    square_free(f.monic(), 1, sq);
    std::mt19937_64 rng(0x6879706572ULL);
    for (const auto& [part, mult] : sq) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<FpPolynomial> irr;
            equal_degree(block, d, rng, irr);
            for (auto& g : irr) result.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    // Merge repeats (square_free can emit one irreducible under several multiplicities).
    std::vector<Factor> merged;
    for (auto& fac : result.factors) {
        if (!merged.empty() && merged.back().poly == fac.poly) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    result.factors = std::move(merged);
    return result;
}

FpPolynomial expand(const Factorization& fac) {
    FpPolynomial r = FpPolynomial::constant(fac.characteristic, fac.unit);
    for (const auto& f : fac.factors) {
        for (int i = 0; i < f.multiplicity; ++i) r = r * f.poly;
    }
    return r;
}

} // namespace hyperforge
