#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace hyperforge {

/// Polynomial over the prime field F_p, coefficients little-endian and
/// normalized (no trailing zeros; the zero polynomial has no coefficients).
class FpPolynomial {
public:
    using Coeff = std::uint32_t;

    /// Degree reported for the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    explicit FpPolynomial(Coeff p);
    FpPolynomial(Coeff p, std::vector<Coeff> coeffs);
    /// Signed coefficients, reduced mod p: FpPolynomial::from_signed(3, {-1, 0, 1}) is X^2+2.
    static FpPolynomial from_signed(Coeff p, const std::vector<std::int64_t>& coeffs);

    static FpPolynomial constant(Coeff p, Coeff c);
    static FpPolynomial monomial(Coeff p, Coeff c, int degree);
    static FpPolynomial x(Coeff p) { return monomial(p, 1, 1); }

    Coeff characteristic() const noexcept { return p_; }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    Coeff coeff(int i) const noexcept;
    int degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    FpPolynomial monic() const;
    FpPolynomial scaled(Coeff c) const;
    FpPolynomial derivative() const;
    /// f(g(X)).
    FpPolynomial compose(const FpPolynomial& inner) const;
    Coeff evaluate(Coeff x) const;

    FpPolynomial operator-() const;
    friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator/(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b);

    friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) = default;
    /// Canonical order: degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const FpPolynomial& a, const FpPolynomial& b);

    /// "X^3+2*X+1"; the zero polynomial prints as "0".
    std::string to_string(char var = 'X') const;
    static FpPolynomial parse(Coeff p, std::string_view text, char var = 'X');

private:
    void normalize();

    Coeff p_;
    std::vector<Coeff> c_;
};

struct DivMod {
    FpPolynomial quotient;
    FpPolynomial remainder;
};

DivMod divmod(const FpPolynomial& a, const FpPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b);
FpPolynomial powmod(const FpPolynomial& base, std::uint64_t exponent, const FpPolynomial& modulus);

/// Multiplicative inverse in F_p.
FpPolynomial::Coeff inverse_mod(FpPolynomial::Coeff a, FpPolynomial::Coeff p);

bool is_irreducible(const FpPolynomial& f);

/// Monic irreducibles of the given degree, in canonical order.
std::vector<FpPolynomial> monic_irreducibles(FpPolynomial::Coeff p, int degree);

/// The least monic irreducible of the given degree in canonical order.
FpPolynomial least_monic_irreducible(FpPolynomial::Coeff p, int degree);

struct Factor {
    FpPolynomial poly;
    int multiplicity;
};

struct Factorization {
    FpPolynomial::Coeff characteristic;
    FpPolynomial::Coeff unit;    // leading coefficient of the input
    std::vector<Factor> factors; // monic irreducible, canonical order
};

/// Highest supported input degree for factor_over_fp.
inline constexpr int kMaxFactorDegree = 64;

/// Complete factorization into monic irreducibles (square-free, then
/// distinct-degree, then equal-degree splitting).
Factorization factor_over_fp(const FpPolynomial& f);

/// Recombines a factorization into a polynomial.
FpPolynomial expand(const Factorization& fac);

} // namespace hyperforge
