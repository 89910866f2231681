#include "hyperforge/gaussian.hpp"

#include <array>
#include <cctype>

#include "hyperforge/errors.hpp"

namespace hyperforge {

std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, const GaussianInteger& y) {
    if (y.is_zero()) throw PreconditionError("division by zero in Z[i]");
    // x / y = x * conj(y) / N(y)
    const BigInt n = y.norm();
    const GaussianInteger t = x * y.conj();
    if (t.re_ % n != 0 || t.im_ % n != 0) return std::nullopt;
    return GaussianInteger(t.re_ / n, t.im_ / n);
}

bool associated(const GaussianInteger& x, const GaussianInteger& y) {
    static const std::array<GaussianInteger, 4> units{GaussianInteger(1, 0), GaussianInteger(-1, 0),
                                                      GaussianInteger(0, 1), GaussianInteger(0, -1)};
    for (const auto& u : units) {
        if (u * x == y) return true;
    }
    return false;
}

std::string GaussianInteger::to_string() const {
    if (im_ == 0) return re_.str();
    std::string imag_part;
    if (im_ == 1) {
        imag_part = "i";
    } else if (im_ == -1) {
        imag_part = "-i";
    } else {
        imag_part = im_.str() + "i";
    }
    if (re_ == 0) return imag_part;
    return re_.str() + (im_ > 0 ? "+" : "") + imag_part;
}

GaussianInteger GaussianInteger::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty Gaussian integer", 1, 1);
    BigInt re = 0, im = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        const std::size_t term_start = i;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw ParseError("expected '+' or '-'", 1, static_cast<int>(i) + 1);
        }
        std::size_t digits_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        BigInt value = digits_start == i ? BigInt(1) : BigInt(s.substr(digits_start, i - digits_start));
        if (i < s.size() && s[i] == 'i') {
            ++i;
            im += sign * value;
        } else {
            if (digits_start == i) throw ParseError("expected digits or 'i'", 1, static_cast<int>(term_start) + 1);
            re += sign * value;
        }
        any = true;
    }
    return {re, im};
}

GaussianInteger pow(const GaussianInteger& base, unsigned exponent) {
    GaussianInteger result(1, 0), b = base;
    while (exponent > 0) {
        if (exponent & 1U) result = result * b;
        b = b * b;
        exponent >>= 1U;
    }
    return result;
}

} // namespace hyperforge
