#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hyperforge/bigint.hpp"

namespace hyperforge {

/// a + b*i in Z[i].
class GaussianInteger {
public:
    GaussianInteger() = default;
    GaussianInteger(BigInt re, BigInt im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInteger(long long re, long long im) : re_(re), im_(im) {}

    const BigInt& real() const noexcept { return re_; }
    const BigInt& imag() const noexcept { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    /// One of 1, -1, i, -i.
    bool is_unit() const { return norm() == 1; }
    BigInt norm() const { return re_ * re_ + im_ * im_; }
    GaussianInteger conj() const { return {re_, -im_}; }

    friend GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.re_ + y.re_, x.im_ + y.im_};
    }
    friend GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.re_ - y.re_, x.im_ - y.im_};
    }
    friend GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    GaussianInteger operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;

    /// Exact quotient x / y when y divides x.
    friend std::optional<GaussianInteger> exact_divide(const GaussianInteger& x, const GaussianInteger& y);

    /// True when the two differ by a unit factor.
    friend bool associated(const GaussianInteger& x, const GaussianInteger& y);

    /// "3+2i", "2-i", "5", "-i".
    std::string to_string() const;
    static GaussianInteger parse(std::string_view text);

private:
    BigInt re_ = 0;
    BigInt im_ = 0;
};

GaussianInteger pow(const GaussianInteger& base, unsigned exponent);

} // namespace hyperforge
