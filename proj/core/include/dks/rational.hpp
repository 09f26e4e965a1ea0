#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rationals over arbitrary-precision integers.
 *
 * A Rational is always stored in lowest terms with a positive denominator;
 * zero is 0/1. Every Dedekind sum, expected value and relative deviation in
 * the library is carried as a Rational. Conversion to decimal text is a
 * display concern only.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dks {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)
    Rational(Integer numerator, Integer denominator);

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Largest integer not exceeding the value.
    Integer floor() const;

    Rational abs() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Fixed-point rendering with `places` digits after the point, rounded half-to-even.
    std::string to_fixed(int places) const;

    /// Rendering with `digits` significant digits, rounded half-to-even.
    std::string to_significant(int digits) const;

    /// Approximate value; for display only.
    double to_double() const;

private:
    void normalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Nearest integer to num/den with ties going to the even neighbour. den > 0.
Integer round_half_even(const Integer& num, const Integer& den);

}  // namespace dks
