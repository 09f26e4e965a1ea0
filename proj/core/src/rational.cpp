#include "dks/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <stdexcept>

namespace dks {

namespace {

Integer pow10(int exponent) {
    Integer result = 1;
    for (int i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

// Inserts a decimal point so that `places` digits follow it.
std::string place_point(const Integer& scaled, int places) {
    const bool negative = scaled.sign() < 0;
    std::string digits = (negative ? Integer(-scaled) : scaled).str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
    }
    return negative ? "-" + digits : digits;
}

}  // namespace

Integer round_half_even(const Integer& num, const Integer& den) {
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(num, den, q, r);
    // Truncating division; shift to floor.
    if (r.sign() < 0) {
        q -= 1;
        r += den;
    }
    const Integer twice = r * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) {
        q += 1;
    }
    return q;
}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("Rational: zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Integer Rational::floor() const {
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(num_, den_, q, r);
    if (r.sign() < 0) {
        q -= 1;
    }
    return q;
}

Rational Rational::abs() const {
    Rational out = *this;
    if (out.num_.sign() < 0) {
        out.num_ = -out.num_;
    }
    return out;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const Integer left = lhs.num_ * rhs.den_;
    const Integer right = rhs.num_ * lhs.den_;
    if (left < right) return std::strong_ordering::less;
    if (left > right) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::string Rational::to_fixed(int places) const {
    if (places < 0) {
        throw std::invalid_argument("Rational::to_fixed: negative precision");
    }
    return place_point(round_half_even(num_ * pow10(places), den_), places);
}

std::string Rational::to_significant(int digits) const {
    if (digits < 1) {
        throw std::invalid_argument("Rational::to_significant: need at least one digit");
    }
    if (num_.is_zero()) {
        return "0";
    }
    const Rational magnitude = abs();
    // Decimal exponent e with 10^e <= |x| < 10^(e+1).
    int exponent = static_cast<int>(magnitude.floor().str().size()) - 1;
    if (magnitude < Rational(1)) {
        exponent = -1;
        Rational probe = magnitude * Rational(10);
        while (probe < Rational(1)) {
            probe *= Rational(10);
            --exponent;
        }
    }
    int places = digits - 1 - exponent;
    Integer scaled = places >= 0 ? round_half_even(num_ * pow10(places), den_)
                                 : round_half_even(num_, den_ * pow10(-places));
    // Rounding may carry into a new leading digit (9.99.. -> 10.0).
    const Integer abs_scaled = scaled.sign() < 0 ? Integer(-scaled) : scaled;
    if (abs_scaled >= pow10(digits)) {
        --places;
        scaled = places >= 0 ? round_half_even(num_ * pow10(places), den_)
                             : round_half_even(num_, den_ * pow10(-places));
    }
    if (places >= 0) {
        return place_point(scaled, places);
    }
    return (scaled * pow10(-places)).str();
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace dks
