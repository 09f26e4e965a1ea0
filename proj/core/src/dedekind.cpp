#include "dks/dedekind.hpp"

#include "dks/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace dks {

namespace {
__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;
}  // namespace

Rational sawtooth(const Rational& t) {
    if (t.is_integer()) {
        return Rational();
    }
    return t - Rational(t.floor()) - Rational(1, 2);
}

Rational dedekind_naive(std::int64_t a, std::int64_t b, std::int64_t limit) {
    if (b < 1) {
        throw std::invalid_argument("dedekind_naive: modulus must be positive");
    }
    if (b > limit) {
        throw std::invalid_argument("dedekind_naive: modulus " + std::to_string(b) +
                                    " exceeds oracle limit " + std::to_string(limit));
    }
    // ((x/b)) = (2x - b) / (2b) when b does not divide x, so
    // s(a,b) = sum (2k - b)(2r_k - b) / (4 b^2) over k with r_k = a k mod b != 0.
    // The k = b term vanishes.
    const std::int64_t residue = floor_mod(a, b);
    Wide total = 0;
    std::int64_t r = 0;
    for (std::int64_t k = 1; k < b; ++k) {
        r += residue;
        if (r >= b) {
            r -= b;
        }
        if (r != 0) {
            total += static_cast<Wide>(2 * k - b) * (2 * r - b);
        }
    }
    const bool negative = total < 0;
    UWide mag = negative ? -static_cast<UWide>(total) : static_cast<UWide>(total);
    Integer num = static_cast<std::uint64_t>(mag >> 64);
    num <<= 64;
    num += static_cast<std::uint64_t>(mag);
    if (negative) {
        num = -num;
    }
    return Rational(std::move(num), Integer(4) * b * b);
}

Rational dedekind_fast(const Integer& a, const Integer& b) {
    if (b < 1) {
        throw std::invalid_argument("dedekind_fast: modulus must be positive");
    }
    Integer x = a % b;
    if (x.sign() < 0) {
        x += b;
    }
    if (x.is_zero()) {
        return Rational();
    }
    Integer y = b;
    const Integer g = gcd(x, y);
    x /= g;
    y /= g;

    // With 0 < x < y coprime:
    //   s(x, y) = -s(y mod x, x) - 1/4 + (x^2 + y^2 + 1) / (12 x y).
    // Unrolled with alternating sign; the chain ends at s(0, 1) = 0.
    Integer num = 0;
    Integer den = 1;
    int sign = 1;
    while (!x.is_zero()) {
        // term = (x^2 + y^2 + 1 - 3xy) / (12xy)
        const Integer term_den = 12 * x * y;
        Integer term_num = x * x + y * y + 1 - 3 * x * y;
        if (sign < 0) {
            term_num = -term_num;
        }
        num = num * term_den + term_num * den;
        den *= term_den;
        const Integer common = gcd(num, den);
        if (common > 1) {
            num /= common;
            den /= common;
        }
        Integer next = y % x;
        y = std::move(x);
        x = std::move(next);
        sign = -sign;
    }
    return Rational(std::move(num), std::move(den));
}

DedekindValue normalized(const Integer& a, const Integer& b) {
    return DedekindValue{dedekind_fast(a, b) * Rational(12), a, b};
}

Rational normalized_sum(const Integer& a, const Integer& b) {
    return dedekind_fast(a, b) * Rational(12);
}

}  // namespace dks
