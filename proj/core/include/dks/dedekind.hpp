#pragma once

/**
 * @file dedekind.hpp
 * @brief Sawtooth function and Dedekind sums.
 *
 * Two evaluation routes are provided:
 *  - dedekind_naive: the defining O(b) sum, kept as a test oracle;
 *  - dedekind_fast:  Euclid-style descent through the two-term reciprocity
 *                    law, O(log b) rational operations.
 *
 * Imprimitive arguments are legal in both. The normalized sum is S = 12 s.
 */

#include "dks/rational.hpp"

#include <cstdint>

namespace dks {

/// ((t)) = t - floor(t) - 1/2 for non-integer t, and 0 for integer t.
Rational sawtooth(const Rational& t);

/// Default largest modulus accepted by dedekind_naive.
inline constexpr std::int64_t kNaiveModulusLimit = 1'000'000;

/// s(a,b) by direct summation. Throws std::invalid_argument if b < 1 or b > limit.
Rational dedekind_naive(std::int64_t a, std::int64_t b, std::int64_t limit = kNaiveModulusLimit);

/// s(a,b) via reciprocity. Throws std::invalid_argument if b < 1.
Rational dedekind_fast(const Integer& a, const Integer& b);

/// Normalized Dedekind sum S(a,b) = 12 s(a,b) together with its arguments.
struct DedekindValue {
    Rational value;
    Integer a;
    Integer b;
};

DedekindValue normalized(const Integer& a, const Integer& b);

/// Shorthand for normalized(a, b).value.
Rational normalized_sum(const Integer& a, const Integer& b);

}  // namespace dks
