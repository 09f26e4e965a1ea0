#include "dks/farey.hpp"

#include "dks/numtheory.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace dks {

namespace {

void validate_point(std::int64_t b, std::int64_t c, std::int64_t d) {
    if (d < 1) {
        throw std::invalid_argument("Farey point: d must be positive");
    }
    if (b < 4) {
        throw std::invalid_argument("Farey point: b must be at least 4");
    }
    if (gcd(c, d) != 1) {
        throw std::invalid_argument("Farey point: gcd(c, d) must be 1");
    }
    const Integer dd = d;
    if (dd * dd * dd >= b) {
        throw std::invalid_argument("Farey point: d^3 must be smaller than b");
    }
}

void validate_neighbour_args(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a) {
    validate_point(b, c, d);
    if (gcd(a, b) != 1) {
        throw std::invalid_argument("Farey neighbour: gcd(a, b) must be 1");
    }
}

bool within_alpha_window(std::int64_t b, std::int64_t d, const Integer& q, std::int64_t n) {
    if (q.sign() <= 0) {
        return false;
    }
    const Integer shifted = q + d;
    return Integer(n) * n * d * shifted * shifted <= b;
}

}  // namespace

FareyPoint FareyPoint::make(std::int64_t b, std::int64_t c, std::int64_t d) {
    validate_point(b, c, d);
    if (c < 0 || c >= d) {
        throw std::invalid_argument("Farey point: c must lie in [0, d)");
    }
    return FareyPoint(b, c, d);
}

FareyContext FareyContext::make(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a) {
    if (d < 1) {
        throw std::invalid_argument("Farey point: d must be positive");
    }
    const std::int64_t shift = floor_div(c, d);
    const std::int64_t c0 = c - shift * d;
    const Integer a0 = Integer(a) - Integer(shift) * b;
    if (a0 > std::numeric_limits<std::int64_t>::max() ||
        a0 < std::numeric_limits<std::int64_t>::min()) {
        throw std::invalid_argument("FareyContext: a out of range after normalization");
    }
    const auto a_norm = a0.convert_to<std::int64_t>();
    validate_neighbour_args(b, c0, d, a_norm);
    const Integer q = farey_q(b, c0, d, a_norm);
    if (!within_alpha_window(b, d, q, 1)) {
        throw std::invalid_argument("FareyContext: a is not a right-half Farey neighbour (q = " +
                                    q.str() + ")");
    }
    return FareyContext(FareyPoint::make(b, c0, d), a_norm, q.convert_to<std::int64_t>());
}

Integer farey_q(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a) {
    return Integer(a) * d - Integer(b) * c;
}

bool is_farey_neighbour(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a) {
    if (d < 1) {
        throw std::invalid_argument("Farey point: d must be positive");
    }
    const std::int64_t shift = floor_div(c, d);
    const std::int64_t c0 = c - shift * d;
    validate_neighbour_args(b, c0, d, a);
    const Integer q = Integer(a) * d - Integer(b) * c0 - Integer(b) * shift * d;
    return within_alpha_window(b, d, q, 1);
}

bool alpha_premise(std::int64_t b, std::int64_t d, std::int64_t n) {
    // b >= d^3 n^2 (n + 1 + 2 sqrt(n)): isolate the radical, then square.
    const Integer d3 = Integer(d) * d * d;
    const Integer n2 = Integer(n) * n;
    const Integer slack = Integer(b) - d3 * n2 * (n + 1);
    if (slack.sign() < 0) {
        return false;
    }
    return slack * slack >= 4 * d3 * d3 * n2 * n2 * n;
}

bool window_premise(std::int64_t b, std::int64_t d, std::int64_t n, const Integer& q) {
    return within_alpha_window(b, d, q, n);
}

PremiseCheck check_theorem1_premises(std::int64_t b, std::int64_t c, std::int64_t d,
                                     std::int64_t a, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("Theorem 1 premises: n must be positive");
    }
    if (d < 1) {
        throw std::invalid_argument("Farey point: d must be positive");
    }
    const std::int64_t shift = floor_div(c, d);
    const std::int64_t c0 = c - shift * d;
    validate_neighbour_args(b, c0, d, a);
    if (!alpha_premise(b, d, n)) {
        return {false, "alpha >= n^(3/2) + n fails: (b - d^3 n^2 (n+1))^2 >= 4 d^6 n^5 with b - d^3 n^2 (n+1) >= 0 does not hold"};
    }
    const Integer q = Integer(a) * d - Integer(b) * c0 - Integer(b) * shift * d;
    if (q.sign() <= 0) {
        return {false, "0 < a - b c/d fails: q = a d - b c = " + q.str() + " is not positive"};
    }
    if (!within_alpha_window(b, d, q, n)) {
        return {false, "a - b c/d <= alpha/n - 1 fails: n^2 d (q + d)^2 <= b does not hold for q = " +
                           q.str()};
    }
    return {true, {}};
}

bool satisfies_theorem1_premises(std::int64_t b, std::int64_t c, std::int64_t d,
                                 std::int64_t a, std::int64_t n) {
    return check_theorem1_premises(b, c, d, a, n).ok;
}

Rational expected_value(const FareyContext& ctx) {
    return Rational(Integer(ctx.b()), Integer(ctx.d()) * ctx.q());
}

}  // namespace dks
