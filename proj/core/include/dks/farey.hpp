#pragma once

/**
 * @file farey.hpp
 * @brief Farey points with respect to b, right-half Farey neighbours and
 *        expected values.
 *
 * alpha = sqrt(b / d^3) never appears as a number. Every condition that
 * involves it is restated as an integer polynomial inequality:
 *
 *   q/d <= alpha - 1          <=>  d (q + d)^2 <= b
 *   q/d <= alpha/n - 1        <=>  n^2 d (q + d)^2 <= b
 *   alpha >= n^{3/2} + n      <=>  L >= 0 and L^2 >= 4 d^6 n^5,
 *                                  L = b - d^3 n^2 (n + 1)
 *
 * where q = a d - b c.
 */

#include "dks/rational.hpp"

#include <cstdint>
#include <string>

namespace dks {

/// The Farey point b*c/d, with gcd(c,d) = 1, 0 <= c < d, d^3 < b and b >= 4.
class FareyPoint {
public:
    /// Throws std::invalid_argument when an invariant fails. c must already be in [0, d).
    static FareyPoint make(std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    friend bool operator==(const FareyPoint&, const FareyPoint&) = default;

private:
    FareyPoint(std::int64_t b, std::int64_t c, std::int64_t d) : b_(b), c_(c), d_(d) {}

    std::int64_t b_;
    std::int64_t c_;
    std::int64_t d_;
};

/// A Farey point together with one of its right-half neighbours a.
class FareyContext {
public:
    /// Normalizes c into [0, d) (shifting a by the matching multiple of b), then
    /// validates gcd(a,b) = 1, q > 0 and d (q + d)^2 <= b.
    static FareyContext make(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a);

    const FareyPoint& point() const noexcept { return point_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t b() const noexcept { return point_.b(); }
    std::int64_t c() const noexcept { return point_.c(); }
    std::int64_t d() const noexcept { return point_.d(); }

private:
    FareyContext(FareyPoint point, std::int64_t a, std::int64_t q)
        : point_(point), a_(a), q_(q) {}

    FareyPoint point_;
    std::int64_t a_;
    std::int64_t q_;
};

/// q = a d - b c as an exact integer.
Integer farey_q(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a);

/// True iff q > 0 and d (q + d)^2 <= b. c is reduced mod d first.
/// Throws std::invalid_argument if gcd(c,d) != 1, d^3 >= b, b < 4 or gcd(a,b) != 1.
bool is_farey_neighbour(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t a);

/// Exact alpha >= n^{3/2} + n.
bool alpha_premise(std::int64_t b, std::int64_t d, std::int64_t n);

/// Exact 0 < q/d <= alpha/n - 1, given q.
bool window_premise(std::int64_t b, std::int64_t d, std::int64_t n, const Integer& q);

/// Outcome of the Theorem 1 premise test; `failure` names the violated inequality.
struct PremiseCheck {
    bool ok = false;
    std::string failure;

    explicit operator bool() const noexcept { return ok; }
};

PremiseCheck check_theorem1_premises(std::int64_t b, std::int64_t c, std::int64_t d,
                                     std::int64_t a, std::int64_t n);

/// Both premises of Theorem 1: alpha >= n^{3/2} + n and 0 < q/d <= alpha/n - 1.
/// Same argument rejections as is_farey_neighbour; also n >= 1.
bool satisfies_theorem1_premises(std::int64_t b, std::int64_t c, std::int64_t d,
                                 std::int64_t a, std::int64_t n);

/// E(a,b) = b / (d q).
Rational expected_value(const FareyContext& ctx);

}  // namespace dks
