#pragma once

/**
 * @file knopp.hpp
 * @brief The Petersson-Knopp decomposition
 *
 *   sum_{r | n} sum_{j=0}^{r-1} S((n/r) a + j b, r b) = sigma(n) S(a, b)
 *
 * together with the per-term gcds k(r,j), m(r,j), reduced quadruples,
 * expected values and relative deviations.
 */

#include "dks/farey.hpp"
#include "dks/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dks {

inline constexpr std::int64_t kMaxKnoppN = 10'000;

/// (a, b, c, d) with b, d >= 1. The decomposition base and each term's reduced form.
struct Quadruple {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t c = 0;
    std::int64_t d = 1;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct KnoppTerm {
    std::int64_t r = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;  ///< gcd((n/r) a + j b, r b)
    std::int64_t m = 0;  ///< gcd((n/r) c + j d, r d)
    Quadruple reduced;
    Rational sum_value;               ///< S[r,j]
    std::optional<Rational> expected; ///< E[r,j] = b'/(d' q'); absent when q' <= 0
    std::int64_t q_prime = 0;         ///< a' d' - b' c'
};

struct Decomposition {
    std::int64_t n = 0;
    Quadruple base;
    std::int64_t q = 0;                    ///< a d - b c of the base
    Rational base_sum;                     ///< S(a, b)
    std::optional<Rational> base_expected; ///< E(a, b); absent when q <= 0
    bool theorem1_checked = false;
    std::vector<KnoppTerm> terms;          ///< ordered by (r, j)
};

/// Raised by decompose when require_theorem1 is set and a premise fails.
class PremiseViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumerates all sigma(n) terms. Any base with b, d >= 1 and gcd(c,d) = 1 is
/// accepted; the identity holds unconditionally. With require_theorem1 the base
/// must be a valid Farey configuration satisfying both Theorem 1 premises
/// (PremiseViolation otherwise), and each term is checked to be a Farey
/// neighbour with positive sum (std::logic_error otherwise).
Decomposition decompose(const Quadruple& base, std::int64_t n, bool require_theorem1 = false);
Decomposition decompose(const FareyContext& base, std::int64_t n, bool require_theorem1 = false);

struct IdentityCheck {
    bool holds = false;
    Rational lhs;          ///< sum of S[r,j]
    Rational rhs;          ///< sigma(n) S(a,b)
    Rational discrepancy;  ///< lhs - rhs

    explicit operator bool() const noexcept { return holds; }
};

IdentityCheck verify_identity(const Decomposition& dec);

struct TermDeviation {
    std::int64_t r = 0;
    std::int64_t j = 0;
    std::int64_t m = 0;
    Rational deviation;  ///< |S[r,j] / E[r,j] - 1|
};

/// Per-term relative deviations in term order. Throws std::invalid_argument if
/// any term lacks a positive expected value.
std::vector<TermDeviation> deviation_profile(const Decomposition& dec);

/// S(a,b) - b/(dq) - S(c,d) - d/(bq) - q/(db) + 3: the S(t,q) part of the
/// three-term relation, whose magnitude is below q.
Rational three_term_residual(const FareyContext& ctx);

}  // namespace dks
