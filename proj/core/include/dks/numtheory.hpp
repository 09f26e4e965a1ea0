#pragma once

/**
 * @file numtheory.hpp
 * @brief Elementary multiplicative number theory.
 *
 * Factorization is trial division with a 2-3-5 wheel; callers only factor
 * small quantities (divisors of n, Farey denominators).
 */

#include "dks/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dks {

/// gcd of the absolute values; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t x, std::int64_t y);
Integer gcd(const Integer& x, const Integer& y);

/// floor(sqrt(x)) for x >= 0.
Integer isqrt(const Integer& x);
std::uint64_t isqrt(std::uint64_t x);

/// Floor division with a positive divisor.
std::int64_t floor_div(std::int64_t x, std::int64_t y);
/// Least nonnegative residue of x mod y, y > 0.
std::int64_t floor_mod(std::int64_t x, std::int64_t y);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
class FactoredNat {
public:
    explicit FactoredNat(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    /// Strictly increasing primes, exponents >= 1.
    const std::vector<PrimePower>& factors() const& noexcept { return factors_; }
    /// By value on temporaries, so `for (auto f : FactoredNat(n).factors())` is safe.
    std::vector<PrimePower> factors() && { return std::move(factors_); }

    /// v_p of the value (0 when p does not divide it).
    unsigned exponent_of(std::uint64_t prime) const;

private:
    std::uint64_t value_;
    std::vector<PrimePower> factors_;
};

/// Largest e with p^e | t. Throws std::invalid_argument for t = 0 or p < 2.
unsigned p_adic_valuation(std::int64_t t, std::uint64_t p);

/// Product of p^{v_p(r)} over primes p dividing both r and d.
std::uint64_t d_part(std::uint64_t r, std::uint64_t d);
/// r / d_part(r, d).
std::uint64_t d_free_part(std::uint64_t r, std::uint64_t d);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t sigma(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace dks
