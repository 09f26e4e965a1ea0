#include "dks/knopp.hpp"

#include "dks/dedekind.hpp"
#include "dks/numtheory.hpp"

#include <limits>
#include <string>

namespace dks {

namespace {

std::int64_t narrow(const Integer& value, const char* what) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error(std::string("decompose: ") + what + " exceeds 64 bits");
    }
    return value.convert_to<std::int64_t>();
}

std::optional<Rational> expected_of(std::int64_t b, std::int64_t d, const Integer& q) {
    if (q.sign() <= 0) {
        return std::nullopt;
    }
    return Rational(Integer(b), Integer(d) * q);
}

void validate_base(const Quadruple& base, std::int64_t n) {
    if (n < 1 || n > kMaxKnoppN) {
        throw std::invalid_argument("decompose: n must lie in [1, " + std::to_string(kMaxKnoppN) +
                                    "]");
    }
    if (base.b < 1 || base.d < 1) {
        throw std::invalid_argument("decompose: b and d must be positive");
    }
    if (gcd(base.c, base.d) != 1) {
        throw std::invalid_argument("decompose: gcd(c, d) must be 1");
    }
}

}  // namespace

Decomposition decompose(const Quadruple& base, std::int64_t n, bool require_theorem1) {
    validate_base(base, n);
    if (require_theorem1) {
        // Also rejects configurations that are not Farey points/neighbours.
        const PremiseCheck premises = check_theorem1_premises(base.b, base.c, base.d, base.a, n);
        if (!premises) {
            throw PremiseViolation("decompose: Theorem 1 premise violated: " + premises.failure);
        }
    }

    Decomposition dec;
    dec.n = n;
    dec.base = base;
    const Integer q = farey_q(base.b, base.c, base.d, base.a);
    dec.q = narrow(q, "q");
    dec.base_sum = normalized_sum(base.a, base.b);
    dec.base_expected = expected_of(base.b, base.d, q);
    dec.theorem1_checked = require_theorem1;

    const auto divs = divisors(static_cast<std::uint64_t>(n));
    dec.terms.reserve(sigma(static_cast<std::uint64_t>(n)));
    for (const std::uint64_t r_u : divs) {
        const auto r = static_cast<std::int64_t>(r_u);
        const std::int64_t cofactor = n / r;
        const Integer rb = Integer(r) * base.b;
        const Integer rd = Integer(r) * base.d;
        for (std::int64_t j = 0; j < r; ++j) {
            const Integer top_a = Integer(cofactor) * base.a + Integer(j) * base.b;
            const Integer top_c = Integer(cofactor) * base.c + Integer(j) * base.d;
            const Integer k = gcd(top_a, rb);
            const Integer m = gcd(top_c, rd);

            KnoppTerm term;
            term.r = r;
            term.j = j;
            term.k = narrow(k, "k");
            term.m = narrow(m, "m");
            term.reduced = Quadruple{narrow(top_a / k, "a'"), narrow(rb / k, "b'"),
                                     narrow(top_c / m, "c'"), narrow(rd / m, "d'")};
            // S(ad, bd) = S(a, b): the reduced pair gives the same sum.
            term.sum_value = normalized_sum(term.reduced.a, term.reduced.b);
            const Integer q_prime = farey_q(term.reduced.b, term.reduced.c, term.reduced.d,
                                            term.reduced.a);
            term.q_prime = narrow(q_prime, "q'");
            term.expected = expected_of(term.reduced.b, term.reduced.d, q_prime);

            if (require_theorem1) {
                const Quadruple& t = term.reduced;
                if (!is_farey_neighbour(t.b, t.c, t.d, t.a)) {
                    throw std::logic_error("decompose: term (" + std::to_string(r) + ", " +
                                           std::to_string(j) + ") is not a Farey neighbour");
                }
                if (term.sum_value.sign() <= 0) {
                    throw std::logic_error("decompose: term (" + std::to_string(r) + ", " +
                                           std::to_string(j) + ") has non-positive sum");
                }
            }
            dec.terms.push_back(std::move(term));
        }
    }
    return dec;
}

Decomposition decompose(const FareyContext& base, std::int64_t n, bool require_theorem1) {
    return decompose(Quadruple{base.a(), base.b(), base.c(), base.d()}, n, require_theorem1);
}

IdentityCheck verify_identity(const Decomposition& dec) {
    IdentityCheck check;
    for (const auto& term : dec.terms) {
        check.lhs += term.sum_value;
    }
    check.rhs = Rational(static_cast<std::int64_t>(sigma(static_cast<std::uint64_t>(dec.n)))) *
                dec.base_sum;
    check.discrepancy = check.lhs - check.rhs;
    check.holds = check.discrepancy.is_zero();
    return check;
}

std::vector<TermDeviation> deviation_profile(const Decomposition& dec) {
    std::vector<TermDeviation> out;
    out.reserve(dec.terms.size());
    for (const auto& term : dec.terms) {
        if (!term.expected || term.expected->sign() <= 0) {
            throw std::invalid_argument("deviation_profile: term (" + std::to_string(term.r) +
                                        ", " + std::to_string(term.j) +
                                        ") has no positive expected value");
        }
        out.push_back({term.r, term.j, term.m,
                       (term.sum_value / *term.expected - Rational(1)).abs()});
    }
    return out;
}

Rational three_term_residual(const FareyContext& ctx) {
    const Integer b = ctx.b();
    const Integer d = ctx.d();
    const Integer q = ctx.q();
    return normalized_sum(ctx.a(), b) - Rational(b, d * q) - normalized_sum(ctx.c(), d) -
           Rational(d, b * q) - Rational(q, d * b) + Rational(3);
}

}  // namespace dks
