#include "dks/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dks {

std::int64_t gcd(std::int64_t x, std::int64_t y) {
    std::uint64_t a = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
    std::uint64_t b = y < 0 ? 0 - static_cast<std::uint64_t>(y) : static_cast<std::uint64_t>(y);
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return static_cast<std::int64_t>(a);
}

Integer gcd(const Integer& x, const Integer& y) {
    Integer a = x.sign() < 0 ? Integer(-x) : x;
    Integer b = y.sign() < 0 ? Integer(-y) : y;
    while (!b.is_zero()) {
        Integer t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

Integer isqrt(const Integer& x) {
    if (x.sign() < 0) {
        throw std::domain_error("isqrt: negative argument");
    }
    if (x < 2) {
        return x;
    }
    // Newton iteration from an initial guess above the root.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
    Integer guess = Integer(1) << ((bits + 1) / 2);
    while (true) {
        Integer next = (guess + x / guess) >> 1;
        if (next >= guess) {
            return guess;
        }
        guess = std::move(next);
    }
}

std::uint64_t isqrt(std::uint64_t x) {
    return isqrt(Integer(x)).convert_to<std::uint64_t>();
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) {
        --q;
    }
    return q;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t y) {
    const std::int64_t r = x % y;
    return r < 0 ? r + y : r;
}

FactoredNat::FactoredNat(std::uint64_t value) : value_(value) {
    if (value == 0) {
        throw std::invalid_argument("FactoredNat: value must be positive");
    }
    std::uint64_t rest = value;
    auto take = [&](std::uint64_t p) {
        if (rest % p != 0) {
            return;
        }
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors_.push_back({p, e});
    };
    take(2);
    take(3);
    take(5);
    // Residues mod 30 coprime to 30, as gaps starting from 7.
    static constexpr std::uint64_t kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    for (std::size_t i = 0; p <= rest / p; p += kWheel[i], i = (i + 1) % 8) {
        take(p);
    }
    if (rest > 1) {
        factors_.push_back({rest, 1});
    }
}

unsigned FactoredNat::exponent_of(std::uint64_t prime) const {
    for (const auto& f : factors_) {
        if (f.prime == prime) {
            return f.exponent;
        }
    }
    return 0;
}

unsigned p_adic_valuation(std::int64_t t, std::uint64_t p) {
    if (t == 0) {
        throw std::invalid_argument("p_adic_valuation: t must be nonzero");
    }
    if (p < 2) {
        throw std::invalid_argument("p_adic_valuation: p must be prime");
    }
    std::uint64_t rest = t < 0 ? 0 - static_cast<std::uint64_t>(t) : static_cast<std::uint64_t>(t);
    unsigned e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    return e;
}

std::uint64_t d_part(std::uint64_t r, std::uint64_t d) {
    if (r == 0 || d == 0) {
        throw std::invalid_argument("d_part: arguments must be positive");
    }
    // Strip from r every prime it shares with d; what was stripped is the d-part.
    std::uint64_t part = 1;
    std::uint64_t rest = r;
    for (std::uint64_t g = std::gcd(rest, d); g > 1; g = std::gcd(rest, g)) {
        rest /= g;
        part *= g;
    }
    return part;
}

std::uint64_t d_free_part(std::uint64_t r, std::uint64_t d) {
    return r / d_part(r, d);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    const FactoredNat factored(n);
    for (const auto& [p, e] : factored.factors()) {
        result = result / p * (p - 1);
    }
    return result;
}

std::uint64_t sigma(std::uint64_t n) {
    std::uint64_t result = 1;
    const FactoredNat factored(n);
    for (const auto& [p, e] : factored.factors()) {
        std::uint64_t term = 1;
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            term += power;
        }
        result *= term;
    }
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    const FactoredNat factored(n);
    for (const auto& [p, e] : factored.factors()) {
        const std::size_t existing = out.size();
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t k = 0; k < existing; ++k) {
                out.push_back(out[k] * power);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dks
