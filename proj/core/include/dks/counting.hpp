#pragma once

/**
 * @file counting.hpp
 * @brief Multiplicity of each gcd m(r,j) = gcd((n/r) c + j d, r d).
 *
 * A(n, m) counts the pairs (r, j), r | n, 0 <= j < r, with m(r,j) = m. It is
 * computed three ways: by enumeration, by the divisor-sum formula built on
 * the unit count of residues s + k d mod r, and as the closed form n/m.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace dks {

inline constexpr std::int64_t kMaxBruteN = 10'000;

struct CountingQuery {
    std::int64_t n = 1;
    std::int64_t m = 1;
    std::int64_t c = 0;
    std::int64_t d = 1;

    /// Throws std::invalid_argument unless n >= 1, m | n, d >= 1, 0 <= c < d, gcd(c,d) = 1.
    static CountingQuery make(std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t d);
};

struct CountingResult {
    std::int64_t brute_force = 0;
    std::int64_t lemma2_formula = 0;
    std::int64_t closed_form = 0;

    bool consistent() const noexcept {
        return brute_force == lemma2_formula && lemma2_formula == closed_form;
    }
};

/// #{k mod r : gcd(s + k d, r) = 1} = (r)_d * phi((r)_d-free). Requires gcd(s,d) = 1.
std::int64_t lemma1_count(std::int64_t r, std::int64_t d, std::int64_t s);

/// A(n, m) by enumerating every (r, j). Rejects n > kMaxBruteN.
std::int64_t count_A_brute(const CountingQuery& query);

/// A(n, m) via the divisor sum over m' | r | n' with gcd(n/r, d) = delta.
std::int64_t count_A_formula(const CountingQuery& query);

CountingResult evaluate(const CountingQuery& query);

/// m -> number of pairs (r, j) with that gcd, by enumeration.
std::map<std::int64_t, std::int64_t> multiplicity_profile(std::int64_t n, std::int64_t c,
                                                          std::int64_t d);

/// A(n1 n2, m) == A(n1, gcd(m,n1)) * A(n2, gcd(m,n2)) via the formula.
/// Throws std::invalid_argument unless gcd(n1, n2) = 1 and m | n1 n2.
bool verify_lemma3(std::int64_t n1, std::int64_t n2, std::int64_t m, std::int64_t c,
                   std::int64_t d);

struct SweepOptions {
    std::int64_t max_n = 200;
    std::int64_t max_d = 50;
    bool keep_rows = false;  ///< retain every row, e.g. for CSV output
    unsigned threads = 0;    ///< 0: hardware concurrency
};

struct SweepRow {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t d = 0;
    std::int64_t c = 0;
    std::int64_t brute = 0;
    std::int64_t formula = 0;
    std::int64_t closed_form = 0;
    bool ok = false;
};

struct SweepReport {
    SweepOptions options;
    std::int64_t rows_checked = 0;
    std::vector<SweepRow> violations;  ///< ordered by (n, d, c, m)
    std::vector<SweepRow> rows;        ///< all rows when options.keep_rows, same order

    bool clean() const noexcept { return violations.empty(); }
};

/// Checks brute == formula == n/m for every n <= max_n, m | n, d <= max_d,
/// c in [0, d) coprime to d.
SweepReport verify_theorem2(const SweepOptions& options = {});

/// CSV with header n,m,d,c,brute,formula,closed_form,ok.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace dks
