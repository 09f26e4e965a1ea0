#include "dks/counting.hpp"

#include "dks/numtheory.hpp"
#include "dks/parallel.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace dks {

namespace {

std::uint64_t as_unsigned(std::int64_t v) { return static_cast<std::uint64_t>(v); }

}  // namespace

CountingQuery CountingQuery::make(std::int64_t n, std::int64_t m, std::int64_t c,
                                  std::int64_t d) {
    if (n < 1 || m < 1 || n % m != 0) {
        throw std::invalid_argument("CountingQuery: need n >= 1 and m a positive divisor of n");
    }
    if (d < 1 || c < 0 || c >= d) {
        throw std::invalid_argument("CountingQuery: need d >= 1 and 0 <= c < d");
    }
    if (gcd(c, d) != 1) {
        throw std::invalid_argument("CountingQuery: gcd(c, d) must be 1");
    }
    return CountingQuery{n, m, c, d};
}

std::int64_t lemma1_count(std::int64_t r, std::int64_t d, std::int64_t s) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("lemma1_count: r and d must be positive");
    }
    if (gcd(s, d) != 1) {
        throw std::invalid_argument("lemma1_count: gcd(s, d) must be 1");
    }
    const std::uint64_t part = d_part(as_unsigned(r), as_unsigned(d));
    return static_cast<std::int64_t>(part * euler_phi(as_unsigned(r) / part));
}

std::map<std::int64_t, std::int64_t> multiplicity_profile(std::int64_t n, std::int64_t c,
                                                          std::int64_t d) {
    if (n < 1 || n > kMaxBruteN) {
        throw std::invalid_argument("multiplicity_profile: n must lie in [1, " +
                                    std::to_string(kMaxBruteN) + "]");
    }
    if (d < 1) {
        throw std::invalid_argument("multiplicity_profile: d must be positive");
    }
    std::map<std::int64_t, std::int64_t> profile;
    for (const std::uint64_t r_u : divisors(as_unsigned(n))) {
        const auto r = static_cast<std::int64_t>(r_u);
        const std::int64_t top = (n / r) * c;
        for (std::int64_t j = 0; j < r; ++j) {
            ++profile[gcd(top + j * d, r * d)];
        }
    }
    return profile;
}

std::int64_t count_A_brute(const CountingQuery& query) {
    if (query.n > kMaxBruteN) {
        throw std::invalid_argument("count_A_brute: n exceeds enumeration limit " +
                                    std::to_string(kMaxBruteN));
    }
    std::int64_t count = 0;
    for (const std::uint64_t r_u : divisors(as_unsigned(query.n))) {
        const auto r = static_cast<std::int64_t>(r_u);
        const std::int64_t top = (query.n / r) * query.c;
        for (std::int64_t j = 0; j < r; ++j) {
            if (gcd(top + j * query.d, r * query.d) == query.m) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t count_A_formula(const CountingQuery& query) {
    const std::int64_t delta = gcd(query.m, query.d);
    const std::int64_t n_red = query.n / delta;
    const std::int64_t m_red = query.m / delta;
    const std::int64_t d_red = query.d / delta;

    std::int64_t total = 0;
    for (const std::uint64_t r_u : divisors(as_unsigned(n_red))) {
        const auto r = static_cast<std::int64_t>(r_u);
        if (r % m_red != 0 || gcd(query.n / r, query.d) != delta) {
            continue;
        }
        const std::uint64_t t = as_unsigned(r / m_red);
        const std::uint64_t part = d_part(t, as_unsigned(d_red));
        total += static_cast<std::int64_t>(part * euler_phi(t / part));
    }
    return total;
}

CountingResult evaluate(const CountingQuery& query) {
    return CountingResult{count_A_brute(query), count_A_formula(query), query.n / query.m};
}

bool verify_lemma3(std::int64_t n1, std::int64_t n2, std::int64_t m, std::int64_t c,
                   std::int64_t d) {
    if (n1 < 1 || n2 < 1 || gcd(n1, n2) != 1) {
        throw std::invalid_argument("verify_lemma3: n1 and n2 must be coprime positive integers");
    }
    const std::int64_t n = n1 * n2;
    const auto whole = CountingQuery::make(n, m, c, d);
    const auto left = CountingQuery::make(n1, gcd(m, n1), c, d);
    const auto right = CountingQuery::make(n2, gcd(m, n2), c, d);
    return count_A_formula(whole) == count_A_formula(left) * count_A_formula(right);
}

SweepReport verify_theorem2(const SweepOptions& options) {
    if (options.max_n < 1 || options.max_d < 1) {
        throw std::invalid_argument("verify_theorem2: bounds must be positive");
    }
    if (options.max_n > kMaxBruteN) {
        throw std::invalid_argument("verify_theorem2: max_n exceeds enumeration limit");
    }

    struct Cell {
        std::int64_t n;
        std::int64_t d;
    };
    std::vector<Cell> cells;
    for (std::int64_t n = 1; n <= options.max_n; ++n) {
        for (std::int64_t d = 1; d <= options.max_d; ++d) {
            cells.push_back({n, d});
        }
    }

    std::vector<std::vector<SweepRow>> per_cell(cells.size());
    parallel_for(cells.size(), options.threads, [&](std::size_t i) {
        const auto [n, d] = cells[i];
        const auto divs = divisors(as_unsigned(n));
        auto& out = per_cell[i];
        for (std::int64_t c = 0; c < d; ++c) {
            if (gcd(c, d) != 1) {
                continue;
            }
            // One enumeration per (n, d, c) serves every m.
            const auto profile = multiplicity_profile(n, c, d);
            for (const std::uint64_t m_u : divs) {
                const auto m = static_cast<std::int64_t>(m_u);
                SweepRow row{n, m, d, c, 0, 0, n / m, false};
                if (const auto it = profile.find(m); it != profile.end()) {
                    row.brute = it->second;
                }
                row.formula = count_A_formula(CountingQuery{n, m, c, d});
                row.ok = row.brute == row.formula && row.formula == row.closed_form;
                out.push_back(row);
            }
        }
    });

    SweepReport report;
    report.options = options;
    for (auto& rows : per_cell) {
        report.rows_checked += static_cast<std::int64_t>(rows.size());
        for (const auto& row : rows) {
            if (!row.ok) {
                report.violations.push_back(row);
            }
        }
        if (options.keep_rows) {
            report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        }
    }
    return report;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "n,m,d,c,brute,formula,closed_form,ok\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',' << r.d << ',' << r.c << ',' << r.brute << ',' << r.formula
           << ',' << r.closed_form << ',' << (r.ok ? "true" : "false") << '\n';
    }
}

}  // namespace dks
