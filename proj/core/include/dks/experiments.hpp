#pragma once

/**
 * @file experiments.hpp
 * @brief Neighbour selection, mean deviations M1/M2 and b-range scans.
 *
 * A scan walks a set of moduli b (consecutive or seeded-random), picks for
 * each c a neighbour a just inside the window q/d <= alpha/n - 1, decomposes
 * S(a,b) and records
 *
 *   M1 = mean over all sigma(n) terms of |S[r,j]/E[r,j] - 1|
 *   M2 = mean over the n terms with m(r,j) = 1 of the same quantity.
 *
 * Everything is exact until rendering; reports are independent of thread count.
 */

#include "dks/knopp.hpp"
#include "dks/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dks {

enum class BMode { consecutive, random };

enum class RuledOut { none, gcd_failed, premises_failed };

std::string_view to_string(BMode mode);
std::string_view to_string(RuledOut reason);

struct Thresholds {
    Rational t1_hi{Integer(1), Integer(20)};   ///< M1 >= 0.05
    Rational t1_lo{Integer(1), Integer(100)};  ///< M1 <  0.01
    Rational t2_hi{Integer(1), Integer(10)};   ///< M2 >= 0.1
    Rational t2_lo{Integer(1), Integer(100)};  ///< M2 <  0.01
};

/// Name of the generator behind BMode::random, echoed in every report.
inline constexpr std::string_view kGeneratorId = "mt19937_64/rejection-uniform";

struct ExperimentConfig {
    std::int64_t n = 12;
    std::int64_t d = 9;
    std::vector<std::int64_t> c_list{1};
    std::int64_t b_start = 100'000'001;
    std::int64_t b_count = 0;
    BMode b_mode = BMode::consecutive;
    std::uint64_t rng_seed = 0;
    /// Random mode draws b uniformly from [b_start, b_start + b_span).
    std::int64_t b_span = 10'000;
    Thresholds thresholds;

    /// Throws std::invalid_argument when the configuration is unusable.
    void validate() const;
};

/// The moduli a scan visits, in visiting order.
std::vector<std::int64_t> scan_moduli(const ExperimentConfig& config);

struct NeighbourChoice {
    std::optional<std::int64_t> a;
    RuledOut reason = RuledOut::none;
};

/// Tries a = F - 1, then F - 2, where F = floor(b c/d + alpha/n) is computed
/// exactly; the first candidate coprime to b that satisfies both Theorem 1
/// premises wins.
NeighbourChoice select_neighbour(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n);

/// floor(b c/d + alpha/n), exactly.
std::int64_t window_floor(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n);

struct MeanDeviations {
    Rational m1;
    Rational m2;
};

/// Throws std::invalid_argument unless dec was built with the Theorem 1 check
/// and exactly n terms have m(r,j) = 1.
MeanDeviations mean_deviations(const Decomposition& dec);

struct ScanRecord {
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::optional<std::int64_t> a;
    std::optional<Rational> m1;
    std::optional<Rational> m2;
    RuledOut ruled_out_reason = RuledOut::none;
};

struct ScanAggregate {
    std::int64_t c = 0;
    std::int64_t retained_count = 0;
    std::int64_t m1_ge_t1_hi = 0;
    std::int64_t m1_lt_t1_lo = 0;
    std::int64_t m2_ge_t2_hi = 0;
    std::int64_t m2_lt_t2_lo = 0;

    /// 100 * count / retained_count; absent when nothing was retained.
    std::optional<Rational> percentage(std::int64_t count) const;
};

struct ScanReport {
    ExperimentConfig config;
    std::string generator;
    std::vector<ScanRecord> records;      ///< ordered by (c, b-visit order)
    std::vector<ScanAggregate> aggregates; ///< one per c, in c_list order
};

/// Runs the scan on `threads` workers (0: hardware concurrency).
ScanReport run_scan(const ExperimentConfig& config, unsigned threads = 0);

struct ExampleReport {
    std::int64_t b = 31'537'789;
    std::int64_t c = 1;
    std::int64_t d = 9;
    std::int64_t a = 3'504'214;
    std::int64_t n = 12;
    Decomposition decomposition;
    Rational sum;       ///< S(a,b)
    Rational expected;  ///< E(a,b)
    std::vector<TermDeviation> deviations;
    TermDeviation max_deviation;
    Rational mean_deviation;  ///< M1
    Rational m2;
};

/// The worked configuration b = 31537789, c = 1, d = 9, a = 3504214, n = 12.
ExampleReport run_example();

}  // namespace dks
