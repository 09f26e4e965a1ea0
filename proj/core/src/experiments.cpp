#include "dks/experiments.hpp"

#include "dks/farey.hpp"
#include "dks/numtheory.hpp"
#include "dks/parallel.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace dks {

std::string_view to_string(BMode mode) {
    switch (mode) {
        case BMode::consecutive: return "consecutive";
        case BMode::random: return "random";
    }
    return "unknown";
}

std::string_view to_string(RuledOut reason) {
    switch (reason) {
        case RuledOut::none: return "none";
        case RuledOut::gcd_failed: return "gcd_failed";
        case RuledOut::premises_failed: return "premises_failed";
    }
    return "unknown";
}

void ExperimentConfig::validate() const {
    if (n < 1 || n > kMaxKnoppN) {
        throw std::invalid_argument("ExperimentConfig: n must lie in [1, " +
                                    std::to_string(kMaxKnoppN) + "]");
    }
    if (d < 1) {
        throw std::invalid_argument("ExperimentConfig: d must be positive");
    }
    for (const std::int64_t c : c_list) {
        if (c < 0 || c >= d || gcd(c, d) != 1) {
            throw std::invalid_argument("ExperimentConfig: c = " + std::to_string(c) +
                                        " must satisfy 0 <= c < d and gcd(c, d) = 1");
        }
    }
    if (b_start < 1) {
        throw std::invalid_argument("ExperimentConfig: b_start must be positive");
    }
    if (b_count < 0) {
        throw std::invalid_argument("ExperimentConfig: b_count must be nonnegative");
    }
    if (b_mode == BMode::random && b_span < 1) {
        throw std::invalid_argument("ExperimentConfig: b_span must be positive in random mode");
    }
    for (const Rational* t : {&thresholds.t1_hi, &thresholds.t1_lo, &thresholds.t2_hi,
                              &thresholds.t2_lo}) {
        if (t->sign() <= 0) {
            throw std::invalid_argument("ExperimentConfig: thresholds must be positive");
        }
    }
}

std::vector<std::int64_t> scan_moduli(const ExperimentConfig& config) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(config.b_count));
    if (config.b_mode == BMode::consecutive) {
        for (std::int64_t i = 0; i < config.b_count; ++i) {
            out.push_back(config.b_start + i);
        }
        return out;
    }
    // Uniform on [0, span) by rejecting the biased tail of the 64-bit range.
    std::mt19937_64 engine(config.rng_seed);
    const auto span = static_cast<std::uint64_t>(config.b_span);
    const std::uint64_t tail = (0 - span) % span;  // 2^64 mod span
    for (std::int64_t i = 0; i < config.b_count; ++i) {
        std::uint64_t draw = engine();
        while (draw > ~std::uint64_t{0} - tail) {
            draw = engine();
        }
        out.push_back(config.b_start + static_cast<std::int64_t>(draw % span));
    }
    return out;
}

std::int64_t window_floor(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n) {
    if (b < 1 || d < 1 || n < 1) {
        throw std::invalid_argument("window_floor: b, d and n must be positive");
    }
    // f d - b c <= sqrt(b / (n^2 d)) for integer f d - b c  <=>  f d - b c <= isqrt(floor(b / (n^2 d))).
    const Integer reach = isqrt(Integer(b) / (Integer(n) * n * d));
    const Integer top = Integer(b) * c + reach;
    Integer f = top / d;
    if (top.sign() < 0 && f * d != top) {
        f -= 1;
    }
    return f.convert_to<std::int64_t>();
}

NeighbourChoice select_neighbour(std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n) {
    const std::int64_t f = window_floor(b, c, d, n);
    bool any_coprime = false;
    for (const std::int64_t a : {f - 1, f - 2}) {
        if (gcd(a, b) != 1) {
            continue;
        }
        any_coprime = true;
        if (satisfies_theorem1_premises(b, c, d, a, n)) {
            return {a, RuledOut::none};
        }
    }
    return {std::nullopt, any_coprime ? RuledOut::premises_failed : RuledOut::gcd_failed};
}

MeanDeviations mean_deviations(const Decomposition& dec) {
    if (!dec.theorem1_checked) {
        throw std::invalid_argument("mean_deviations: decomposition was built without the Theorem 1 check");
    }
    Rational total;
    Rational unit_total;
    std::int64_t unit_terms = 0;
    for (const auto& dev : deviation_profile(dec)) {
        total += dev.deviation;
        if (dev.m == 1) {
            unit_total += dev.deviation;
            ++unit_terms;
        }
    }
    if (unit_terms != dec.n) {
        throw std::invalid_argument("mean_deviations: expected " + std::to_string(dec.n) +
                                    " terms with m = 1, found " + std::to_string(unit_terms));
    }
    const auto count = static_cast<std::int64_t>(dec.terms.size());
    return {total / Rational(count), unit_total / Rational(dec.n)};
}

std::optional<Rational> ScanAggregate::percentage(std::int64_t count) const {
    if (retained_count == 0) {
        return std::nullopt;
    }
    return Rational(Integer(100) * count, Integer(retained_count));
}

namespace {

ScanRecord scan_cell(std::int64_t b, std::int64_t c, const ExperimentConfig& config) {
    ScanRecord record;
    record.b = b;
    record.c = c;
    try {
        // Points with d^3 >= b are not Farey points for this b.
        if (Integer(config.d) * config.d * config.d >= b || b < 4) {
            record.ruled_out_reason = RuledOut::premises_failed;
            return record;
        }
        const NeighbourChoice choice = select_neighbour(b, c, config.d, config.n);
        record.ruled_out_reason = choice.reason;
        if (!choice.a) {
            return record;
        }
        const auto dec = decompose(Quadruple{*choice.a, b, c, config.d}, config.n, true);
        const auto means = mean_deviations(dec);
        record.a = choice.a;
        record.m1 = means.m1;
        record.m2 = means.m2;
    } catch (const std::exception&) {
        record.a.reset();
        record.m1.reset();
        record.m2.reset();
        record.ruled_out_reason = RuledOut::premises_failed;
    }
    return record;
}

}  // namespace

ScanReport run_scan(const ExperimentConfig& config, unsigned threads) {
    config.validate();
    ScanReport report;
    report.config = config;
    report.generator = std::string(kGeneratorId);

    const auto moduli = scan_moduli(config);
    const std::size_t per_c = moduli.size();
    report.records.resize(per_c * config.c_list.size());
    parallel_for(report.records.size(), threads, [&](std::size_t i) {
        report.records[i] = scan_cell(moduli[i % per_c], config.c_list[i / per_c], config);
    });

    const Thresholds& t = config.thresholds;
    for (std::size_t ci = 0; ci < config.c_list.size(); ++ci) {
        ScanAggregate agg;
        agg.c = config.c_list[ci];
        for (std::size_t k = 0; k < per_c; ++k) {
            const ScanRecord& rec = report.records[ci * per_c + k];
            if (!rec.a) {
                continue;
            }
            ++agg.retained_count;
            agg.m1_ge_t1_hi += *rec.m1 >= t.t1_hi;
            agg.m1_lt_t1_lo += *rec.m1 < t.t1_lo;
            agg.m2_ge_t2_hi += *rec.m2 >= t.t2_hi;
            agg.m2_lt_t2_lo += *rec.m2 < t.t2_lo;
        }
        report.aggregates.push_back(agg);
    }
    return report;
}

ExampleReport run_example() {
    ExampleReport out;
    const auto ctx = FareyContext::make(out.b, out.c, out.d, out.a);
    out.decomposition = decompose(ctx, out.n, true);
    out.sum = out.decomposition.base_sum;
    out.expected = expected_value(ctx);
    out.deviations = deviation_profile(out.decomposition);
    out.max_deviation = out.deviations.front();
    for (const auto& dev : out.deviations) {
        if (dev.deviation > out.max_deviation.deviation) {
            out.max_deviation = dev;
        }
    }
    const auto means = mean_deviations(out.decomposition);
    out.mean_deviation = means.m1;
    out.m2 = means.m2;
    return out;
}

}  // namespace dks
