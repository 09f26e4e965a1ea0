#include "dks/report_io.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>

namespace dks {

namespace {

using Json = nlohmann::ordered_json;

std::string pct(const ScanAggregate& agg, std::int64_t count) {
    const auto p = agg.percentage(count);
    return p ? p->to_fixed(kPercentPlaces) : std::string();
}

Json pct_json(const ScanAggregate& agg, std::int64_t count) {
    const auto p = agg.percentage(count);
    return p ? Json(p->to_fixed(kPercentPlaces)) : Json(nullptr);
}

Json optional_decimal(const std::optional<Rational>& value) {
    return value ? Json(value->to_significant(kRecordDigits)) : Json(nullptr);
}

Json quadruple_json(const Quadruple& q) {
    return Json{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

}  // namespace

void write_scan_csv(std::ostream& os, const ScanReport& report) {
    os << "b,c,a,ruled_out,m1,m2\n";
    for (const auto& rec : report.records) {
        os << rec.b << ',' << rec.c << ',';
        if (rec.a) {
            os << *rec.a;
        }
        os << ',' << to_string(rec.ruled_out_reason) << ',';
        if (rec.m1) {
            os << rec.m1->to_significant(kRecordDigits);
        }
        os << ',';
        if (rec.m2) {
            os << rec.m2->to_significant(kRecordDigits);
        }
        os << '\n';
    }
    os << "#agg,c,retained_count,m1_ge_t1_hi,m1_lt_t1_lo,m2_ge_t2_hi,m2_lt_t2_lo\n";
    for (const auto& agg : report.aggregates) {
        os << "#agg," << agg.c << ',' << agg.retained_count << ',' << pct(agg, agg.m1_ge_t1_hi)
           << ',' << pct(agg, agg.m1_lt_t1_lo) << ',' << pct(agg, agg.m2_ge_t2_hi) << ','
           << pct(agg, agg.m2_lt_t2_lo) << '\n';
    }
}

std::string scan_json(const ScanReport& report, int indent) {
    const ExperimentConfig& cfg = report.config;
    Json config{
        {"n", cfg.n},
        {"d", cfg.d},
        {"c_list", cfg.c_list},
        {"b_start", cfg.b_start},
        {"b_count", cfg.b_count},
        {"b_mode", std::string(to_string(cfg.b_mode))},
        {"rng_seed", cfg.rng_seed},
        {"b_span", cfg.b_span},
        {"generator", report.generator},
        {"thresholds",
         {{"t1_hi", cfg.thresholds.t1_hi.to_string()},
          {"t1_lo", cfg.thresholds.t1_lo.to_string()},
          {"t2_hi", cfg.thresholds.t2_hi.to_string()},
          {"t2_lo", cfg.thresholds.t2_lo.to_string()}}},
    };

    Json records = Json::array();
    for (const auto& rec : report.records) {
        records.push_back(Json{
            {"b", rec.b},
            {"c", rec.c},
            {"a", rec.a ? Json(*rec.a) : Json(nullptr)},
            {"m1", optional_decimal(rec.m1)},
            {"m2", optional_decimal(rec.m2)},
            {"ruled_out_reason", std::string(to_string(rec.ruled_out_reason))},
        });
    }

    Json aggregates = Json::object();
    for (const auto& agg : report.aggregates) {
        aggregates[std::to_string(agg.c)] = Json{
            {"retained_count", agg.retained_count},
            {"counts",
             {{"m1_ge_t1_hi", agg.m1_ge_t1_hi},
              {"m1_lt_t1_lo", agg.m1_lt_t1_lo},
              {"m2_ge_t2_hi", agg.m2_ge_t2_hi},
              {"m2_lt_t2_lo", agg.m2_lt_t2_lo}}},
            {"percentages",
             {{"m1_ge_t1_hi", pct_json(agg, agg.m1_ge_t1_hi)},
              {"m1_lt_t1_lo", pct_json(agg, agg.m1_lt_t1_lo)},
              {"m2_ge_t2_hi", pct_json(agg, agg.m2_ge_t2_hi)},
              {"m2_lt_t2_lo", pct_json(agg, agg.m2_lt_t2_lo)}}},
        };
    }

    Json root{{"config", config}, {"records", records}, {"aggregates", aggregates}};
    return root.dump(indent) + "\n";
}

std::string decomposition_json(const Decomposition& dec, int indent) {
    Json terms = Json::array();
    std::vector<std::optional<Rational>> deviations(dec.terms.size());
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        const auto& t = dec.terms[i];
        if (t.expected && t.expected->sign() > 0) {
            deviations[i] = (t.sum_value / *t.expected - Rational(1)).abs();
        }
    }
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        const auto& t = dec.terms[i];
        terms.push_back(Json{
            {"r", t.r},
            {"j", t.j},
            {"k", t.k},
            {"m", t.m},
            {"reduced", quadruple_json(t.reduced)},
            {"q_prime", t.q_prime},
            {"sum_value", t.sum_value.to_string()},
            {"expected", t.expected ? Json(t.expected->to_string()) : Json(nullptr)},
            {"deviation", deviations[i] ? Json(deviations[i]->to_string()) : Json(nullptr)},
        });
    }
    const IdentityCheck identity = verify_identity(dec);
    Json root{
        {"n", dec.n},
        {"base", quadruple_json(dec.base)},
        {"q", dec.q},
        {"base_sum", dec.base_sum.to_string()},
        {"base_expected", dec.base_expected ? Json(dec.base_expected->to_string()) : Json(nullptr)},
        {"require_theorem1", dec.theorem1_checked},
        {"identity_holds", identity.holds},
        {"terms", terms},
    };
    return root.dump(indent) + "\n";
}

void write_decomposition_table(std::ostream& os, const Decomposition& dec) {
    os << "n = " << dec.n << ", base (a, b, c, d) = (" << dec.base.a << ", " << dec.base.b << ", "
       << dec.base.c << ", " << dec.base.d << "), q = " << dec.q << '\n';
    os << "S(a,b) = " << dec.base_sum << " ~ " << dec.base_sum.to_fixed(6) << '\n';
    if (dec.base_expected) {
        os << "E(a,b) = " << *dec.base_expected << " ~ " << dec.base_expected->to_fixed(6) << '\n';
    }
    os << std::setw(5) << "r" << std::setw(5) << "j" << std::setw(6) << "k" << std::setw(6) << "m"
       << std::setw(14) << "a'" << std::setw(14) << "b'" << std::setw(8) << "c'" << std::setw(8)
       << "d'" << std::setw(20) << "S[r,j]" << std::setw(20) << "E[r,j]" << std::setw(16)
       << "deviation" << '\n';
    for (const auto& t : dec.terms) {
        os << std::setw(5) << t.r << std::setw(5) << t.j << std::setw(6) << t.k << std::setw(6)
           << t.m << std::setw(14) << t.reduced.a << std::setw(14) << t.reduced.b << std::setw(8)
           << t.reduced.c << std::setw(8) << t.reduced.d << std::setw(20)
           << t.sum_value.to_fixed(6) << std::setw(20)
           << (t.expected ? t.expected->to_fixed(6) : std::string("-")) << std::setw(16);
        if (t.expected && t.expected->sign() > 0) {
            os << (t.sum_value / *t.expected - Rational(1)).abs().to_fixed(8);
        } else {
            os << "-";
        }
        os << '\n';
    }
    const IdentityCheck identity = verify_identity(dec);
    os << "sum of S[r,j] = " << identity.lhs.to_fixed(6) << ", sigma(n) S(a,b) = "
       << identity.rhs.to_fixed(6) << ", identity " << (identity.holds ? "holds" : "FAILS")
       << '\n';
}

void write_example_text(std::ostream& os, const ExampleReport& report) {
    os << "b = " << report.b << ", c = " << report.c << ", d = " << report.d
       << ", a = " << report.a << ", n = " << report.n << ", q = " << report.decomposition.q
       << '\n';
    os << "S(a,b) = " << report.sum << '\n';
    os << "       ~ " << report.sum.to_fixed(3) << '\n';
    os << "E(a,b) = " << report.expected << " ~ " << report.expected.to_fixed(3) << '\n';
    os << "terms  = " << report.decomposition.terms.size() << '\n';
    os << std::setw(5) << "r" << std::setw(5) << "j" << std::setw(6) << "m" << std::setw(14)
       << "E[r,j]/E" << std::setw(20) << "S[r,j]" << std::setw(14) << "deviation" << '\n';
    for (std::size_t i = 0; i < report.deviations.size(); ++i) {
        const auto& t = report.decomposition.terms[i];
        const Rational ratio = *t.expected / report.expected;
        os << std::setw(5) << t.r << std::setw(5) << t.j << std::setw(6) << t.m << std::setw(14)
           << ratio.to_string() << std::setw(20) << t.sum_value.to_fixed(3) << std::setw(14)
           << report.deviations[i].deviation.to_fixed(6) << '\n';
    }
    os << "max deviation  = " << report.max_deviation.deviation.to_fixed(5) << " at (r, j) = ("
       << report.max_deviation.r << ", " << report.max_deviation.j << ")\n";
    os << "mean deviation = " << report.mean_deviation.to_fixed(4) << " (M1)\n";
    os << "M2             = " << report.m2.to_fixed(4) << '\n';
    os << "identity       : " << (verify_identity(report.decomposition).holds ? "holds" : "FAILS")
       << '\n';
}

void write_scan_summary(std::ostream& os, const ScanReport& report) {
    const auto& cfg = report.config;
    os << "n = " << cfg.n << ", d = " << cfg.d << ", b_start = " << cfg.b_start
       << ", b_count = " << cfg.b_count << ", mode = " << to_string(cfg.b_mode);
    if (cfg.b_mode == BMode::random) {
        os << " (seed " << cfg.rng_seed << ", span " << cfg.b_span << ", " << report.generator
           << ")";
    }
    os << '\n';
    os << std::setw(6) << "c" << std::setw(10) << "retained" << std::setw(12) << "M1>=t1hi"
       << std::setw(12) << "M1<t1lo" << std::setw(12) << "M2>=t2hi" << std::setw(12) << "M2<t2lo"
       << '\n';
    for (const auto& agg : report.aggregates) {
        auto cell = [&](std::int64_t count) {
            const auto p = agg.percentage(count);
            return p ? p->to_fixed(kPercentPlaces) + " %" : std::string("-");
        };
        os << std::setw(6) << agg.c << std::setw(10) << agg.retained_count << std::setw(12)
           << cell(agg.m1_ge_t1_hi) << std::setw(12) << cell(agg.m1_lt_t1_lo) << std::setw(12)
           << cell(agg.m2_ge_t2_hi) << std::setw(12) << cell(agg.m2_lt_t2_lo) << '\n';
    }
}

}  // namespace dks
