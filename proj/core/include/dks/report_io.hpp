#pragma once

/**
 * @file report_io.hpp
 * @brief CSV / JSON / text rendering of scans, decompositions and the worked example.
 *
 * Scan CSV:
 *   b,c,a,ruled_out,m1,m2
 *   100000001,1,11111124,none,0.00412345678901,0.00801234567890
 *   ...
 *   #agg,c,retained_count,m1_ge_t1_hi,m1_lt_t1_lo,m2_ge_t2_hi,m2_lt_t2_lo
 *   #agg,1,448,1.3,93.5,1.3,74.6
 *
 * m1/m2 carry 12 significant digits; aggregate percentages one decimal place
 * (empty when nothing was retained). Output depends only on the report.
 */

#include "dks/experiments.hpp"
#include "dks/knopp.hpp"

#include <iosfwd>
#include <string>

namespace dks {

inline constexpr int kRecordDigits = 12;
inline constexpr int kPercentPlaces = 1;

void write_scan_csv(std::ostream& os, const ScanReport& report);
std::string scan_json(const ScanReport& report, int indent = 2);

std::string decomposition_json(const Decomposition& dec, int indent = 2);
void write_decomposition_table(std::ostream& os, const Decomposition& dec);

void write_example_text(std::ostream& os, const ExampleReport& report);
void write_scan_summary(std::ostream& os, const ScanReport& report);

}  // namespace dks
