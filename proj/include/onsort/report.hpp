#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "onsort/evaluator.hpp"

namespace onsort {

// Flat key=value document, one pair per line, blank line terminated. Keys are
// stable; doubles round-trip at full precision.
using ReportDoc = std::vector<std::pair<std::string, std::string>>;

std::string format_double(double v);

void report_add(ReportDoc& doc, std::string key, const std::string& value);
void report_add(ReportDoc& doc, std::string key, double value);
void report_add(ReportDoc& doc, std::string key, std::uint64_t value);

// Appends the CostReport fields (total_cost, pair_count, space_*, ratio,
// per-tree and type breakdowns when present).
void report_add_cost(ReportDoc& doc, const CostReport& r);

void write_report(std::ostream& out, const ReportDoc& doc);

}  // namespace onsort
