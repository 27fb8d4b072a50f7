#include "onsort/report.hpp"

#include <cstdio>
#include <ostream>

namespace onsort {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void report_add(ReportDoc& doc, std::string key, const std::string& value) {
  doc.emplace_back(std::move(key), value);
}

void report_add(ReportDoc& doc, std::string key, double value) {
  doc.emplace_back(std::move(key), format_double(value));
}

void report_add(ReportDoc& doc, std::string key, std::uint64_t value) {
  doc.emplace_back(std::move(key), std::to_string(value));
}

void report_add_cost(ReportDoc& doc, const CostReport& r) {
  report_add(doc, "total_cost", r.total_cost);
  report_add(doc, "pair_count", r.pair_count);
  report_add(doc, "space_allocated", r.space_allocated);
  report_add(doc, "space_occupied", r.space_occupied);
  report_add(doc, "space_unused", r.space_unused);
  report_add(doc, "value_range", r.value_range);
  report_add(doc, "ratio_defined", std::string(r.ratio_defined ? "true" : "false"));
  if (r.ratio_defined) report_add(doc, "competitive_ratio", r.competitive_ratio);
  if (r.types) {
    report_add(doc, "type1_cost", r.types->type1);
    report_add(doc, "type2_cost", r.types->type2);
    report_add(doc, "type3_cost", r.types->type3);
    report_add(doc, "cross_tree_cost", r.types->cross_tree);
  }
  report_add(doc, "tree_count", static_cast<std::uint64_t>(r.per_tree.size()));
  for (std::size_t i = 0; i < r.per_tree.size(); ++i) {
    const auto& t = r.per_tree[i];
    const std::string prefix = "tree." + std::to_string(i) + ".";
    report_add(doc, prefix + "name", t.name);
    report_add(doc, prefix + "first_cell", t.first_cell);
    report_add(doc, prefix + "cells", t.cells);
    report_add(doc, prefix + "occupied", t.occupied);
    report_add(doc, prefix + "cost", t.cost);
  }
}

void write_report(std::ostream& out, const ReportDoc& doc) {
  for (const auto& [k, v] : doc) out << k << '=' << v << '\n';
  out << '\n';
}

}  // namespace onsort
