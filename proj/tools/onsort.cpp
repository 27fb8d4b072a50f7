// Command-line harness: run one sorter over a workload and emit a report,
// sweep a parameter grid into a table, or run the verification suites.
//
// Exit codes: 0 ok, 1 parameter error, 2 invariant violation.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "onsort/doubling.hpp"
#include "onsort/oracle.hpp"
#include "onsort/report.hpp"
#include "onsort/sorters.hpp"
#include "onsort/workloads.hpp"

namespace {

using namespace onsort;

struct RunOptions {
  std::string structure;
  std::uint64_t n = 1024;
  double eps = 0.5;
  std::uint64_t alpha = 1;
  std::uint64_t beta = 1;
  double gamma = 1.0;
  std::string workload = "uniform";
  std::uint64_t seed = 1;
  double delta = 0.05;
  std::string input;
  std::string out;
  std::string sentinels = "on";
};

std::vector<double> load_values(const RunOptions& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw std::invalid_argument("cannot open input file: " + o.input);
    auto v = read_sequence(in);
    if (v.empty()) throw std::invalid_argument("input file holds no values");
    return v;
  }
  return generate(parse_workload(o.workload), o.n, o.seed, o.delta);
}

double range_cost(const CellSnapshot& s, std::uint64_t begin, std::uint64_t end,
                  std::uint64_t* occupied_out) {
  double cost = 0.0, prev = 0.0;
  std::uint64_t occupied = 0;
  for (const auto& [cell, v] : s.occupied) {
    if (cell < begin || cell >= end) continue;
    if (occupied > 0) cost += std::abs(v - prev);
    prev = v;
    ++occupied;
  }
  if (occupied_out) *occupied_out = occupied;
  return cost;
}

template <typename ClassifyFn>
TypeBreakdown classify_pairs(const CellSnapshot& s, ClassifyFn&& classify) {
  TypeBreakdown t;
  for (std::size_t i = 1; i < s.occupied.size(); ++i) {
    const auto& [ca, va] = s.occupied[i - 1];
    const auto& [cb, vb] = s.occupied[i];
    const double d = std::abs(vb - va);
    switch (classify(ca, cb)) {
      case 1: t.type1 += d; break;
      case 2: t.type2 += d; break;
      case 3: t.type3 += d; break;
      default: t.cross_tree += d; break;
    }
  }
  return t;
}

CostReport report_for_small_space(const SmallSpaceSorter& s, bool sentinels) {
  const CellSnapshot snap = s.snapshot();
  CostReport r = total_cost(snap, sentinels);
  const std::uint64_t tree_cells = std::uint64_t{1} << s.tree_height();
  for (std::size_t k = 0; k < s.tree_count(); ++k) {
    TreeCostEntry e;
    e.name = "A" + std::to_string(k);
    e.first_cell = s.tree(k).base_offset();
    e.cells = tree_cells;
    e.cost = range_cost(snap, e.first_cell, e.first_cell + e.cells, &e.occupied);
    r.per_tree.push_back(std::move(e));
  }
  r.types = classify_pairs(snap, [&](std::uint64_t a, std::uint64_t b) {
    return (a >> s.tree_height()) == (b >> s.tree_height()) ? 1 : 0;
  });
  return r;
}

CostReport report_for_ensemble(const EnsembleSorter& s, bool sentinels) {
  const CellSnapshot snap = s.snapshot();
  CostReport r = total_cost(snap, sentinels);
  const TreeEnsemble& ens = s.ensemble();
  TreeCostEntry a;
  a.name = "A";
  a.first_cell = 0;
  a.cells = ens.prefix_cell_count();
  a.cost = range_cost(snap, 0, a.cells, &a.occupied);
  r.per_tree.push_back(std::move(a));
  for (std::uint64_t i = 0; i < ens.order(); ++i) {
    TreeCostEntry b;
    b.name = "B" + std::to_string(i + 1);
    b.first_cell = ens.prefix_cell_count() + i * ens.suffix_tree_cells();
    b.cells = ens.suffix_tree_cells();
    b.cost = range_cost(snap, b.first_cell, b.first_cell + b.cells, &b.occupied);
    r.per_tree.push_back(std::move(b));
  }
  r.types = classify_pairs(snap, [&](std::uint64_t x, std::uint64_t y) {
    switch (ens.classify_adjacent(x, y)) {
      case TreeEnsemble::CostType::kType1: return 1;
      case TreeEnsemble::CostType::kType2: return 2;
      default: return 3;
    }
  });
  return r;
}

CostReport report_for_segmented(const SegmentedSorter& s, bool sentinels) {
  const CellSnapshot snap = s.snapshot();
  CostReport r = total_cost(snap, sentinels);
  const std::uint64_t tree_cells = s.tree(0).cell_count();
  for (std::size_t k = 0; k < s.tree_count(); ++k) {
    TreeCostEntry e;
    e.name = "A" + std::to_string(k + 1);
    e.first_cell = k * tree_cells;
    e.cells = tree_cells;
    e.cost = range_cost(snap, e.first_cell, e.first_cell + e.cells, &e.occupied);
    r.per_tree.push_back(std::move(e));
  }
  r.types = classify_pairs(snap, [&](std::uint64_t x, std::uint64_t y) {
    const std::uint64_t kx = x / tree_cells, ky = y / tree_cells;
    if (kx != ky) return 0;
    return s.tree(kx).cell_owner(x - kx * tree_cells) == s.tree(ky).cell_owner(y - ky * tree_cells)
               ? 1
               : 2;
  });
  return r;
}

int cmd_run(const RunOptions& o) {
  const std::vector<double> values = load_values(o);
  const std::uint64_t n = values.size();
  const bool sentinels = o.sentinels != "off";

  ReportDoc doc;
  report_add(doc, "structure", o.structure);
  report_add(doc, "n", n);
  report_add(doc, "workload", o.input.empty() ? o.workload : ("file:" + o.input));
  report_add(doc, "seed", o.seed);

  const auto t0 = std::chrono::steady_clock::now();
  CostReport cost;

  if (o.structure == "small-space") {
    SmallSpaceSorter s(n, o.eps);
    for (double x : values) s.insert(preprocess(x, n));
    report_add(doc, "eps", o.eps);
    report_add(doc, "tree_height", static_cast<std::uint64_t>(s.tree_height()));
    cost = report_for_small_space(s, sentinels);
  } else if (o.structure == "ensemble") {
    EnsembleSorter s(n, o.alpha);
    for (double x : values) s.insert(preprocess(x, n));
    report_add(doc, "alpha", s.alpha());
    report_add(doc, "rounded_n", s.rounded_capacity());
    report_add(doc, "tree_height", static_cast<std::uint64_t>(s.height()));
    cost = report_for_ensemble(s, sentinels);
  } else if (o.structure == "segmented") {
    SegmentedSorter s(n, o.beta);
    for (double x : values) s.insert(preprocess(x, n));
    report_add(doc, "beta", s.beta());
    report_add(doc, "rounded_n", s.rounded_capacity());
    report_add(doc, "tree_height", static_cast<std::uint64_t>(s.height()));
    cost = report_for_segmented(s, sentinels);
  } else if (o.structure == "doubling-eps" || o.structure == "doubling-gamma") {
    auto d = o.structure == "doubling-eps" ? DoublingSorter::small_space(n, o.eps)
                                           : DoublingSorter::gamma_space(n, o.gamma);
    for (double x : values) d.insert(x);
    if (d.variant() == DoublingVariant::kSmallSpace)
      report_add(doc, "eps", o.eps);
    else
      report_add(doc, "gamma", o.gamma);
    cost = total_cost(d.snapshot(), /*sentinels=*/false);
    const CellSnapshot snap = d.snapshot();
    report_add(doc, "bootstrap_cells", d.bootstrap_cells());
    report_add(doc, "epochs", static_cast<std::uint64_t>(d.epochs().size()));
    for (std::size_t i = 0; i < d.epochs().size(); ++i) {
      const auto& ep = d.epochs()[i];
      const std::string p = "epoch." + std::to_string(i) + ".";
      report_add(doc, p + "lo", ep.lo);
      report_add(doc, p + "hi", ep.hi);
      report_add(doc, p + "opt", ep.opt);
      report_add(doc, p + "inserted", ep.inserted);
      report_add(doc, p + "warmup", ep.warmup_written);
      report_add(doc, p + "phases", static_cast<std::uint64_t>(ep.phases.size()));
      TreeCostEntry e;
      e.name = "E" + std::to_string(i + 1);
      e.first_cell = ep.region_start;
      const std::uint64_t end =
          i + 1 < d.epochs().size() ? d.epochs()[i + 1].region_start : snap.cell_count;
      e.cells = end - ep.region_start;
      e.cost = range_cost(snap, e.first_cell, end, &e.occupied);
      cost.per_tree.push_back(std::move(e));
    }
  } else {
    throw std::invalid_argument("unknown structure: " + o.structure);
  }

  const auto wall =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  report_add(doc, "sentinels", std::string(sentinels ? "on" : "off"));
  report_add(doc, "wall_ms", static_cast<double>(wall.count()) / 1000.0);
  report_add_cost(doc, cost);

  if (o.out.empty()) {
    write_report(std::cout, doc);
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out);
    write_report(out, doc);
  }
  return 0;
}

struct SweepOptions {
  std::vector<std::uint64_t> ns;
  std::vector<double> gammas;
  std::vector<double> epss;
  std::vector<std::string> workloads;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_sweep(const SweepOptions& o) {
  if (!o.gammas.empty() && !o.epss.empty())
    throw std::invalid_argument("sweep over either --gamma or --eps, not both");
  std::ostringstream table;
  table << "n\tparam\tvalue\tworkload\tseed\tcost\tspace\tgamma_cost_product\n";
  for (std::uint64_t n : o.ns) {
    for (const std::string& wname : o.workloads) {
      const WorkloadKind kind = parse_workload(wname);
      const auto values = generate(kind, n, o.seed, 0.05);
      for (double gamma : o.gammas) {
        const StructureChoice choice = select_structure(gamma, n);
        double cost = 0.0;
        std::uint64_t space = 0;
        if (choice.regime == Regime::kEnsemble) {
          EnsembleSorter s(n, choice.parameter);
          for (double x : values) s.insert(preprocess(x, n));
          cost = total_cost(s.snapshot(), true).total_cost;
          space = s.allocated_cells();
        } else {
          SegmentedSorter s(n, choice.parameter);
          for (double x : values) s.insert(preprocess(x, n));
          cost = total_cost(s.snapshot(), true).total_cost;
          space = s.allocated_cells();
        }
        table << n << "\tgamma\t" << format_double(gamma) << '\t' << wname << '\t' << o.seed << '\t'
              << format_double(cost) << '\t' << space << '\t' << format_double(gamma * cost) << '\n';
      }
      for (double eps : o.epss) {
        SmallSpaceSorter s(n, eps);
        for (double x : values) s.insert(preprocess(x, n));
        const double cost = total_cost(s.snapshot(), true).total_cost;
        table << n << "\teps\t" << format_double(eps) << '\t' << wname << '\t' << o.seed << '\t'
              << format_double(cost) << '\t' << s.allocated_cells() << '\t'
              << format_double((1.0 + eps) * cost) << '\n';
      }
    }
  }
  if (o.out.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out);
    out << table.str();
  }
  return 0;
}

struct GenOptions {
  std::string workload = "uniform";
  std::uint64_t n = 1024;
  std::uint64_t seed = 1;
  double delta = 0.05;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  const auto values = generate(parse_workload(o.workload), o.n, o.seed, o.delta);
  if (o.out.empty()) {
    write_sequence(std::cout, values);
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + o.out);
    write_sequence(out, values);
  }
  return 0;
}

int check(bool ok, const char* what, int& failures) {
  std::cout << (ok ? "[pass] " : "[FAIL] ") << what << '\n';
  if (!ok) ++failures;
  return failures;
}

int cmd_verify(const std::string& level) {
  int failures = 0;

  // Randomized suites over a few configurations.
  for (const auto& [n, eps] : std::vector<std::pair<std::uint64_t, double>>{{256, 0.5}, {1024, 0.25}}) {
    bool disjoint_ok = true, space_ok = true, naive_ok = true;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      SmallSpaceSorter s(n, eps);
      for (double x : generate(WorkloadKind::kUniform, n, seed)) {
        s.insert(x);
        space_ok = space_ok && s.allocated_cells() <= static_cast<std::uint64_t>((1.0 + eps) * n);
      }
      disjoint_ok = disjoint_ok && oracle::check_partial_disjoint(oracle::view_of(s)).empty();
      const auto snap = s.snapshot();
      naive_ok = naive_ok && total_cost(snap, true).total_cost == oracle::naive_cost(snap, true);
    }
    std::string label = "small-space n=" + std::to_string(n);
    check(disjoint_ok, ("partial labels disjoint, " + label).c_str(), failures);
    check(space_ok, ("allocated <= (1+eps)n, " + label).c_str(), failures);
    check(naive_ok, ("objective matches naive scan, " + label).c_str(), failures);
  }

  {
    bool inserted_ok = true, lemma_ok = true;
    for (std::uint64_t alpha : {std::uint64_t{1}, std::uint64_t{4}}) {
      EnsembleSorter s(512, alpha);
      std::vector<double> log;
      for (double x : generate(WorkloadKind::kGapSplitter, 512, 1)) {
        s.insert(x);
        log.push_back(x);
      }
      inserted_ok = inserted_ok && s.inserted() == 512;
      const auto view = oracle::view_of(s.ensemble());
      lemma_ok = lemma_ok && oracle::check_space_lemma(view, log).empty() &&
                 oracle::check_cost_lemma(view, log.size()).ok();
    }
    check(inserted_ok, "ensemble accepts every element within capacity", failures);
    check(lemma_ok, "ensemble space and cost bounds", failures);
  }

  {
    SegmentedSorter s(512, 4);
    bool ok = true;
    for (double x : generate(WorkloadKind::kUniform, 512, 2)) s.insert(x);
    ok = s.inserted() == 512;
    check(ok, "segmented accepts every element within capacity", failures);
  }

  // Negative controls: each checker must fire on a corrupted fixture.
  {
    ElementaryTree t(2, DyadicInterval{});
    t.insert(0.9);
    auto view = oracle::view_of(t);
    view.labels[1] = DyadicInterval(1, 0);
    check(!oracle::check_ancestor_admissibility(view).empty(),
          "admissibility check fires on a corrupted fixture", failures);

    SmallSpaceSorter s(256, 0.5);
    for (double x : generate(WorkloadKind::kUniform, 128, 3)) s.insert(x);
    auto sv = oracle::view_of(s);
    sv.trees.push_back(sv.trees[0]);
    check(!oracle::check_partial_disjoint(sv).empty(),
          "disjointness check fires on a corrupted fixture", failures);

    TreeEnsemble ens(2, 1, DyadicInterval{});
    auto ev = oracle::view_of(ens);
    ev.prefix_nodes[0].elements = 1;
    ev.prefix_nodes[0].labels.resize(7);
    ev.prefix_nodes[0].cells.resize(4);
    check(!oracle::check_space_lemma(ev, {}).empty(),
          "space-lemma check fires on a corrupted fixture", failures);
  }

  if (level == "exhaustive") {
    for (std::uint64_t alpha : {std::uint64_t{0}, std::uint64_t{1}}) {
      const auto stats = oracle::exhaustive_space_lemma_scan(2, alpha, 8, 8);
      const std::string what = "exhaustive space lemma, alpha=" + std::to_string(alpha) + " (" +
                               std::to_string(stats.sequences) + " states)";
      check(stats.violations == 0, what.c_str(), failures);
    }
    const auto stats = oracle::exhaustive_partial_disjoint_scan(16, 1.0, 8, 8);
    const std::string what =
        "exhaustive partial disjointness (" + std::to_string(stats.sequences) + " states)";
    check(stats.violations == 0, what.c_str(), failures);
  }

  std::cout << (failures == 0 ? "verify: pass\n" : "verify: FAIL\n");
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online sorting data structures: run, sweep, verify"};
  app.require_subcommand(1);

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "run one structure over a workload");
  run_cmd->add_option("--structure", run.structure,
                      "small-space | ensemble | segmented | doubling-eps | doubling-gamma")
      ->required();
  run_cmd->add_option("--n", run.n, "number of elements");
  run_cmd->add_option("--eps", run.eps, "space slack for small-space / doubling-eps");
  run_cmd->add_option("--alpha", run.alpha, "ensemble order");
  run_cmd->add_option("--beta", run.beta, "segmented tree count");
  run_cmd->add_option("--gamma", run.gamma, "space blow-up for doubling-gamma");
  run_cmd->add_option("--workload", run.workload, "workload kind");
  run_cmd->add_option("--seed", run.seed, "workload seed");
  run_cmd->add_option("--delta", run.delta, "band width for clustered");
  run_cmd->add_option("--input", run.input, "read values from file (one per line)");
  run_cmd->add_option("--out", run.out, "write the report here instead of stdout");
  run_cmd->add_option("--sentinels", run.sentinels, "on | off")
      ->check(CLI::IsMember({"on", "off"}));

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "cross-product runs into a TSV table");
  sweep_cmd->add_option("--n", sweep.ns, "capacities")->delimiter(',');
  sweep_cmd->add_option("--gamma", sweep.gammas, "space blow-ups")->delimiter(',');
  sweep_cmd->add_option("--eps", sweep.epss, "space slacks")->delimiter(',');
  sweep_cmd->add_option("--workload", sweep.workloads, "workload kinds")->delimiter(',');
  sweep_cmd->add_option("--seed", sweep.seed, "workload seed");
  sweep_cmd->add_option("--out", sweep.out, "write the table here instead of stdout");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a workload sequence");
  gen_cmd->add_option("--workload", gen.workload, "workload kind")->required();
  gen_cmd->add_option("--n", gen.n, "sequence length");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--delta", gen.delta, "band width for clustered");
  gen_cmd->add_option("--out", gen.out, "write the sequence here instead of stdout");

  std::string level = "quick";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle suites");
  verify_cmd->add_option("--level", level, "quick | exhaustive")
      ->check(CLI::IsMember({"quick", "exhaustive"}));

  try {
    app.parse(argc, argv);
    if (*run_cmd) return cmd_run(run);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*gen_cmd) return cmd_gen(gen);
    if (*verify_cmd) return cmd_verify(level);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
