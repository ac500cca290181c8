#include "radio/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "radio/bounds.hpp"
#include "radio/cache.hpp"
#include "radio/distance.hpp"
#include "radio/pattern.hpp"
#include "radio/pattern_io.hpp"
#include "radio/report.hpp"
#include "radio/search.hpp"
#include "radio/version.hpp"

namespace radio {

namespace {

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  // descending ranges are empty, matching the grid semantics
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<long> parse_period_list(const std::string& text) {
  std::vector<long> periods;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto [a, b] = parse_range(item);
    for (int p = a; p <= b; ++p) periods.push_back(p);
  }
  if (periods.empty()) throw std::invalid_argument("no periods in '" + text + "'");
  return periods;
}

std::vector<FamilyKind> parse_family_list(const std::string& text) {
  std::vector<FamilyKind> kinds;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    kinds.push_back(kind_from_token(item));
  }
  if (kinds.empty()) throw std::invalid_argument("no families in '" + text + "'");
  return kinds;
}

SearchConfig config_from(int prefix, std::uint64_t nodes, double seconds,
                         int threads) {
  SearchConfig config;
  config.max_prefix = prefix;
  config.node_budget = nodes;
  config.time_budget =
      std::chrono::milliseconds(std::max(1L, std::lround(seconds * 1000)));
  config.threads = threads;
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"radio k-labeling bounds for infinite distance graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  int exit_code = 0;

  // dist <family> <t> <i> <j>
  std::string d_family;
  int d_t = 0;
  long d_i = 0, d_j = 0;
  auto* dist_cmd = app.add_subcommand("dist", "exact distance between two vertices");
  dist_cmd->add_option("family", d_family)->required();
  dist_cmd->add_option("t", d_t)->required();
  dist_cmd->add_option("i", d_i)->required();
  dist_cmd->add_option("j", d_j)->required();
  dist_cmd->callback([&] {
    out << distance(family_from_token(d_family, d_t), d_i, d_j) << '\n';
  });

  // bounds <family> <t> <k>
  std::string b_family;
  int b_t = 0, b_k = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "sharpest analytic bounds for one cell");
  bounds_cmd->add_option("family", b_family)->required();
  bounds_cmd->add_option("t", b_t)->required();
  bounds_cmd->add_option("k", b_k)->required();
  bounds_cmd->callback([&] {
    BoundRecord r = best_bounds(family_from_token(b_family, b_t), b_k);
    out << "lower " << r.lower << ", upper ";
    if (r.upper)
      out << *r.upper;
    else
      out << "unknown";
    out << '\n';
  });

  // pattern build|verify
  auto* pattern_cmd = app.add_subcommand("pattern", "periodic pattern documents");
  pattern_cmd->require_subcommand(1);
  std::string pb_family, pb_out;
  int pb_t = 0, pb_k = 0;
  auto* build_cmd = pattern_cmd->add_subcommand("build", "emit a built-in pattern");
  build_cmd->add_option("family", pb_family)->required();
  build_cmd->add_option("t", pb_t)->required();
  build_cmd->add_option("k", pb_k)->required();
  build_cmd->add_option("--out", pb_out, "write to a file instead of stdout");
  build_cmd->callback([&] {
    PeriodicPattern p = build_pattern(family_from_token(pb_family, pb_t), pb_k);
    if (pb_out.empty())
      out << pattern_to_json(p) << '\n';
    else
      write_pattern_file(p, pb_out);
  });

  std::string pv_file;
  auto* verify_cmd = pattern_cmd->add_subcommand("verify", "check a pattern document");
  verify_cmd->add_option("file", pv_file)->required();
  verify_cmd->callback([&] {
    PeriodicPattern p = read_pattern_file(pv_file);
    if (auto v = verify_periodic(p))
      out << "reject i=" << v->i << " j=" << v->j << " gap=" << v->label_gap
          << " dist=" << v->dist << '\n';
    else
      out << "accept span " << p.span() << '\n';
  });

  // prove-lower <family> <t> <k> <l>
  std::string pl_family;
  int pl_t = 0, pl_k = 0, pl_prefix = 64, pl_threads = 0;
  long pl_l = 0;
  std::uint64_t pl_nodes = 10'000'000;
  double pl_time = 30.0;
  bool pl_serial = false;
  auto* prove_cmd =
      app.add_subcommand("prove-lower", "prefix exhaustion proof that rl_k > l");
  prove_cmd->add_option("family", pl_family)->required();
  prove_cmd->add_option("t", pl_t)->required();
  prove_cmd->add_option("k", pl_k)->required();
  prove_cmd->add_option("l", pl_l)->required();
  prove_cmd->add_option("--prefix", pl_prefix, "vertices to label (default 64)");
  prove_cmd->add_option("--nodes", pl_nodes, "node budget (default 1e7)");
  prove_cmd->add_option("--time", pl_time, "time budget in seconds (default 30)");
  prove_cmd->add_option("--threads", pl_threads, "worker threads (0 = default)");
  prove_cmd->add_flag("--serial", pl_serial, "use the single-threaded engine");
  prove_cmd->callback([&] {
    DistanceFamily family = family_from_token(pl_family, pl_t);
    SearchConfig config = config_from(pl_prefix, pl_nodes, pl_time, pl_threads);
    ProofOutcome outcome = pl_serial ? prove_lower_serial(family, pl_k, pl_l, config)
                                     : prove_lower(family, pl_k, pl_l, config);
    out << proof_to_json(family, pl_k, outcome) << '\n';
  });

  // find-pattern <family> <t> <k> <span>
  std::string fp_family, fp_periods;
  int fp_t = 0, fp_k = 0;
  long fp_span = 0;
  std::uint64_t fp_nodes = 10'000'000;
  double fp_time = 30.0;
  auto* find_cmd =
      app.add_subcommand("find-pattern", "search for a periodic pattern of bounded span");
  find_cmd->add_option("family", fp_family)->required();
  find_cmd->add_option("t", fp_t)->required();
  find_cmd->add_option("k", fp_k)->required();
  find_cmd->add_option("span", fp_span)->required();
  find_cmd->add_option("--periods", fp_periods, "candidate periods, e.g. 7,9..12");
  find_cmd->add_option("--nodes", fp_nodes, "node budget (default 1e7)");
  find_cmd->add_option("--time", fp_time, "time budget in seconds (default 30)");
  find_cmd->callback([&] {
    DistanceFamily family = family_from_token(fp_family, fp_t);
    SearchConfig config = config_from(64, fp_nodes, fp_time, 0);
    std::vector<long> periods = fp_periods.empty() ? default_periods(family, fp_k)
                                                   : parse_period_list(fp_periods);
    auto found = find_pattern(family, fp_k, fp_span, periods, config);
    if (found)
      out << pattern_to_json(*found) << '\n';
    else
      out << "none\n";
  });

  // table
  std::string tb_families = "consecutive,one-and-t,two-consecutive";
  std::string tb_t = "2..9", tb_k = "2..9", tb_out = "csv", tb_ref;
  double tb_budget = 30.0;
  std::uint64_t tb_nodes = 10'000'000;
  int tb_prefix = 64;
  auto* table_cmd =
      app.add_subcommand("table", "bound grid joined against the reference data");
  table_cmd->add_option("--families", tb_families, "comma-separated family list");
  table_cmd->add_option("--t", tb_t, "t range, e.g. 2..5");
  table_cmd->add_option("--k", tb_k, "k range, e.g. 2..5");
  table_cmd->add_option("--budget", tb_budget,
                        "seconds of search per cell; 0 = analytic and patterns only");
  table_cmd->add_option("--nodes", tb_nodes, "node budget per search");
  table_cmd->add_option("--prefix", tb_prefix, "prefix length for searches");
  table_cmd->add_option("--out", tb_out, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--ref", tb_ref, "alternative reference csv file");
  table_cmd->callback([&] {
    GridRequest request;
    request.families = parse_family_list(tb_families);
    std::tie(request.t_from, request.t_to) = parse_range(tb_t);
    std::tie(request.k_from, request.k_to) = parse_range(tb_k);
    request.cell_budget_seconds = tb_budget;
    request.config =
        config_from(tb_prefix, tb_nodes, tb_budget > 0 ? tb_budget : 30.0, 0);
    std::vector<ReferenceEntry> reference =
        tb_ref.empty() ? embedded_reference() : parse_reference_csv(read_file(tb_ref));
    GridReport report = run_grid(request, reference);
    out << (tb_out == "json" ? report_to_json(report) : report_to_csv(report));

    int match = 0, tighter = 0, looser = 0, conflict = 0, noref = 0, noted = 0;
    for (const GridRow& row : report.rows) {
      if (!row.note.empty()) {
        ++noted;
        if (row.note.rfind("internal conflict", 0) == 0) ++conflict;
      }
      if (!row.status) {
        ++noref;
        continue;
      }
      switch (*row.status) {
        case RowStatus::Match: ++match; break;
        case RowStatus::Tighter: ++tighter; break;
        case RowStatus::Looser: ++looser; break;
        case RowStatus::Conflict: ++conflict; break;
      }
    }
    err << "rows=" << report.rows.size() << " match=" << match
        << " tighter=" << tighter << " looser=" << looser
        << " conflict=" << conflict << " no-reference=" << noref;
    if (noted) err << " cell-errors=" << noted;
    err << '\n';
    if (conflict > 0) exit_code = 2;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal conflict: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

}  // namespace radio
