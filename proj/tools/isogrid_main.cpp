// isogrid: command-line front end for the isosceles-triangle census, the
// recurrence checks, generating-function numerators and the exact
// isosceles-free constellation search.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource refusal or overflow, 4 search budget exhausted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isogrid/census.hpp"
#include "isogrid/constellation.hpp"
#include "isogrid/errors.hpp"
#include "isogrid/genfunc.hpp"
#include "isogrid/sequences.hpp"

namespace {

using nlohmann::json;
using namespace isogrid;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kRefused = 3, kBudget = 4 };

const std::vector<std::string> kClassNames{"all", "iso", "acute", "right", "obtuse"};
const std::vector<ShapeClass> kAllClasses{ShapeClass::Iso, ShapeClass::Acute, ShapeClass::Right,
                                          ShapeClass::Obtuse};

std::vector<ShapeClass> selected_classes(const std::string& name) {
  if (name == "all") return kAllClasses;
  return {*parse_shape_class(name)};
}

std::string column_name(ShapeClass cls) {
  return cls == ShapeClass::Iso ? "total" : std::string(to_string(cls));
}

json counts_json(const CensusCounts& c) {
  return {{"total", c.total_iso}, {"acute", c.acute_iso}, {"right", c.right_iso},
          {"obtuse", c.obtuse_iso}};
}

struct CountArgs {
  std::int64_t rows = 0, cols = 0;
  std::string cls = "all", method = "apex", format = "table";
};

int run_count(const CountArgs& a, int threads) {
  const GridDims dims{a.rows, a.cols};
  const CensusCounts c = a.method == "brute" ? brute_force_census(dims) : apex_census(dims, threads);
  if (a.format == "json") {
    json j = counts_json(c);
    j["rows"] = a.rows;
    j["cols"] = a.cols;
    j["method"] = a.method;
    std::cout << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    std::cout << "rows,cols,total,acute,right,obtuse\n"
              << a.rows << ',' << a.cols << ',' << c.total_iso << ',' << c.acute_iso << ','
              << c.right_iso << ',' << c.obtuse_iso << '\n';
  } else if (a.cls == "all") {
    for (ShapeClass cls : kAllClasses) std::cout << column_name(cls) << ' ' << c.get(cls) << '\n';
  } else {
    std::cout << c.get(*parse_shape_class(a.cls)) << '\n';
  }
  return kOk;
}

struct SequenceArgs {
  std::int64_t rows = 0;
  std::string range = "1..10", cls = "iso", format = "table";
  std::int64_t offset = 1;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("k range must look like A..B, got '" + s + "'");
  }
}

int run_sequence(const SequenceArgs& a, int threads) {
  const auto [k_lo, k_hi] = parse_range(a.range);
  if (k_lo < 1 || k_hi < k_lo) throw InvalidArgument("k range must satisfy 1 <= A <= B");
  const SequenceTable table = build_table(a.rows, k_hi, threads);
  const auto classes = selected_classes(a.cls);

  if (a.format == "bfile") {
    const ShapeClass cls = a.cls == "all" ? ShapeClass::Iso : classes.front();
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      std::cout << (k - 1 + a.offset) << ' ' << table.at(k).get(cls) << '\n';
    }
  } else if (a.format == "csv") {
    std::cout << "k,total,acute,right,obtuse\n";
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      const auto& c = table.at(k);
      std::cout << k << ',' << c.total_iso << ',' << c.acute_iso << ',' << c.right_iso << ','
                << c.obtuse_iso << '\n';
    }
  } else if (a.format == "json") {
    json rows = json::array();
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      json r = counts_json(table.at(k));
      r["k"] = k;
      rows.push_back(r);
    }
    std::cout << json{{"rows", a.rows}, {"k_first", k_lo}, {"k_last", k_hi}, {"counts", rows}}.dump(2)
              << '\n';
  } else {
    std::cout << "k";
    for (ShapeClass cls : classes) std::cout << '\t' << column_name(cls);
    std::cout << '\n';
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      std::cout << k;
      for (ShapeClass cls : classes) std::cout << '\t' << table.at(k).get(cls);
      std::cout << '\n';
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::int64_t rows = 0;
  std::string theorem = "all", format = "text";
  std::int64_t kmax = 0;
};

json report_json(const RecurrenceReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"k", x.k}, {"class", to_string(x.cls)}, {"expected", x.expected},
                 {"actual", x.actual}});
  }
  json d = json::array();
  for (const auto& x : r.boundary_defects) {
    d.push_back({{"k", x.k}, {"class", to_string(x.cls)}, {"defect", x.defect}});
  }
  return {{"theorem", r.theorem_id}, {"n", r.n},           {"applicable", r.applicable},
          {"checks", r.checks},      {"k_min", r.k_min_checked}, {"k_max", r.k_max_checked},
          {"violations", v},         {"boundary_defects", d}};
}

void print_report(const RecurrenceReport& r) {
  if (!r.applicable) {
    std::cout << r.theorem_id << ": not applicable for n=" << r.n << '\n';
    return;
  }
  std::cout << r.theorem_id << ": " << (r.ok() ? "ok" : "FAIL") << " (" << r.checks
            << " checks, k " << r.k_min_checked << ".." << r.k_max_checked << ")\n";
  for (const auto& v : r.violations) {
    std::cout << "  violation k=" << v.k << " " << to_string(v.cls) << ": expected " << v.expected
              << ", actual " << v.actual << '\n';
  }
  for (const auto& d : r.boundary_defects) {
    std::cout << "  defect " << d.defect << " at k=" << d.k << " (" << to_string(d.cls) << ")\n";
  }
}

int run_verify(const VerifyArgs& a, int threads) {
  if (a.rows < 2) throw InvalidArgument("verify needs --rows >= 2");
  const std::int64_t kmax = a.kmax > 0 ? a.kmax : (a.rows - 1) * (a.rows - 1) + 8;
  const SequenceTable table = build_table(a.rows, kmax, threads);

  std::vector<std::string> ids;
  if (a.theorem == "all") {
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
  } else {
    ids.push_back(find_theorem(a.theorem).id);
  }

  bool failed = false;
  json out{{"n", a.rows}, {"kmax", kmax}, {"reports", json::array()}};
  for (const auto& id : ids) {
    const RecurrenceReport r = check_recurrence(table, id);
    failed = failed || !r.ok();
    out["reports"].push_back(report_json(r));
    if (a.format == "text") print_report(r);
  }
  if (a.theorem == "all") {
    const std::int64_t K = optimal_K(table);
    const std::int64_t expected = expected_K(a.rows);
    failed = failed || K != expected;
    out["optimal_K"] = K;
    out["expected_K"] = expected;
    if (a.format == "text") {
      std::cout << "K(" << a.rows << ") = " << K << (K == expected ? " (ok)" : " (MISMATCH, expected ")
                << (K == expected ? "" : std::to_string(expected) + ")") << '\n';
    }
  }
  out["ok"] = !failed;
  if (a.format == "json") std::cout << out.dump(2) << '\n';
  return failed ? kVerifyFailed : kOk;
}

struct GenfuncArgs {
  std::int64_t rows = 0;
  std::string cls = "iso", fixtures, format = "text";
  bool check = false;
};

int run_genfunc(const GenfuncArgs& a, int threads) {
  if (a.rows < 1) throw InvalidArgument("genfunc needs --rows >= 1");
  const auto classes = selected_classes(a.cls);
  json out{{"n", a.rows}, {"numerators", json::object()}};
  bool failed = false;

  if (a.check) {
    if (a.rows < 2 || a.rows > 8) throw InvalidArgument("--check needs --rows in [2, 8]");
    const auto fixtures = a.fixtures.empty() ? builtin_fixtures() : load_fixtures(a.fixtures);
    for (const auto& m : match_tables(a.rows, fixtures, threads)) {
      if (std::find(classes.begin(), classes.end(), m.cls) == classes.end()) continue;
      const bool pass = m.has_fixture && m.pass;
      failed = failed || !pass;
      const std::string name(to_string(m.cls));
      json diffs = json::array();
      for (const auto& d : m.diffs) {
        diffs.push_back({{"power", d.power}, {"expected", d.expected.str()},
                         {"actual", d.actual.str()}});
      }
      out["numerators"][name] = {{"coefficients", to_coefficient_string(m.computed)},
                                 {"pass", pass}, {"diffs", diffs}};
      if (a.format == "text") {
        if (classes.size() > 1) std::cout << name << ": ";
        std::cout << to_coefficient_string(m.computed) << '\n';
        std::cout << "check " << name << ": " << (pass ? "pass" : "FAIL")
                  << (m.has_fixture ? "" : " (no fixture)") << '\n';
        for (const auto& d : m.diffs) {
          std::cout << "  x^" << d.power << ": expected " << d.expected << ", got " << d.actual
                    << '\n';
        }
      }
    }
  } else {
    const std::int64_t bound = numerator_degree_bound(a.rows);
    const SequenceTable table = build_table(a.rows, bound + 9, threads);
    for (ShapeClass cls : classes) {
      const IntPolynomial p = numerator_from_sequence(table, cls, bound);
      out["numerators"][std::string(to_string(cls))] = {{"coefficients", to_coefficient_string(p)}};
      if (a.format == "text") {
        if (classes.size() > 1) std::cout << to_string(cls) << ": ";
        std::cout << to_coefficient_string(p) << '\n';
      }
    }
  }
  if (a.format == "json") std::cout << out.dump(2) << '\n';
  return failed ? kVerifyFailed : kOk;
}

struct ConstellationArgs {
  std::int64_t rows = 0, cols = 0, cap = 30;
  std::uint64_t budget = 100'000'000;
  std::string format = "text";
  bool no_seeds = false, stats = false;
};

int run_constellation(const ConstellationArgs& a, int threads) {
  SolverOptions opts;
  opts.node_budget = a.budget;
  opts.cell_cap = a.cap;
  opts.use_seeds = !a.no_seeds;
  opts.threads = threads;
  const ConstellationResult r = max_isosceles_free({a.rows, a.cols}, opts);

  if (a.format == "json") {
    json pts = json::array();
    for (const auto& p : r.witness.points) pts.push_back({p.row + 1, p.col + 1});
    json j{{"rows", a.rows},       {"cols", a.cols},   {"t_value", r.t_value},
           {"s_value", r.s_value}, {"exact", r.exact}, {"points", pts}};
    if (a.stats) {
      j["nodes_explored"] = r.nodes_explored;
      j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    }
    std::cout << j.dump(2) << '\n';
  } else {
    const std::string at = "(" + std::to_string(a.rows) + "," + std::to_string(a.cols) + ")";
    std::cout << "T" << at << " = " << r.t_value << (r.exact ? "" : " (lower bound: budget exhausted)")
              << '\n';
    std::cout << "S" << at << " = " << r.s_value << (r.exact ? "" : " (lower bound)") << '\n';
    std::cout << render_picture(r.witness);
    std::cout << "points:";
    for (const auto& p : r.witness.points) std::cout << " (" << p.row + 1 << ',' << p.col + 1 << ')';
    std::cout << '\n';
    if (a.stats) {
      std::cout << "nodes " << r.nodes_explored << ", "
                << std::chrono::duration<double>(r.elapsed).count() << " s\n";
    }
  }
  return r.exact ? kOk : kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isosceles triangles on integer grids"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)")
      ->envname("ISOGRID_THREADS")
      ->check(CLI::NonNegativeNumber);

  CountArgs count;
  auto* cmd_count = app.add_subcommand("count", "Count isosceles triangles on a grid");
  cmd_count->add_option("--rows", count.rows)->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--cols", count.cols)->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--class", count.cls)->check(CLI::IsMember(kClassNames));
  cmd_count->add_option("--method", count.method)->check(CLI::IsMember({"apex", "brute"}));
  cmd_count->add_option("--format", count.format)->check(CLI::IsMember({"table", "csv", "json"}));

  SequenceArgs seq;
  auto* cmd_seq = app.add_subcommand("sequence", "Emit a_n(k) over a range of k");
  cmd_seq->add_option("--rows", seq.rows)->required()->check(CLI::PositiveNumber);
  cmd_seq->add_option("--k", seq.range, "Range A..B of column counts");
  cmd_seq->add_option("--class", seq.cls)->check(CLI::IsMember(kClassNames));
  cmd_seq->add_option("--format", seq.format)
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
  cmd_seq->add_option("--offset", seq.offset, "b-file index of k = 1");

  VerifyArgs ver;
  auto* cmd_ver = app.add_subcommand("verify", "Check recurrence claims against the census");
  cmd_ver->add_option("--rows", ver.rows)->required()->check(CLI::PositiveNumber);
  cmd_ver->add_option("--theorem", ver.theorem, "Registry id or 'all'");
  cmd_ver->add_option("--kmax", ver.kmax, "Last k in the table (default (n-1)^2+8)");
  cmd_ver->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}));

  GenfuncArgs gf;
  auto* cmd_gf = app.add_subcommand("genfunc", "Generating-function numerator coefficients");
  cmd_gf->add_option("--rows", gf.rows)->required()->check(CLI::PositiveNumber);
  cmd_gf->add_option("--class", gf.cls)->check(CLI::IsMember(kClassNames));
  cmd_gf->add_flag("--check", gf.check, "Compare against the stored numerators");
  cmd_gf->add_option("--fixtures", gf.fixtures, "Fixture file overriding the built-in one");
  cmd_gf->add_option("--format", gf.format)->check(CLI::IsMember({"text", "json"}));

  ConstellationArgs con;
  auto* cmd_con = app.add_subcommand("constellation", "Maximum isosceles-free point set");
  cmd_con->add_option("--rows", con.rows)->required()->check(CLI::PositiveNumber);
  cmd_con->add_option("--cols", con.cols)->required()->check(CLI::PositiveNumber);
  cmd_con->add_option("--budget", con.budget, "Search node budget");
  cmd_con->add_option("--cap", con.cap, "Largest grid (cells) for exact search, at most 64");
  cmd_con->add_option("--format", con.format)->check(CLI::IsMember({"text", "json"}));
  cmd_con->add_flag("--no-seeds", con.no_seeds, "Start without incumbent constructions");
  cmd_con->add_flag("--stats", con.stats, "Print node count and elapsed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_count) return run_count(count, threads);
    if (*cmd_seq) return run_sequence(seq, threads);
    if (*cmd_ver) return run_verify(ver, threads);
    if (*cmd_gf) return run_genfunc(gf, threads);
    if (*cmd_con) return run_constellation(con, threads);
  } catch (const RecurrenceTailError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const ResourceRefused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kRefused;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
