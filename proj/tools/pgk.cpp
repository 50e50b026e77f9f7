#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pgk/verify.hpp"

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, cap = 3, io = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::pair<pgk::u64, pgk::u64> parse_range(const std::string &text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw pgk::InvalidArgument("range '" + text + "' must look like a..b");
  auto number = [&](const std::string &tok) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || tok[0] == '-') throw pgk::InvalidArgument("range '" + text + "' has a bad bound");
    return static_cast<pgk::u64>(v);
  };
  auto a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
  if (a < 1 || a > b) throw pgk::InvalidArgument("range '" + text + "' must satisfy 1 <= a <= b");
  return {a, b};
}

std::string render_analysis(const pgk::FiniteGroup &g, const pgk::Limits &lim, const std::string &format,
                            bool with_header) {
  auto pg = pgk::build_power_graph(g);
  auto dg = pgk::build_directed_power_graph(g);
  auto inv = pgk::invariant_report(g, pg, dg, lim);
  auto st = pgk::structure_report(pg.graph, lim);
  if (format == "json") return pgk::analysis_json(g, inv, st).dump(2) + "\n";
  if (format == "text") return pgk::analysis_text(g, inv, st);
  std::string csv = pgk::analysis_csv(g, inv, st);
  return with_header ? csv : csv.substr(csv.find("\r\n") + 2);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"pgk: power graphs, directed power graphs and cyclic subgroup graphs of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  pgk::Limits lim;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--order-cap", lim.order_cap, "largest group order accepted")->envname("PGK_ORDER_CAP");
  app.add_option("--clique-budget", lim.clique_nodes, "node budget for clique, colouring and independence searches")
      ->envname("PGK_CLIQUE_BUDGET");
  app.add_option("--ham-budget", lim.hamiltonian_nodes, "node budget for the Hamiltonian cycle search")
      ->envname("PGK_HAM_BUDGET");
  app.add_option("--hole-budget", lim.hole_nodes, "node budget for hole enumeration")->envname("PGK_HOLE_BUDGET");
  app.add_option("--path-cap", lim.path_bruteforce_cap, "largest order for the exhaustive longest-path search")
      ->envname("PGK_PATH_CAP");
  app.add_option("--expansion-limit", lim.hole_expansion_limit, "largest number of holes expanded one by one")
      ->envname("PGK_EXPANSION_LIMIT");

  std::string out_path;

  auto *analyze = app.add_subcommand("analyze", "invariants and structure of one group");
  std::string spec, format = "json";
  analyze->add_option("spec", spec, "group, e.g. zn:18, prod:12x12, un:45, qn:41")->required();
  analyze->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->add_option("--out", out_path, "output file (default standard output)");

  auto *verify = app.add_subcommand("verify", "run catalogue checks on groups or a range of one family");
  std::vector<std::string> theorems, specs;
  bool all = false, timings = false;
  std::string family, range, vformat = "json";
  verify->add_option("--theorem", theorems, "theorem id (repeatable)")->allow_extra_args(false);
  verify->add_flag("--all", all, "every theorem in the catalogue");
  verify->add_option("specs", specs, "groups to check");
  verify->add_option("--family", family, "zn, un or qn (with --range)")->check(CLI::IsMember({"zn", "un", "qn"}));
  verify->add_option("--range", range, "a..b (with --family)");
  verify->add_option("--jobs", jobs, "worker threads for ranges")->envname("PGK_JOBS")->check(CLI::PositiveNumber);
  verify->add_option("--format", vformat, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timings", timings, "include elapsed milliseconds per check");
  verify->add_option("--out", out_path, "output file (default standard output)");

  auto *sweep = app.add_subcommand("sweep", "analysis rows for every group of a family over a range");
  std::string sformat = "csv";
  sweep->add_option("--family", family, "zn, un or qn")->required()->check(CLI::IsMember({"zn", "un", "qn"}));
  sweep->add_option("--range", range, "a..b")->required();
  sweep->add_option("--format", sformat, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "output file (default standard output)");

  auto *exporter = app.add_subcommand("export", "write a graph of one group as DOT");
  std::string kind = "pg", highlight = "none";
  exporter->add_option("spec", spec, "group")->required();
  exporter->add_option("--graph", kind, "pg, dpg, cg or cg-hasse")->check(CLI::IsMember({"pg", "dpg", "cg", "cg-hasse"}));
  exporter->add_option("--highlight", highlight, "pg only: mark a hole or a Hamiltonian cycle")
      ->check(CLI::IsMember({"none", "hole", "hamiltonian"}));
  exporter->add_option("--out", out_path, "output file (default standard output)");

  auto *list = app.add_subcommand("list", "print the theorem catalogue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (analyze->parsed()) {
      auto g = pgk::build_group(spec, lim.order_cap);
      emit(render_analysis(g, lim, format, true), out_path);
      return ok;
    }

    if (list->parsed()) {
      std::string text;
      for (const auto &t : pgk::catalogue()) text += std::string(t.id) + "\t" + std::string(t.statement) + "\n";
      emit(text, out_path);
      return ok;
    }

    if (verify->parsed()) {
      if (all) theorems = pgk::all_theorem_ids();
      if (theorems.empty()) throw pgk::InvalidArgument("verify needs --theorem or --all");
      if (family.empty() != range.empty()) throw pgk::InvalidArgument("--family and --range go together");
      if (family.empty() && specs.empty()) throw pgk::InvalidArgument("verify needs group specs or --family with --range");
      for (const auto &id : theorems) pgk::find_theorem(id);
      std::vector<pgk::GroupSpec> parsed;
      for (const auto &s : specs) parsed.push_back(pgk::GroupSpec::parse(s));

      std::vector<pgk::VerificationOutcome> outcomes;
      for (const auto &s : parsed) {
        auto v = pgk::run_checks(theorems, s, lim);
        outcomes.insert(outcomes.end(), v.begin(), v.end());
      }
      if (!family.empty()) {
        auto [a, b] = parse_range(range);
        auto v = pgk::run_sweep(theorems, pgk::GroupSpec::parse_family(family), a, b, jobs, lim);
        outcomes.insert(outcomes.end(), v.begin(), v.end());
      }
      emit(vformat == "json" ? pgk::verification_json(outcomes, timings).dump(2) + "\n"
                             : pgk::verification_csv(outcomes, timings),
           out_path);
      return pgk::count_statuses(outcomes).fail > 0 ? verify_failed : ok;
    }

    if (sweep->parsed()) {
      auto [a, b] = parse_range(range);
      auto fam = pgk::GroupSpec::parse_family(family);
      std::string text;
      pgk::Json rows = pgk::Json::array();
      for (pgk::u64 n = a; n <= b; ++n) {
        auto g = pgk::build_group(pgk::GroupSpec{fam, {n}}, lim.order_cap);
        if (sformat == "csv") {
          text += render_analysis(g, lim, "csv", n == a);
        } else {
          rows.push_back(pgk::Json::parse(render_analysis(g, lim, "json", false)));
        }
      }
      emit(sformat == "csv" ? text : rows.dump(2) + "\n", out_path);
      return ok;
    }

    if (exporter->parsed()) {
      auto g = pgk::build_group(spec, lim.order_cap);
      if (highlight != "none" && kind != "pg") throw pgk::InvalidArgument("--highlight applies to --graph pg only");
      std::string dot;
      if (kind == "pg") {
        auto pg = pgk::build_power_graph(g);
        std::vector<pgk::Vertex> mark;
        if (highlight == "hole") {
          auto ch = pgk::is_chordal(pg.graph);
          if (ch.hole) mark = *ch.hole;
        } else if (highlight == "hamiltonian") {
          auto h = pgk::is_hamiltonian(pg.graph, lim.hamiltonian_nodes);
          if (h.status == pgk::Tri::yes) mark = h.cycle;
        }
        dot = pgk::dot_power_graph(g, pg, mark);
      } else if (kind == "dpg") {
        dot = pgk::dot_directed_power_graph(g, pgk::build_directed_power_graph(g));
      } else {
        dot = pgk::dot_class_graph(g, pgk::CyclicClassGraph(g), kind == "cg-hasse");
      }
      emit(dot, out_path);
      return ok;
    }
  } catch (const pgk::InvalidArgument &e) {
    std::cerr << "pgk: " << e.what() << "\n";
    return usage;
  } catch (const pgk::CapExceeded &e) {
    std::cerr << "pgk: " << e.what() << "\n";
    return cap;
  } catch (const IoError &e) {
    std::cerr << "pgk: " << e.what() << "\n";
    return io;
  } catch (const std::exception &e) {
    std::cerr << "pgk: internal error: " << e.what() << "\n";
    return verify_failed;
  }
  return usage;
}
