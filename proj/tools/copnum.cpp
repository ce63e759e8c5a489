#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "copnum/game.hpp"
#include "copnum/gp_family.hpp"
#include "copnum/solver.hpp"
#include "copnum/structure.hpp"
#include "copnum/tables.hpp"

using namespace copnum;

namespace {

struct LoadedGraph {
  std::string id;
  Graph graph;
};

// "gp:n,k" builds GP(n,k); anything else is read as a graph file.
LoadedGraph load_graph(const std::string& spec) {
  if (spec.rfind("gp:", 0) == 0) {
    int n = 0, k = 0;
    char comma = 0;
    std::istringstream in(spec.substr(3));
    if (!(in >> n >> comma >> k) || comma != ',' || !in.eof()) {
      throw std::invalid_argument("expected gp:<n>,<k>, got '" + spec + "'");
    }
    return {"gp:" + std::to_string(n) + "," + std::to_string(k), build_gp(GpParams::make(n, k))};
  }
  return {std::filesystem::path(spec).filename().string(), load_graph_file(spec)};
}

std::string join(const CopSet& cops, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(cops[i]);
  }
  return out;
}

std::string cycle_text(const Cycle& c) { return "(" + join(c) + ")"; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string classify_line(int n, int k) {
  const auto r = classify(GpParams::make(n, k));
  std::ostringstream out;
  out << n << ',' << k << ',' << r.min_k << ',' << r.computed_girth << ',' << r.predicted_girth << ','
      << r.full_exception_tags.format() << ',' << (r.cop4_guaranteed ? "true" : "false") << '\n';
  return out.str();
}

// Optimal cops against a robber who delays capture as long as possible.
void emit_strategy(const SolveResult& result) {
  if (!result.cops_win_overall()) {
    std::cout << "strategy none\n";
    return;
  }
  const Graph& g = result.graph();
  const CopSet placement = result.winning_initial_placements().front();
  std::cout << "strategy placement=" << join(placement) << '\n';
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    GameState s{placement, start, Side::Cops};
    std::string line = "(" + join(s.cops) + "|" + std::to_string(s.robber) + ")";
    const int turns = *result.capture_turns(s);
    while (!is_capture(s)) {
      s = apply(g, s, optimal_cop_move(result, s));
      line += " -> (" + join(s.cops) + "|" + std::to_string(s.robber) + ")";
      if (is_capture(s)) break;
      GameState best = s;
      int best_time = -1;
      for (const GameState& next : legal_moves(g, s)) {
        const int t = *result.capture_plies(next);
        if (t > best_time) {
          best_time = t;
          best = next;
        }
      }
      s = best;
      line += " -> (" + join(s.cops) + "|" + std::to_string(s.robber) + ")";
    }
    std::cout << "strategy robber=" << start << " turns=" << turns << " play=" << line << '\n';
  }
}

SolverConfig solver_config(const std::string& kernel, bool no_symmetry, std::uint64_t budget_mb, int max_cops) {
  SolverConfig cfg;
  cfg.kernel = kernel == "reference" ? Kernel::reference : Kernel::parallel;
  cfg.use_symmetry = !no_symmetry;
  cfg.memory_budget_bytes = budget_mb << 20;
  cfg.max_cops = max_cops;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers on generalized Petersen graphs"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Girth, isomorphism class and exception tags of GP(n,k)");
  int cl_n = 0, cl_k = 0, cl_max_n = 0;
  classify_cmd->add_option("--n", cl_n, "n");
  classify_cmd->add_option("--k", cl_k, "k");
  classify_cmd->add_option("--max-n", cl_max_n, "Every valid (n,k) up to this n");

  // scan-traps
  auto* scan_cmd = app.add_subcommand("scan-traps", "List states that are depth-trapped but not trapped");
  std::string scan_graph;
  int scan_cops = 3, scan_depth = 2;
  bool scan_all_robbers = false;
  scan_cmd->add_option("--graph", scan_graph, "Graph file or gp:n,k")->required();
  scan_cmd->add_option("--cops", scan_cops, "Number of cops");
  scan_cmd->add_option("--depth", scan_depth, "Trap depth");
  scan_cmd->add_flag("--all-robbers", scan_all_robbers, "Do not reduce robber positions by symmetry");

  // solve / copnumber share solver knobs
  std::string kernel = "parallel";
  bool no_symmetry = false;
  std::uint64_t budget_mb = 2048;
  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kernel", kernel, "parallel or reference")->check(CLI::IsMember({"parallel", "reference"}));
    cmd->add_flag("--no-symmetry", no_symmetry, "Solve the unreduced state space");
    cmd->add_option("--budget-mb", budget_mb, "Memory budget in MiB");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Decide the game for a fixed number of cops");
  std::string solve_graph;
  int solve_cops = 0, solve_cap = 4;
  bool emit = false;
  solve_cmd->add_option("--graph", solve_graph, "Graph file or gp:n,k")->required();
  solve_cmd->add_option("--cops", solve_cops, "Number of cops")->required();
  solve_cmd->add_option("--cop-cap", solve_cap, "Largest cop count accepted");
  solve_cmd->add_flag("--emit-strategy", emit, "Print optimal play from a winning placement");
  add_solver_flags(solve_cmd);

  auto* number_cmd = app.add_subcommand("copnumber", "Smallest number of cops that wins");
  std::string number_graph;
  int max_cops = 4;
  number_cmd->add_option("--graph", number_graph, "Graph file or gp:n,k")->required();
  number_cmd->add_option("--max-cops", max_cops, "Give up above this many cops");
  add_solver_flags(number_cmd);

  // detect
  auto* detect_cmd = app.add_subcommand("detect", "Pairs of 8-cycles meeting in a path of length 2");
  std::string detect_graph;
  std::size_t detect_show = 5;
  detect_cmd->add_option("--graph", detect_graph, "Graph file or gp:n,k")->required();
  detect_cmd->add_option("--show", detect_show, "Pairs to print");

  // survey-lemma51
  auto* survey_cmd = app.add_subcommand("survey-lemma51", "Compare the cycle-pair detector with the parameter families");
  int survey_max_n = 60, survey_cap = kSurveyDefaultCap;
  std::string survey_out;
  survey_cmd->add_option("--max-n", survey_max_n, "Largest n");
  survey_cmd->add_option("--cap", survey_cap, "Refuse max-n above this");
  survey_cmd->add_option("--out", survey_out, "CSV path, '-' for stdout");

  // coincidences
  auto* coinc_cmd = app.add_subcommand("coincidences", "Relations identifying distance-4 vertices");
  int co_n = 0, co_k = 0;
  std::string co_side = "A";
  coinc_cmd->add_option("--n", co_n, "n")->required();
  coinc_cmd->add_option("--k", co_k, "k")->required();
  coinc_cmd->add_option("--side", co_side, "Root ring, A or B")->check(CLI::IsMember({"A", "B"}));

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "Reproduce the cop-number tables");
  tables_cmd->require_subcommand(1);
  int appendix_max_n = 30, table2_max_n = 40, tb_threads = 0;
  std::string tb_out;
  bool tb_slow = false, tb_no_timings = false;
  auto add_table_flags = [&](CLI::App* cmd, int& max_n) {
    cmd->add_option("--max-n", max_n, "Largest n");
    cmd->add_option("--out", tb_out, "CSV path, '-' for stdout");
    cmd->add_flag("--slow", tb_slow, "Allow n above 36");
    cmd->add_option("--threads", tb_threads, "Worker threads for row solves");
    cmd->add_flag("--no-timings", tb_no_timings, "Write solve_ms as 0 for reproducible output");
  };
  auto* appendix_cmd = tables_cmd->add_subcommand("appendix", "Every valid (n,k)");
  auto* table2_cmd = tables_cmd->add_subcommand("table2", "Rows with cop number 4");
  add_table_flags(appendix_cmd, appendix_max_n);
  add_table_flags(table2_cmd, table2_max_n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      std::string out = "n,k,min_k,girth_computed,girth_predicted,tags,cop4_guaranteed\n";
      if (cl_max_n > 0) {
        for (int n = 5; n <= cl_max_n; ++n) {
          for (int k = 1; 2 * k < n; ++k) out += classify_line(n, k);
        }
      } else {
        out += classify_line(cl_n, cl_k);
      }
      std::cout << out;
      return 0;
    }

    if (*scan_cmd) {
      const auto g = load_graph(scan_graph);
      TrapScanOptions opt;
      opt.depth = scan_depth;
      opt.use_symmetry = !scan_all_robbers;
      opt.collect_hits = true;
      const auto report = scan_traps(g.graph, scan_cops, opt);
      for (const auto& hit : report.hits) {
        std::cout << "robber=" << hit.state.robber << " cops=" << join(hit.state.cops)
                  << " conforming=" << (hit.conforming ? "true" : "false") << '\n';
      }
      std::cerr << "graph=" << g.id << " robbers=" << report.robbers_scanned << " states=" << report.states_scanned
                << " hits=" << report.two_trapped_not_trapped << " conforming=" << report.conforming << '\n';
      return 0;
    }

    if (*solve_cmd) {
      const auto g = load_graph(solve_graph);
      const auto start = std::chrono::steady_clock::now();
      const auto result = cops_win(g.graph, solve_cops, solver_config(kernel, no_symmetry, budget_mb, solve_cap));
      std::cout << "graph=" << g.id << " cops=" << solve_cops
                << " cops_win=" << (result.cops_win_overall() ? "true" : "false") << " states=" << result.state_count()
                << " time_ms=" << static_cast<long long>(elapsed_ms(start)) << '\n';
      if (emit) emit_strategy(result);
      return 0;
    }

    if (*number_cmd) {
      const auto g = load_graph(number_graph);
      const auto start = std::chrono::steady_clock::now();
      const auto c = cop_number(g.graph, max_cops, solver_config(kernel, no_symmetry, budget_mb, std::max(4, max_cops)));
      std::cout << "graph=" << g.id << " cop_number=" << (c ? std::to_string(*c) : "exceeds-" + std::to_string(max_cops))
                << " time_ms=" << static_cast<long long>(elapsed_ms(start)) << '\n';
      return 0;
    }

    if (*detect_cmd) {
      const auto g = load_graph(detect_graph);
      const auto pairs = two_trap_pairs(g.graph);
      std::cout << "graph=" << g.id << " pairs=" << pairs.size() << '\n';
      for (std::size_t i = 0; i < pairs.size() && i < detect_show; ++i) {
        const auto& p = pairs[i];
        std::cout << "center=" << p.center << " shared=" << cycle_text(p.shared_path) << " a=" << cycle_text(p.cycle_a)
                  << " b=" << cycle_text(p.cycle_b) << '\n';
      }
      return 0;
    }

    if (*survey_cmd) {
      const auto survey = lemma51_survey(survey_max_n, survey_cap);
      std::string csv = "n,k,admits_two_trap,families\n";
      for (const auto& row : survey.rows) {
        csv += std::to_string(row.params.n) + "," + std::to_string(row.params.k) + "," +
               (row.admits_two_trap ? "true" : "false") + "," + row.families.format() + "\n";
      }
      write_output(survey_out, csv);
      std::cerr << "rows=" << survey.rows.size() << " necessary_violations=" << survey.necessary_violations.size()
                << " converse_gaps=" << survey.converse_gaps.size() << '\n';
      for (const auto& cov : survey.coverage) {
        std::cerr << "family " << tag_name(cov.family) << " admitting=" << cov.admitting << "/" << cov.members << '\n';
      }
      return survey.necessary_violations.empty() ? 0 : 1;
    }

    if (*coinc_cmd) {
      const auto side = co_side == "A" ? TreeSide::A : TreeSide::B;
      std::cout << "relation,satisfied,first_pair\n";
      for (const auto& c : distance4_coincidences(co_n, co_k, side)) {
        std::cout << c.relation.format() << ',' << (c.satisfied ? "true" : "false") << ','
                  << c.leaf_pairs.front().first << "=" << c.leaf_pairs.front().second << '\n';
      }
      return 0;
    }

    if (*tables_cmd) {
      const bool table2 = static_cast<bool>(*table2_cmd);
      const int max_n = table2 ? table2_max_n : appendix_max_n;
      if (max_n > 36 && !tb_slow) {
        std::cerr << "max-n above 36 belongs to the slow tier; pass --slow\n";
        return 2;
      }
      TableOptions opt;
      opt.threads = tb_threads;
      opt.record_timings = !tb_no_timings;
      if (const char* cache = std::getenv("COPNUM_CACHE"); cache && *cache) opt.cache_path = cache;
      auto rows = reproduce_appendix(max_n, opt);
      bool all_ok = true;
      for (const auto& row : rows) all_ok = all_ok && row.status == RowStatus::ok;
      if (table2) std::erase_if(rows, [](const TableRow& r) { return r.status != RowStatus::ok || r.cop_number != 4; });
      const std::string title = std::string(table2 ? "table2" : "appendix") + " max_n=" + std::to_string(max_n);
      write_output(tb_out, render_csv(rows, title));
      return all_ok ? 0 : 1;
    }
  } catch (const TheoryMismatch& e) {
    std::cerr << "theory mismatch:\n" << e.what();
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
