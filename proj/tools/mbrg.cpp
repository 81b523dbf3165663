// mbrg: command-line front end for the resolving-game engine.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/graph.hpp"
#include "mbrg/pairing.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/service.hpp"
#include "mbrg/solver.hpp"
#include "mbrg/verify.hpp"

using namespace mbrg;
using nlohmann::json;

namespace {

std::string set_text(VertexSet s) { return json(s.members()).dump(); }

int cmd_dim(const std::string& path, bool bases) {
  const Graph g = load_graph(path);
  require_connected(g);
  if (!bases) {
    std::cout << metric_dimension(g).dimension << "\n";
    return 0;
  }
  const auto all = enumerate_metric_bases(g);
  std::cout << all.front().size() << "\n";
  for (auto w : all) std::cout << set_text(w) << "\n";
  return 0;
}

int cmd_solve(const std::string& path, const std::string& first, bool record) {
  const Graph g = load_graph(path);
  if (record) {
    std::cout << to_json(outcome_record(g)).dump() << "\n";
  } else {
    std::cout << to_json(solve(g, parse_player(first))).dump() << "\n";
  }
  return 0;
}

int cmd_pairing(const std::string& path, bool dim_only) {
  const Graph g = load_graph(path);
  const auto p = dim_only ? find_dim_pairing(g) : find_smallest_pairing(g);
  if (!p) {
    std::cout << "none\n";
    return 0;
  }
  json labels = json::array();
  for (const auto& [u, w] : p->pairs) labels.push_back({g.label(u), g.label(w)});
  std::cout << json{{"size", p->size()}, {"pairs", to_json(*p)}, {"labels", labels}}.dump() << "\n";
  return 0;
}

int cmd_family(const std::string& kind, const std::vector<int>& params, const std::string& out) {
  const Graph g = generate({parse_family_kind(kind), params});
  if (out.empty()) {
    std::cout << to_json(g).dump() << "\n";
  } else {
    save_graph(g, out);
  }
  return 0;
}

void print_table(const std::vector<VerdictReport>& reports, bool verbose) {
  std::size_t width = 8;
  for (const auto& r : reports) width = std::max(width, r.theorem.size());
  std::cout << std::left << std::setw(6) << "result" << "  " << std::setw(static_cast<int>(width)) << "theorem"
            << "  checks   seconds\n";
  for (const auto& r : reports) {
    const auto ok = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    std::ostringstream counts;
    counts << ok << "/" << r.checks.size();
    std::cout << std::left << std::setw(6) << (r.passed() ? "PASS" : "FAIL") << "  "
              << std::setw(static_cast<int>(width)) << r.theorem << "  " << std::setw(7) << counts.str() << "  "
              << std::fixed << std::setprecision(3) << r.seconds << "\n";
    for (const auto& c : r.checks) {
      if (c.pass && !verbose) continue;
      std::cout << "        " << (c.pass ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected.dump()
                << ", computed " << c.computed.dump() << "\n";
    }
    if (!r.witness.is_null() && !verbose) std::cout << "        witness: " << r.witness.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maker-Breaker resolving game engine"};
  app.require_subcommand(1);

  std::string graph_path;
  bool want_bases = false;
  auto* dim = app.add_subcommand("dim", "Metric dimension of a graph");
  dim->add_option("graph", graph_path, "Graph JSON file")->required();
  dim->add_flag("--bases", want_bases, "Also list every metric basis");

  std::string first = "R";
  bool want_record = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the game");
  solve_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
  solve_cmd->add_option("--first", first, "First player, R or S")->check(CLI::IsMember({"R", "S", "r", "s"}));
  solve_cmd->add_flag("--record", want_record, "Solve both games and print the outcome record");

  bool dim_only = false;
  auto* pairing = app.add_subcommand("pairing", "Search for a pairing resolving set");
  pairing->add_option("graph", graph_path, "Graph JSON file")->required();
  pairing->add_flag("--dim-only", dim_only, "Only pairings with dim(G) pairs");

  std::string kind;
  std::vector<int> params;
  std::string out_path;
  auto* family = app.add_subcommand("family", "Generate a family member as graph JSON");
  family->add_option("kind", kind, "Family kind")->required();
  family->add_option("params", params, "Integer parameters");
  family->add_option("--out", out_path, "Write to this file instead of stdout");

  std::string target;
  std::vector<int> vargs;
  std::string json_path;
  bool verbose = false;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Check the theorem suite");
  verify->add_option("target", target, "all, trees, petersen, bouquet, multipartite, grid, torus, gk, sweep")
      ->required();
  verify->add_option("args", vargs, "Integer arguments for the target");
  verify->add_option("--max-n", vopts.sweep_max_order, "Largest order for sweep");
  verify->add_option("--solve-max-order", vopts.solve_max_order, "Largest order the game solver is run on");
  verify->add_option("--trees", vopts.random_trees, "Random trees in the tree corpus");
  verify->add_option("--seed", vopts.seed, "Seed for the random tree corpus");
  verify->add_option("--json", json_path, "Write the JSON report here ('-' for stdout, replacing the table)");
  verify->add_flag("-v,--verbose", verbose, "List passing checks too");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port, "Port to listen on");
  serve_cmd->add_option("--host", host, "Address to bind");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dim) return cmd_dim(graph_path, want_bases);
    if (*solve_cmd) return cmd_solve(graph_path, first, want_record);
    if (*pairing) return cmd_pairing(graph_path, dim_only);
    if (*family) return cmd_family(kind, params, out_path);
    if (*serve_cmd) return serve(host, port);
    if (*verify) {
      auto need = [&](std::size_t n) {
        if (vargs.size() != n) throw InvalidInput("verify " + target + " takes " + std::to_string(n) + " arguments");
      };
      std::vector<VerdictReport> reports;
      if (target == "all") {
        reports = verify_all(vopts);
      } else if (target == "trees") {
        reports.push_back(verify_trees(vopts));
      } else if (target == "petersen") {
        reports.push_back(verify_petersen(vopts));
      } else if (target == "bouquet") {
        reports.push_back(verify_bouquet(vargs, vopts));
      } else if (target == "multipartite") {
        reports.push_back(verify_multipartite(vargs, vopts));
      } else if (target == "grid") {
        need(2);
        reports.push_back(verify_grid(vargs[0], vargs[1], vopts));
      } else if (target == "torus") {
        need(2);
        reports.push_back(verify_torus(vargs[0], vargs[1], vopts));
      } else if (target == "gk") {
        need(1);
        reports.push_back(verify_gk(vargs[0], vopts));
      } else if (target == "sweep") {
        reports.push_back(verify_sweep(vopts));
      } else if (target == "examples") {
        reports.push_back(verify_small_examples(vopts));
      } else {
        throw InvalidInput("unknown verify target '" + target + "'");
      }
      json doc = json::array();
      for (const auto& r : reports) doc.push_back(to_json(r));
      if (json_path == "-") {
        std::cout << doc.dump(2) << "\n";
      } else {
        print_table(reports, verbose);
        if (!json_path.empty()) std::ofstream(json_path) << doc.dump(2) << "\n";
      }
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerdictReport& r) { return r.passed(); });
      return ok ? 0 : 1;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
