#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbrg/graph.hpp"
#include "mbrg/solver.hpp"
#include "mbrg/tree_profile.hpp"

namespace mbrg {

/// One claim compared against a computed value.
struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

/// Result of checking one theorem-level claim family. A failing report carries
/// a witness (graph plus the failing check) that is enough to replay it.
struct VerdictReport {
  std::string theorem;
  std::vector<Check> checks;
  nlohmann::json info = nlohmann::json::object();  // computed values with no claim attached
  nlohmann::json witness;                           // null when every check passes
  double seconds = 0.0;

  bool passed() const;
  /// Records a check; on the first failure stores `subject` as the witness.
  void expect(const std::string& name, const nlohmann::json& expected, const nlohmann::json& computed,
              const nlohmann::json& subject = nullptr);
};

nlohmann::json to_json(const VerdictReport& r);

struct VerifyOptions {
  /// Largest order on which the full game solver is run.
  int solve_max_order = 16;
  /// Random tree corpus.
  int random_trees = 200;
  int random_tree_max_order = 12;
  std::uint64_t seed = 20240607;
  /// Exhaustive sweep bound.
  int sweep_max_order = 6;
};

VerdictReport verify_tree(const Graph& tree, const VerifyOptions& opts = {});
/// Named trees plus the random corpus.
VerdictReport verify_trees(const VerifyOptions& opts = {});
VerdictReport verify_petersen(const VerifyOptions& opts = {});
VerdictReport verify_bouquet(const std::vector<int>& lengths, const VerifyOptions& opts = {});
VerdictReport verify_multipartite(const std::vector<int>& parts, const VerifyOptions& opts = {});
VerdictReport verify_grid(int s, int t, const VerifyOptions& opts = {});
VerdictReport verify_torus(int s, int t, const VerifyOptions& opts = {});
VerdictReport verify_gk(int k, const VerifyOptions& opts = {});
VerdictReport verify_small_examples(const VerifyOptions& opts = {});
/// Every labelled connected graph up to opts.sweep_max_order.
VerdictReport verify_sweep(const VerifyOptions& opts = {});

/// The default suite.
std::vector<VerdictReport> verify_all(const VerifyOptions& opts = {});

/// Calls f on every connected graph on vertices 0..n-1 (one per edge set).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& f);

/// Uniform random labelled tree on n vertices (Prüfer decoding).
Graph random_tree(int n, std::uint64_t seed);

/// Star K_{1,4} with one edge subdivided: the first-player-win example.
Graph subdivided_star();
/// The order-10 tree with three dim-pairing resolving sets: centre v joined
/// to u_1, w_1, u_2, u_3, u_4, with pendant paths u_2-w_2, u_3-w_3, u_4-v_4-w_4.
Graph pairing_example_tree();

}  // namespace mbrg
