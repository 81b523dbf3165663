#include "mbrg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/pairing.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/twins.hpp"

namespace mbrg {

using nlohmann::json;

bool VerdictReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerdictReport::expect(const std::string& name, const json& expected, const json& computed, const json& subject) {
  Check c{name, expected, computed, expected == computed};
  if (!c.pass && witness.is_null()) {
    witness = {{"check", name}, {"expected", expected}, {"computed", computed}};
    if (!subject.is_null()) witness["subject"] = subject;
  }
  checks.push_back(std::move(c));
}

json to_json(const VerdictReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  }
  return {{"theorem", r.theorem}, {"passed", r.passed()}, {"seconds", r.seconds},
          {"checks", checks},     {"info", r.info},         {"witness", r.witness}};
}

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json set_json(VertexSet s) { return s.members(); }

json sets_json(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (auto s : sets) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string outcome_str(Outcome o) { return std::string(1, outcome_code(o)); }

json record_json(const OutcomeRecord& r) { return to_json(r); }

VertexSet labelled(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* n : names) out.insert(g.vertex(n));
  return out;
}

// Shared outcome checks: the predicted class plus the move counts that go
// with it. Each argument left empty is not checked.
void expect_record(VerdictReport& r, const std::string& prefix, const OutcomeRecord& rec, Outcome predicted,
                   std::optional<int> r_moves, std::optional<int> s_moves, const json& subject) {
  r.expect(prefix + "outcome", outcome_str(predicted), outcome_str(rec.outcome), subject);
  if (r_moves) {
    r.expect(prefix + "r_mb", *r_moves, opt_json(rec.r_mb), subject);
    if (predicted == Outcome::R) r.expect(prefix + "r_mb_s", *r_moves, opt_json(rec.r_mb_s), subject);
  }
  if (s_moves) {
    if (predicted == Outcome::S) r.expect(prefix + "s_mb", *s_moves, opt_json(rec.s_mb), subject);
    r.expect(prefix + "s_mb_s", *s_moves, opt_json(rec.s_mb_s), subject);
  }
}

template <typename F>
VerdictReport timed(std::string theorem, F&& body) {
  Timer t;
  VerdictReport r;
  r.theorem = std::move(theorem);
  body(r);
  r.seconds = t.seconds();
  return r;
}

SolverOptions solver_opts(const VerifyOptions& o) {
  SolverOptions s;
  s.max_order = o.solve_max_order;
  return s;
}

// Outcome predicted for a tree from its exterior major vertices with two or
// more terminal leaves: counts of adjacent terminal leaves decide it.
Outcome predicted_tree_outcome(const TreeProfile& p) {
  int threes = 0;
  for (const auto& em : p.exterior) {
    if (em.terminal_degree() < 2) continue;
    if (em.adjacent_leaf_count >= 4) return Outcome::S;
    if (em.adjacent_leaf_count == 3) ++threes;
  }
  if (threes >= 2) return Outcome::S;
  if (threes == 1) return Outcome::N;
  return Outcome::R;
}

Outcome predicted_multipartite_outcome(const std::vector<int>& parts) {
  const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  const int big = *std::max_element(parts.begin(), parts.end());
  const int threes = static_cast<int>(std::count(parts.begin(), parts.end(), 3));
  if (s >= 4 || big >= 4 || (s == 3 && threes >= 1) || threes >= 2) return Outcome::S;
  if ((s == 3 && big <= 2) || (s <= 2 && threes == 1)) return Outcome::N;
  return Outcome::R;
}

Outcome predicted_bouquet_outcome(int z) {
  if (z <= 2) return Outcome::R;
  if (z == 3) return Outcome::N;
  return Outcome::S;
}

// Counters only, so a corpus of hundreds of trees stays readable.
struct TreeTally {
  int trees = 0;
  int dim_mismatch = 0;
  int basis_mismatch = 0;
  int terminal_sum_mismatch = 0;
  int outcome_mismatch = 0;
  int count_mismatch = 0;
  int pairing_mismatch = 0;
  json first_failure;
};

void check_tree(const Graph& tree, const VerifyOptions& opts, TreeTally& tally) {
  ++tally.trees;
  auto fail = [&](int& counter, const char* what) {
    ++counter;
    if (tally.first_failure.is_null()) tally.first_failure = {{"check", what}, {"graph", to_json(tree)}};
  };
  if (is_path_graph(tree)) {
    if (metric_dimension(tree).dimension != 1) fail(tally.dim_mismatch, "path dimension");
    return;
  }
  const TreeProfile p = tree_profile(tree);
  int terminal_sum = 0;
  for (const auto& em : p.exterior) terminal_sum += em.terminal_degree();
  if (terminal_sum != p.sigma()) fail(tally.terminal_sum_mismatch, "terminal degrees sum to the leaf count");

  const int predicted_dim = p.sigma() - p.ex();
  const auto bases = enumerate_metric_bases(tree);
  const int dim = bases.front().size();
  if (dim != predicted_dim) fail(tally.dim_mismatch, "dim = sigma - ex");

  std::vector<VertexSet> characterized;
  for_each_k_subset(tree.order(), dim, [&](VertexSet w) {
    if (satisfies_tree_basis_characterization(p, w)) characterized.push_back(w);
    return true;
  });
  if (sets_json(bases) != sets_json(characterized)) fail(tally.basis_mismatch, "bases match the characterization");

  const Outcome predicted = predicted_tree_outcome(p);
  if (predicted == Outcome::R) {
    const PairingSet ps = tree_pairing(tree);
    if (ps.size() != dim || !is_pairing_resolving(tree, ps)) fail(tally.pairing_mismatch, "tree pairing");
  }
  if (tree.order() > opts.solve_max_order) return;
  const OutcomeRecord rec = outcome_record(tree, solver_opts(opts));
  if (rec.outcome != predicted) {
    fail(tally.outcome_mismatch, "outcome trichotomy");
    return;
  }
  bool ok = true;
  switch (predicted) {
    case Outcome::R:
      ok = rec.r_mb == dim && rec.r_mb_s == dim;
      break;
    case Outcome::S:
      ok = rec.s_mb == 2 && rec.s_mb_s == 2;
      break;
    case Outcome::N:
      ok = rec.r_mb == dim && rec.s_mb_s == 2;
      break;
  }
  if (!ok) fail(tally.count_mismatch, "move counts");
}

void report_tally(VerdictReport& r, const TreeTally& t) {
  r.info["trees_checked"] = t.trees;
  r.expect("dim = sigma - ex (mismatches)", 0, t.dim_mismatch, t.first_failure);
  r.expect("terminal degrees sum to sigma (mismatches)", 0, t.terminal_sum_mismatch, t.first_failure);
  r.expect("basis enumeration = characterization (mismatches)", 0, t.basis_mismatch, t.first_failure);
  r.expect("tree pairing resolves (mismatches)", 0, t.pairing_mismatch, t.first_failure);
  r.expect("outcome trichotomy (mismatches)", 0, t.outcome_mismatch, t.first_failure);
  r.expect("move counts (mismatches)", 0, t.count_mismatch, t.first_failure);
}

}  // namespace

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("random_tree needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return Graph::build(n, edges);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph::build(n, edges);
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& f) {
  if (n < 2 || n > 8) throw InvalidInput("for_each_connected_graph supports 2 <= n <= 8");
  std::vector<Edge> all;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) all.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << all.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    edges.clear();
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    const Graph g = Graph::build(n, edges);
    if (is_connected(g)) f(g);
  }
}

Graph subdivided_star() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}};
  return Graph::build(6, edges, {"b", "b_1", "b_2", "b_3", "b_4", "b_5"});
}

Graph pairing_example_tree() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}};
  return Graph::build(10, edges, {"v", "u_1", "w_1", "u_2", "w_2", "u_3", "w_3", "u_4", "v_4", "w_4"});
}

VerdictReport verify_tree(const Graph& tree, const VerifyOptions& opts) {
  return timed("trees", [&](VerdictReport& r) {
    TreeTally t;
    check_tree(tree, opts, t);
    report_tally(r, t);
  });
}

VerdictReport verify_trees(const VerifyOptions& opts) {
  return timed("trees", [&](VerdictReport& r) {
    const SolverOptions so = solver_opts(opts);
    // Named trees with their stated outcomes.
    const Graph k13 = generate({FamilyKind::Star, {3}});
    const Graph k14 = generate({FamilyKind::Star, {4}});
    const Graph spider = generate({FamilyKind::Spider, {2, 2, 2}});
    expect_record(r, "K_{1,3}: ", outcome_record(k13, so), Outcome::N, 2, 2, to_json(k13));
    expect_record(r, "K_{1,4}: ", outcome_record(k14, so), Outcome::S, std::nullopt, 2, to_json(k14));
    r.expect("spider(2,2,2): dim", 2, metric_dimension(spider).dimension, to_json(spider));
    expect_record(r, "spider(2,2,2): ", outcome_record(spider, so), Outcome::R, 2, std::nullopt, to_json(spider));

    const Graph fig = pairing_example_tree();
    r.expect("order-10 tree: dim", 4, metric_dimension(fig).dimension, to_json(fig));
    const std::vector<std::vector<std::pair<const char*, const char*>>> pairings{
        {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"u_4", "w_4"}},
        {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"v_4", "w_4"}},
        {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"u_4", "v_4"}},
    };
    for (std::size_t i = 0; i < pairings.size(); ++i) {
      PairingSet ps;
      for (const auto& [a, b] : pairings[i]) ps.pairs.emplace_back(fig.vertex(a), fig.vertex(b));
      r.expect("order-10 tree: pairing " + std::to_string(i + 1) + " resolves", true, is_pairing_resolving(fig, ps),
               to_json(fig));
    }
    expect_record(r, "order-10 tree: ", outcome_record(fig, so), Outcome::R, 4, std::nullopt, to_json(fig));

    TreeTally t;
    for (const Graph* g : {&k13, &k14, &spider, &fig}) check_tree(*g, opts, t);
    check_tree(subdivided_star(), opts, t);
    std::mt19937_64 seeds(opts.seed);
    std::uniform_int_distribution<int> order(4, opts.random_tree_max_order);
    for (int i = 0; i < opts.random_trees; ++i) {
      const int n = order(seeds);
      check_tree(random_tree(n, seeds()), opts, t);
    }
    report_tally(r, t);
  });
}

VerdictReport verify_petersen(const VerifyOptions& opts) {
  return timed("petersen", [&](VerdictReport& r) {
    const Graph g = generate({FamilyKind::Petersen, {}});
    const json subject = to_json(g);
    const auto bases = enumerate_metric_bases(g);
    r.expect("dim", 3, bases.front().size(), subject);
    r.info["basis_count"] = bases.size();

    const std::vector<VertexSet> expected{
        labelled(g, {"u_1", "w_2", "w_3"}), labelled(g, {"u_1", "u_4", "w_2"}), labelled(g, {"u_1", "w_4", "w_5"}),
        labelled(g, {"u_1", "u_3", "w_5"}), labelled(g, {"u_1", "u_4", "w_3"}), labelled(g, {"u_1", "u_3", "w_4"}),
    };
    std::vector<VertexSet> with_u1;
    bool edgeless = true;
    for (auto w : bases) {
      if (w.contains(g.vertex("u_1"))) with_u1.push_back(w);
      w.for_each([&](int v) { edgeless = edgeless && !g.neighbors(v).intersects(w); });
    }
    r.expect("bases containing u_1", sets_json(expected), sets_json(with_u1), subject);
    r.expect("every basis is edgeless", true, edgeless, subject);

    // Code vectors for W_1 = (u_1, w_2, w_3).
    const DistanceMatrix d = all_pairs_distances(g);
    const std::vector<int> w1{g.vertex("u_1"), g.vertex("w_2"), g.vertex("w_3")};
    const std::vector<std::pair<const char*, CodeVector>> codes{
        {"u_2", {1, 1, 2}}, {"u_3", {2, 2, 1}}, {"u_4", {2, 2, 2}}, {"u_5", {1, 2, 2}},
        {"w_1", {1, 2, 1}}, {"w_4", {2, 1, 2}}, {"w_5", {2, 1, 1}},
    };
    for (const auto& [name, code] : codes) {
      r.expect(std::string("code of ") + name + " wrt (u_1,w_2,w_3)", code, code_vector(d, w1, g.vertex(name)),
               subject);
    }

    const SolverOptions so = solver_opts(opts);
    const GameValue rf = solve(g, Player::Resolver, so);
    const GameValue sf = solve(g, Player::Spoiler, so);
    r.expect("Resolver first", json{{"winner", "R"}, {"moves", 3}},
             json{{"winner", std::string(1, player_code(rf.winner))}, {"moves", rf.winner_moves}}, subject);
    r.expect("Spoiler first", json{{"winner", "R"}, {"moves", 3}},
             json{{"winner", std::string(1, player_code(sf.winner))}, {"moves", sf.winner_moves}}, subject);
    const auto pairing = find_dim_pairing(g);
    r.info["dim_pairing"] = pairing ? to_json(*pairing) : json(nullptr);
  });
}

VerdictReport verify_bouquet(const std::vector<int>& lengths, const VerifyOptions& opts) {
  std::string name = "bouquet(";
  for (std::size_t i = 0; i < lengths.size(); ++i) name += (i ? "," : "") + std::to_string(lengths[i]);
  name += ")";
  return timed(name, [&](VerdictReport& r) {
    const FamilySpec spec{FamilyKind::Bouquet, lengths};
    const Graph g = generate(spec);
    const json subject = to_json(g);
    const BouquetProfile bp = bouquet_profile(spec);
    const int predicted_dim = bp.x == 0 ? bp.m : bp.m + bp.x - 1;
    const auto bases = enumerate_metric_bases(g);
    const int dim = bases.front().size();
    r.expect("dim", predicted_dim, dim, subject);
    r.info["basis_count"] = bases.size();

    // Every basis meets each path P^i, and any two even paths together at
    // least three times.
    int bad = 0;
    for (auto w : bases) {
      std::vector<int> hits;
      for (const auto& c : bp.cycles) hits.push_back((w & VertexSet::from(c.path)).size());
      for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] == 0) ++bad;
        for (std::size_t j = i + 1; j < hits.size(); ++j) {
          if (bp.cycles[i].length % 2 == 0 && bp.cycles[j].length % 2 == 0 && hits[i] + hits[j] < 3) ++bad;
        }
      }
    }
    r.expect("bases meet every path, two even paths at least 3 times (violations)", 0, bad, subject);

    const Outcome predicted = predicted_bouquet_outcome(bp.z);
    if (bp.z <= 2) {
      const PairingSet ps = construct_family_pairing(spec);
      r.expect("pairing size = dim", dim, ps.size(), subject);
      r.expect("pairing resolves", true, is_pairing_resolving(g, ps), subject);
    }
    if (g.order() <= opts.solve_max_order) {
      const OutcomeRecord rec = outcome_record(g, solver_opts(opts));
      r.info["record"] = record_json(rec);
      if (predicted == Outcome::R) expect_record(r, "", rec, predicted, dim, std::nullopt, subject);
      if (predicted == Outcome::S) expect_record(r, "", rec, predicted, std::nullopt, 4, subject);
      if (predicted == Outcome::N) r.expect("outcome", "N", outcome_str(rec.outcome), subject);
    } else {
      r.info["predicted_outcome"] = outcome_str(predicted);
    }
  });
}

VerdictReport verify_multipartite(const std::vector<int>& parts, const VerifyOptions& opts) {
  std::string name = "K_{";
  for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "," : "") + std::to_string(parts[i]);
  name += "}";
  return timed(name, [&](VerdictReport& r) {
    const FamilySpec spec{FamilyKind::CompleteMultipartite, parts};
    const Graph g = generate(spec);
    const json subject = to_json(g);
    const int n = g.order();
    const int k = static_cast<int>(parts.size());
    const int s = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    const int predicted_dim = s == 0 ? n - k : n + s - k - 1;
    const int dim = metric_dimension(g).dimension;
    r.expect("dim", predicted_dim, dim, subject);
    const Outcome predicted = predicted_multipartite_outcome(parts);
    if (predicted == Outcome::R) {
      const PairingSet ps = construct_family_pairing(spec);
      r.expect("pairing size = dim", dim, ps.size(), subject);
      r.expect("pairing resolves", true, is_pairing_resolving(g, ps), subject);
    }
    if (n <= opts.solve_max_order) {
      const OutcomeRecord rec = outcome_record(g, solver_opts(opts));
      r.info["record"] = record_json(rec);
      switch (predicted) {
        case Outcome::R:
          expect_record(r, "", rec, predicted, dim, std::nullopt, subject);
          break;
        case Outcome::S:
          expect_record(r, "", rec, predicted, std::nullopt, 2, subject);
          break;
        case Outcome::N:
          r.expect("outcome", "N", outcome_str(rec.outcome), subject);
          break;
      }
    } else {
      r.info["predicted_outcome"] = outcome_str(predicted);
    }
  });
}

VerdictReport verify_grid(int s, int t, const VerifyOptions& opts) {
  return timed("grid(" + std::to_string(s) + "," + std::to_string(t) + ")", [&](VerdictReport& r) {
    const FamilySpec spec{FamilyKind::Grid, {s, t}};
    const Graph g = generate(spec);
    const json subject = to_json(g);
    const auto bases = enumerate_metric_bases(g);
    r.expect("dim", 2, bases.front().size(), subject);
    auto id = [t](int i, int j) { return i * t + j; };
    const int c11 = id(0, 0), c1t = id(0, t - 1), cs1 = id(s - 1, 0), cst = id(s - 1, t - 1);
    const std::vector<VertexSet> corners{
        VertexSet::from(std::vector<int>{c11, c1t}), VertexSet::from(std::vector<int>{c11, cs1}),
        VertexSet::from(std::vector<int>{c1t, cst}), VertexSet::from(std::vector<int>{cs1, cst})};
    r.expect("bases are the four corner pairs", sets_json(corners), sets_json(bases), subject);
    const PairingSet ps = construct_family_pairing(spec);
    r.expect("corner pairing resolves", true, is_pairing_resolving(g, ps), subject);
    if (g.order() <= opts.solve_max_order) {
      expect_record(r, "", outcome_record(g, solver_opts(opts)), Outcome::R, 2, std::nullopt, subject);
    }
  });
}

VerdictReport verify_torus(int s, int t, const VerifyOptions& opts) {
  return timed("torus(" + std::to_string(s) + "," + std::to_string(t) + ")", [&](VerdictReport& r) {
    const FamilySpec spec{FamilyKind::Torus, {s, t}};
    const Graph g = generate(spec);
    const json subject = to_json(g);
    const bool even = s % 2 == 0 && t % 2 == 0;
    const int predicted = even ? 4 : 3;
    const auto bases = enumerate_metric_bases(g);
    const int dim = bases.front().size();
    r.expect("dim", predicted, dim, subject);
    r.info["basis_count"] = bases.size();
    const ResolvingOracle oracle(g);
    auto id = [s, t](int i, int j) { return ((i % s) + s) % s * t + ((j % t) + t) % t; };

    if (!even) {
      // x, a vertex diametral to x in x's odd cycle copy, and a neighbour of x
      // in the other cycle copy; every such choice resolves.
      bool all = true;
      if (s % 2 == 1) {
        for (int y : {s / 2, s / 2 + 1})
          for (int z : {1, -1}) all = all && oracle.resolves(VertexSet::from(std::vector<int>{id(0, 0), id(y, 0), id(0, z)}));
      } else {
        for (int y : {t / 2, t / 2 + 1})
          for (int z : {1, -1}) all = all && oracle.resolves(VertexSet::from(std::vector<int>{id(0, 0), id(0, y), id(z, 0)}));
      }
      r.expect("explicit 3-vertex bases resolve", true, all, subject);
    } else {
      const std::vector<int> w{id(0, 0), id(s / 2, 0), id(1, 0), id(0, 1)};
      r.expect("explicit 4-vertex basis resolves", true, oracle.resolves(VertexSet::from(w)), subject);
      // Swapping any basis vertex for its antipode keeps it resolving.
      int failures = 0;
      auto antipode = [&](int v) { return id(v / t + s / 2, v % t + t / 2); };
      for (auto basis : bases) {
        basis.for_each([&](int u) {
          VertexSet swapped = basis;
          swapped.erase(u);
          swapped.insert(antipode(u));
          if (!oracle.resolves(swapped)) ++failures;
        });
      }
      r.expect("antipodal swap keeps every basis resolving (failures)", 0, failures, subject);
      const PairingSet ps = construct_family_pairing(spec);
      r.expect("antipodal pairing resolves", true, is_pairing_resolving(g, ps), subject);
    }
    if (g.order() <= opts.solve_max_order) {
      expect_record(r, "", outcome_record(g, solver_opts(opts)), Outcome::R, dim, std::nullopt, subject);
    } else {
      r.info["solve"] = "skipped: order above solve_max_order";
    }
  });
}

VerdictReport verify_gk(int k, const VerifyOptions& opts) {
  return timed("g_k(" + std::to_string(k) + ")", [&](VerdictReport& r) {
    const Graph g = generate({FamilyKind::Gk, {k}});
    const json subject = to_json(g);
    const GkStructure gs = g_k_structure(k);
    const auto bases = enumerate_metric_bases(g);
    r.expect("dim", k, bases.front().size(), subject);
    r.expect("unique basis is A", sets_json({gs.a}), sets_json(bases), subject);
    PairingSet ps;
    for (const auto& [b, c] : gs.pairing) ps.pairs.emplace_back(b, c);
    r.expect("(b_S, c_S) pairing resolves", true, is_pairing_resolving(g, ps), subject);
    r.expect("Resolver cannot win within k moves (Resolver first)", true,
             resolver_cannot_win_within(g, Player::Resolver, k), subject);
    if (k == 3 && opts.solve_max_order >= 16) {
      r.info["resolver_forced_win_moves"] = opt_json(resolver_forced_win_moves(g, Player::Resolver, 2 * k));
    }
  });
}

VerdictReport verify_small_examples(const VerifyOptions& opts) {
  return timed("small examples", [&](VerdictReport& r) {
    const SolverOptions so = solver_opts(opts);
    const Graph p4 = generate({FamilyKind::Path, {4}});
    expect_record(r, "P_4: ", outcome_record(p4, so), Outcome::R, 1, std::nullopt, to_json(p4));
    const Graph k14 = generate({FamilyKind::Star, {4}});
    expect_record(r, "K_{1,4}: ", outcome_record(k14, so), Outcome::S, std::nullopt, 2, to_json(k14));
    const Graph g3 = subdivided_star();
    r.expect("subdivided star: outcome", "N", outcome_str(outcome_record(g3, so).outcome), to_json(g3));

    for (int n = 2; n <= 8; ++n) {
      const Graph p = generate({FamilyKind::Path, {n}});
      expect_record(r, "P_" + std::to_string(n) + ": ", outcome_record(p, so), Outcome::R, 1, std::nullopt, to_json(p));
    }
    const Graph c3 = generate({FamilyKind::Cycle, {3}});
    expect_record(r, "C_3: ", outcome_record(c3, so), Outcome::N, 2, 2, to_json(c3));
    for (int n = 4; n <= 8; ++n) {
      const Graph c = generate({FamilyKind::Cycle, {n}});
      r.expect("C_" + std::to_string(n) + ": dim", 2, metric_dimension(c).dimension, to_json(c));
      expect_record(r, "C_" + std::to_string(n) + ": ", outcome_record(c, so), Outcome::R, 2, std::nullopt,
                    to_json(c));
    }
    for (int n = 4; n <= 6; ++n) {
      const Graph kn = generate({FamilyKind::Complete, {n}});
      expect_record(r, "K_" + std::to_string(n) + ": ", outcome_record(kn, so), Outcome::S, std::nullopt, 2,
                    to_json(kn));
    }
    const Graph b5 = generate({FamilyKind::Bouquet, {4, 4, 4, 4, 4}});
    const int b5_dim = metric_dimension(b5).dimension;
    r.expect("B_5: dim", 9, b5_dim, to_json(b5));
    r.expect("B_5: dim >= ceil(n/2) + 1", true, b5_dim >= (b5.order() + 1) / 2 + 1, to_json(b5));
    for (int m : {4, 5}) {
      const Graph lex = generate({FamilyKind::LexCycleK2, {m}});
      const std::string p = "C_" + std::to_string(m) + "[K_2]: ";
      const int dim = metric_dimension(lex).dimension;
      r.expect(p + "dim", m, dim, to_json(lex));
      expect_record(r, p, outcome_record(lex, so), Outcome::R, m, std::nullopt, to_json(lex));
    }
  });
}

VerdictReport verify_sweep(const VerifyOptions& opts) {
  return timed("sweep n<=" + std::to_string(opts.sweep_max_order), [&](VerdictReport& r) {
    struct Counter {
      explicit Counter(const char* n) : name(n) {}
      const char* name;
      int violations = 0;
      json witness;
    };
    enum {
      kNoSecondPlayerWin,
      kResolverDimBound,
      kLargeDimSpoiler,
      kResolverCounts,
      kSpoilerCounts,
      kPairingImpliesResolver,
      kTwinObservation,
      kSpoilerSkip,
      kResolverSkip,
      kMemoAgrees,
      kQuickWin,
      kCount
    };
    std::vector<Counter> c{Counter{"second-player win never occurs"},
                           Counter{"o=R => dim <= floor(n/2)"},
                           Counter{"dim >= ceil(n/2)+1 => o=S"},
                           Counter{"o=R => r'_mb >= r_mb >= dim"},
                           Counter{"o=S => s_mb >= s'_mb"},
                           Counter{"dim pairing => o=R and r_mb = r'_mb = dim"},
                           Counter{"basis misses at most one vertex per twin class"},
                           Counter{"Spoiler passing never helps Spoiler"},
                           Counter{"Resolver passing never helps Resolver"},
                           Counter{"memoized and plain search agree"},
                           Counter{"twin quick win => o=S with 2 moves"}};
    std::vector<int> graphs_by_order;
    json outcomes = {{"R", 0}, {"S", 0}, {"N", 0}};
    auto violate = [&](int which, const Graph& g, json detail = nullptr) {
      auto& ctr = c[static_cast<std::size_t>(which)];
      if (ctr.violations++ == 0) ctr.witness = {{"graph", to_json(g)}, {"detail", detail}};
    };
    SolverOptions plain;
    plain.memoize = false;

    for (int n = 2; n <= opts.sweep_max_order; ++n) {
      int count = 0;
      for_each_connected_graph(n, [&](const Graph& g) {
        ++count;
        const auto bases = enumerate_metric_bases(g);
        const int dim = bases.front().size();
        GameSolver rs(g, Player::Resolver);
        GameSolver ss(g, Player::Spoiler);
        const GameValue rv = rs.value();
        const GameValue sv = ss.value();
        if (rv.winner == Player::Spoiler && sv.winner == Player::Resolver) violate(kNoSecondPlayerWin, g);
        const bool o_r = rv.winner == Player::Resolver && sv.winner == Player::Resolver;
        const bool o_s = rv.winner == Player::Spoiler && sv.winner == Player::Spoiler;
        outcomes[o_r ? "R" : o_s ? "S" : "N"] = outcomes[o_r ? "R" : o_s ? "S" : "N"].get<int>() + 1;
        if (o_r && dim > n / 2) violate(kResolverDimBound, g, {{"dim", dim}});
        if (dim >= (n + 1) / 2 + 1 && !o_s) violate(kLargeDimSpoiler, g, {{"dim", dim}});
        if (o_r && !(sv.winner_moves >= rv.winner_moves && rv.winner_moves >= dim)) {
          violate(kResolverCounts, g, {{"r_mb", rv.winner_moves}, {"r_mb_s", sv.winner_moves}, {"dim", dim}});
        }
        if (o_s && !(rv.winner_moves >= sv.winner_moves)) {
          violate(kSpoilerCounts, g, {{"s_mb", rv.winner_moves}, {"s_mb_s", sv.winner_moves}});
        }
        if (2 * dim <= n) {
          if (const auto ps = find_dim_pairing(g)) {
            if (!(o_r && rv.winner_moves == dim && sv.winner_moves == dim)) {
              violate(kPairingImpliesResolver, g, {{"pairing", to_json(*ps)}});
            }
          }
        }
        const TwinPartition tp = twin_classes(g);
        for (auto w : bases) {
          for (const auto& q : tp.classes) {
            if ((q.members - w).size() > 1) violate(kTwinObservation, g, {{"basis", set_json(w)}});
          }
        }
        if (tp.classes.size() > 0 && spoiler_quick_win(tp) && !(o_s && rv.winner_moves == 2 && sv.winner_moves == 2)) {
          violate(kQuickWin, g);
        }
        for (Player first : {Player::Resolver, Player::Spoiler}) {
          const GameValue base = first == Player::Resolver ? rv : sv;
          const GameValue s_skip = solve_with_skips(g, first, Player::Spoiler);
          if (base.winner == Player::Resolver &&
              !(s_skip.winner == Player::Resolver && s_skip.winner_moves <= base.winner_moves)) {
            violate(kSpoilerSkip, g, {{"first", std::string(1, player_code(first))}});
          }
          const GameValue r_skip = solve_with_skips(g, first, Player::Resolver);
          if (r_skip.winner != base.winner ||
              (base.winner == Player::Resolver && r_skip.winner_moves != base.winner_moves)) {
            violate(kResolverSkip, g, {{"first", std::string(1, player_code(first))}});
          }
          if (solve(g, first, plain) != base) violate(kMemoAgrees, g, {{"first", std::string(1, player_code(first))}});
        }
      });
      graphs_by_order.push_back(count);
    }
    r.info["connected_graphs_by_order"] = graphs_by_order;
    r.info["outcomes"] = outcomes;
    for (const auto& ctr : c) r.expect(std::string(ctr.name) + " (violations)", 0, ctr.violations, ctr.witness);
  });
}

std::vector<VerdictReport> verify_all(const VerifyOptions& opts) {
  std::vector<VerdictReport> out;
  out.push_back(verify_small_examples(opts));
  out.push_back(verify_petersen(opts));
  out.push_back(verify_trees(opts));
  for (const auto& lens : std::vector<std::vector<int>>{{3, 5}, {4, 6}, {4, 4, 4}, {4, 4, 4, 4}, {3, 4, 6}}) {
    out.push_back(verify_bouquet(lens, opts));
  }
  for (const auto& parts :
       std::vector<std::vector<int>>{{2, 2, 2}, {3, 3}, {1, 1, 1, 2}, {1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 2, 2}, {4, 1}}) {
    out.push_back(verify_multipartite(parts, opts));
  }
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    out.push_back(verify_grid(s, t, opts));
  }
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    out.push_back(verify_torus(s, t, opts));
  }
  out.push_back(verify_gk(3, opts));
  out.push_back(verify_sweep(opts));
  return out;
}

}  // namespace mbrg
