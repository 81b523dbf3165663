#include <doctest.h>

#include <functional>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/pairing.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/solver.hpp"
#include "mbrg/verify.hpp"
#include "oracles.hpp"

using namespace mbrg;

namespace {

PairingSet named_pairs(const Graph& g, std::vector<std::pair<const char*, const char*>> names) {
  PairingSet p;
  for (const auto& [a, b] : names) p.pairs.emplace_back(g.vertex(a), g.vertex(b));
  return p;
}

// Every one-per-pair selection resolves, by the oracle.
bool oracle_pairing(const std::vector<std::vector<int>>& d, const std::vector<std::pair<int, int>>& pairs) {
  const std::size_t k = pairs.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const int v = (pick >> i & 1) ? pairs[i].second : pairs[i].first;
      mask |= std::uint64_t{1} << v;
    }
    if (!oracle::resolves(d, mask)) return false;
  }
  return true;
}

// Whether any k disjoint pairs form a pairing resolving set.
bool oracle_has_pairing(const Graph& g, int k) {
  const auto d = oracle::distances(g);
  const int n = g.order();
  std::vector<std::pair<int, int>> chosen;
  std::function<bool(int, std::uint64_t)> rec = [&](int from_pair, std::uint64_t used) {
    if (static_cast<int>(chosen.size()) == k) return oracle_pairing(d, chosen);
    int idx = 0;
    for (int w = 1; w < n; ++w) {
      for (int u = 0; u < w; ++u, ++idx) {
        if (idx < from_pair) continue;
        if (used >> u & 1 || used >> w & 1) continue;
        chosen.emplace_back(u, w);
        if (rec(idx + 1, used | (std::uint64_t{1} << u) | (std::uint64_t{1} << w))) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST_CASE("is_pairing_resolving examples") {
  const Graph grid = generate({FamilyKind::Grid, {3, 4}});
  const PairingSet corners{{{0, 11}, {8, 3}}};
  CHECK(is_pairing_resolving(grid, corners));

  const Graph c4 = generate({FamilyKind::Cycle, {4}});
  CHECK_FALSE(is_pairing_resolving(c4, PairingSet{{{0, 1}, {2, 3}}}));

  const Graph g3 = generate({FamilyKind::Gk, {3}});
  PairingSet bc;
  for (const auto& p : g_k_structure(3).pairing) bc.pairs.push_back(p);
  CHECK(is_pairing_resolving(g3, bc));

  const Graph t = pairing_example_tree();
  CHECK(is_pairing_resolving(t, named_pairs(t, {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"u_4", "v_4"}})));
  CHECK(is_pairing_resolving(t, named_pairs(t, {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"u_4", "w_4"}})));
  CHECK(is_pairing_resolving(t, named_pairs(t, {{"u_1", "w_1"}, {"u_2", "w_2"}, {"u_3", "w_3"}, {"v_4", "w_4"}})));
  CHECK_FALSE(is_pairing_resolving(t, named_pairs(t, {{"u_1", "u_2"}, {"w_1", "w_2"}, {"u_3", "w_3"}, {"v_4", "w_4"}})));
}

TEST_CASE("is_pairing_resolving input errors") {
  const Graph c5 = generate({FamilyKind::Cycle, {5}});
  CHECK_THROWS_AS(is_pairing_resolving(c5, PairingSet{{{0, 1}, {1, 2}}}), InvalidInput);
  CHECK_THROWS_AS(is_pairing_resolving(c5, PairingSet{{{0, 9}}}), InvalidInput);
  CHECK_THROWS_AS(is_pairing_resolving(c5, PairingSet{}), InvalidInput);
  PairingOptions small;
  small.max_pairs = 1;
  CHECK_THROWS_AS(is_pairing_resolving(c5, PairingSet{{{0, 1}, {2, 3}}}, small), GuardExceeded);
}

TEST_CASE("find_dim_pairing examples") {
  const auto grid = find_dim_pairing(generate({FamilyKind::Grid, {2, 3}}));
  REQUIRE(grid);
  CHECK(grid->size() == 2);
  // Corners of P_2 x P_3 are 0, 2, 3, 5; the diagonals pair them up.
  CHECK(grid->endpoints() == VertexSet::from(std::vector<int>{0, 2, 3, 5}));
  CHECK(is_pairing_resolving(generate({FamilyKind::Grid, {2, 3}}), *grid));

  const auto c5 = find_dim_pairing(generate({FamilyKind::Cycle, {5}}));
  REQUIRE(c5);
  CHECK(*c5 == PairingSet{{{0, 1}, {2, 3}}});

  CHECK_FALSE(find_dim_pairing(generate({FamilyKind::Star, {3}})));
  CHECK_FALSE(find_dim_pairing(generate({FamilyKind::Complete, {4}})));

  PairingOptions tiny;
  tiny.max_order = 5;
  CHECK_THROWS_AS(find_dim_pairing(generate({FamilyKind::Cycle, {6}}), tiny), GuardExceeded);
}

TEST_CASE("find_dim_pairing agrees with exhaustive pair enumeration") {
  int graphs = 0, found = 0;
  for (int n = 2; n <= 6; ++n) {
    int index = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      if (n == 6 && index++ % 9 != 0) return;
      ++graphs;
      const int dim = oracle::metric_dimension(g).dim;
      const bool expected = 2 * dim <= n && oracle_has_pairing(g, dim);
      const auto p = find_dim_pairing(g);
      if (p.has_value() != expected) FAIL_CHECK(to_json(g).dump());
      if (p) {
        ++found;
        CHECK(p->size() == dim);
        CHECK(oracle_pairing(oracle::distances(g), p->pairs));
      }
    });
  }
  CHECK(found > 100);
  CHECK(graphs > 3000);
}

TEST_CASE("smallest pairing") {
  const Graph pet = generate({FamilyKind::Petersen, {}});
  CHECK_FALSE(find_dim_pairing(pet));
  const auto p = find_smallest_pairing(pet);
  REQUIRE(p);
  CHECK(p->size() == 4);
  CHECK(is_pairing_resolving(pet, *p));
  CHECK_FALSE(find_pairing(pet, 6));  // 12 endpoints > 10 vertices
  CHECK_FALSE(find_smallest_pairing(generate({FamilyKind::Complete, {4}})));
}

TEST_CASE("family pairing constructions") {
  const Graph spider = generate({FamilyKind::Spider, {2, 2, 2}});
  const PairingSet sp = construct_family_pairing({FamilyKind::Spider, {2, 2, 2}});
  CHECK(sp == named_pairs(spider, {{"x_{1,2}", "x_{2,2}"}, {"x_{3,1}", "x_{3,2}"}}));

  const Graph b35 = generate({FamilyKind::Bouquet, {3, 5}});
  CHECK(construct_family_pairing({FamilyKind::Bouquet, {3, 5}}) ==
        named_pairs(b35, {{"u_{1,1}", "u_{1,2}"}, {"u_{2,2}", "u_{2,3}"}}));

  const Graph c44 = generate({FamilyKind::Torus, {4, 4}});
  const PairingSet tp = construct_family_pairing({FamilyKind::Torus, {4, 4}});
  CHECK(tp.size() == 4);
  const DistanceMatrix d = all_pairs_distances(c44);
  for (const auto& [u, w] : tp.pairs) CHECK(d(u, w) == 4);  // antipodal

  const std::vector<FamilySpec> specs{
      {FamilyKind::Spider, {1, 1, 3}},
      {FamilyKind::Spider, {2, 3, 1, 4}},
      {FamilyKind::TreeFromEdges, {0, 1, 0, 2, 0, 3, 3, 4, 3, 5, 5, 6}},
      {FamilyKind::Bouquet, {3, 5}},
      {FamilyKind::Bouquet, {4, 6}},
      {FamilyKind::Bouquet, {6, 8}},
      {FamilyKind::Bouquet, {4, 4}},
      {FamilyKind::Bouquet, {4, 4, 6, 3}},
      {FamilyKind::Bouquet, {3, 3, 5, 6}},
      {FamilyKind::Bouquet, {4, 5, 7}},
      {FamilyKind::CompleteMultipartite, {2, 2, 2}},
      {FamilyKind::CompleteMultipartite, {1, 1, 2}},
      {FamilyKind::CompleteMultipartite, {1, 2, 2, 2}},
      {FamilyKind::CompleteMultipartite, {1, 1}},
      {FamilyKind::Grid, {2, 2}},
      {FamilyKind::Grid, {4, 5}},
      {FamilyKind::Torus, {4, 6}},
      {FamilyKind::Torus, {6, 4}},
  };
  for (const auto& spec : specs) {
    CAPTURE(to_json(spec).dump());
    const Graph g = generate(spec);
    const PairingSet p = construct_family_pairing(spec);
    CHECK(is_pairing_resolving(g, p));
    CHECK(p.size() == metric_dimension(g).dimension);
  }

  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::Star, {3}}), InvalidInput);
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::Star, {2}}), InvalidInput);  // a path
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::Bouquet, {4, 4, 4}}), InvalidInput);
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::CompleteMultipartite, {3, 2}}), InvalidInput);
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::CompleteMultipartite, {1, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::Torus, {3, 4}}), InvalidInput);
  CHECK_THROWS_AS(construct_family_pairing({FamilyKind::Petersen, {}}), InvalidInput);
}

TEST_CASE("a pairing resolving set forces a Resolver win in dim moves") {
  const std::vector<FamilySpec> specs{
      {FamilyKind::Bouquet, {4, 6}},         {FamilyKind::Bouquet, {3, 4, 4}},
      {FamilyKind::Grid, {3, 3}},            {FamilyKind::Spider, {1, 1, 2, 3}},
      {FamilyKind::CompleteMultipartite, {1, 2, 2, 2}},
      {FamilyKind::Torus, {4, 4}},
  };
  for (const auto& spec : specs) {
    CAPTURE(to_json(spec).dump());
    const Graph g = generate(spec);
    const int dim = metric_dimension(g).dimension;
    REQUIRE(is_pairing_resolving(g, construct_family_pairing(spec)));
    const OutcomeRecord rec = outcome_record(g);
    CHECK(rec.outcome == Outcome::R);
    CHECK(rec.r_mb == dim);
    CHECK(rec.r_mb_s == dim);
  }
}
