#include <doctest.h>

#include <random>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/twins.hpp"
#include "mbrg/verify.hpp"
#include "oracles.hpp"

using namespace mbrg;

namespace {

VertexSet set_of(std::vector<int> v) { return VertexSet::from(v); }

VertexSet named(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* n : names) out.insert(g.vertex(n));
  return out;
}

}  // namespace

TEST_CASE("code vectors") {
  const Graph pet = generate({FamilyKind::Petersen, {}});
  const DistanceMatrix d = all_pairs_distances(pet);
  const std::vector<int> w{pet.vertex("u_1"), pet.vertex("w_2"), pet.vertex("w_3")};
  CHECK(code_vector(d, w, pet.vertex("u_2")) == CodeVector{1, 1, 2});

  const Graph p4 = generate({FamilyKind::Path, {4}});
  const DistanceMatrix dp = all_pairs_distances(p4);
  const std::vector<int> s{2};
  CHECK(code_vector(dp, s, 2) == CodeVector{0});
  const std::vector<int> s0{0};
  CHECK(code_vector(dp, s0, 3) == CodeVector{3});
}

TEST_CASE("is_resolving examples and errors") {
  const Graph p4 = generate({FamilyKind::Path, {4}});
  const Graph c4 = generate({FamilyKind::Cycle, {4}});
  const Graph pet = generate({FamilyKind::Petersen, {}});
  CHECK(is_resolving(p4, all_pairs_distances(p4), set_of({0})));
  CHECK_FALSE(is_resolving(p4, all_pairs_distances(p4), set_of({1})));
  CHECK_FALSE(is_resolving(c4, all_pairs_distances(c4), set_of({0, 2})));
  CHECK(is_resolving(c4, all_pairs_distances(c4), set_of({0, 1})));
  CHECK(is_resolving(pet, all_pairs_distances(pet), named(pet, {"u_1", "w_2", "w_3"})));

  CHECK_THROWS_AS(is_resolving(p4, all_pairs_distances(p4), VertexSet{}), InvalidInput);
  CHECK_THROWS_AS(is_resolving(p4, all_pairs_distances(p4), set_of({7})), InvalidInput);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  const Graph disc = Graph::build(4, split);
  CHECK_THROWS_AS(is_resolving(disc, all_pairs_distances(disc), set_of({0})), NotConnected);
}

TEST_CASE("metric dimension examples") {
  CHECK(metric_dimension(generate({FamilyKind::Petersen, {}})).dimension == 3);
  CHECK(metric_dimension(generate({FamilyKind::Complete, {5}})).dimension == 4);
  CHECK(metric_dimension(generate({FamilyKind::Path, {7}})).dimension == 1);
  CHECK(metric_dimension(generate({FamilyKind::Grid, {3, 4}})).dimension == 2);
  CHECK(enumerate_metric_bases(generate({FamilyKind::Path, {4}})) ==
        std::vector<VertexSet>{set_of({0}), set_of({3})});
  const Graph g3 = generate({FamilyKind::Gk, {3}});
  CHECK(enumerate_metric_bases(g3) == std::vector<VertexSet>{g_k_structure(3).a});

  const Graph grid = generate({FamilyKind::Grid, {3, 3}});
  const auto bases = enumerate_metric_bases(grid);
  CHECK(bases.size() == 4);
  for (auto w : bases) {
    CHECK(w.size() == 2);
    w.for_each([&](int v) { CHECK(grid.degree(v) == 2); });  // corners
  }

  const std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(metric_dimension(Graph::build(4, split)), NotConnected);
  DimOptions tight;
  tight.max_subsets = 10;
  CHECK_THROWS_AS(metric_dimension(generate({FamilyKind::Petersen, {}}), tight), GuardExceeded);
  CHECK_THROWS_AS(enumerate_metric_bases(generate({FamilyKind::Petersen, {}}), 10), GuardExceeded);
}

TEST_CASE("metric dimension and bases match the all-subsets oracle on every connected graph up to order 6") {
  int graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      ++graphs;
      const auto ref = oracle::metric_dimension(g);
      const auto bases = enumerate_metric_bases(g);
      std::vector<std::uint64_t> masks;
      for (auto b : bases) masks.push_back(b.bits());
      std::sort(masks.begin(), masks.end());
      if (static_cast<int>(bases.front().size()) != ref.dim || masks != ref.bases) {
        FAIL_CHECK(to_json(g).dump());
      }
      CHECK(ref.dim >= twin_lower_bound(twin_classes(g)));
    });
  }
  CHECK(graphs == 1 + 4 + 38 + 728 + 26704);
}

TEST_CASE("metric dimension matches the oracle on family graphs") {
  const std::vector<FamilySpec> specs{
      {FamilyKind::Petersen, {}},         {FamilyKind::Bouquet, {3, 4, 5}},
      {FamilyKind::Grid, {3, 3}},         {FamilyKind::Torus, {3, 4}},
      {FamilyKind::LexCycleK2, {4}},      {FamilyKind::CompleteMultipartite, {1, 2, 3, 3}},
      {FamilyKind::Spider, {1, 2, 3, 2}},
  };
  for (const auto& spec : specs) {
    const Graph g = generate(spec);
    CAPTURE(to_json(spec).dump());
    CHECK(metric_dimension(g).dimension == oracle::metric_dimension(g).dim);
  }
}

TEST_CASE("oracle and is_resolving agree with the fast predicate; superset closure") {
  std::mt19937_64 rng(7);
  const std::vector<Graph> graphs{generate({FamilyKind::Petersen, {}}), generate({FamilyKind::Torus, {3, 4}}),
                                  generate({FamilyKind::Bouquet, {3, 4, 4}}), generate({FamilyKind::Gk, {3}}),
                                  random_tree(11, 3)};
  for (const Graph& g : graphs) {
    const DistanceMatrix d = all_pairs_distances(g);
    const auto ref = oracle::distances(g);
    ResolvingOracle fast(g);
    const std::uint64_t full = g.vertices().bits();
    CHECK(is_resolving(g, d, g.vertices()));
    for (int i = 0; i < 400; ++i) {
      const std::uint64_t mask = rng() & full;
      if (mask == 0) continue;
      const VertexSet w(mask);
      const bool expected = oracle::resolves(ref, mask);
      CHECK(is_resolving(g, d, w) == expected);
      CHECK(fast.resolves(w) == expected);
      CHECK(fast.resolves_cached(w) == expected);
      CHECK(fast.unresolved_pair(w).has_value() == !expected);
      if (expected) {
        for (int v = 0; v < g.order(); ++v) CHECK(fast.resolves(w | VertexSet::single(v)));
      }
    }
  }
}

TEST_CASE("k-subset enumeration is colexicographic and complete") {
  std::vector<std::uint64_t> seen;
  for_each_k_subset(5, 2, [&](VertexSet s) {
    seen.push_back(s.bits());
    return true;
  });
  CHECK(seen == std::vector<std::uint64_t>{0b00011, 0b00101, 0b00110, 0b01001, 0b01010, 0b01100, 0b10001, 0b10010,
                                           0b10100, 0b11000});
  int count = 0;
  for_each_k_subset(10, 4, [&](VertexSet) { return ++count < 5; });
  CHECK(count == 5);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
}
