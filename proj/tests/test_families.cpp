#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "oracles.hpp"

using namespace mbrg;

namespace {

std::vector<int> sorted_distances(const Graph& g) {
  std::vector<int> out;
  for (const auto& row : oracle::distances(g)) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

int girth(const Graph& g) {
  // Shortest cycle through each edge: remove it, then BFS between its ends.
  int best = 1 << 20;
  for (const auto& [u, v] : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& e : g.edges())
      if (e != Edge{u, v}) rest.push_back(e);
    const auto d = oracle::distances(Graph::build(g.order(), rest));
    const int dist = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (dist > 0) best = std::min(best, dist + 1);
  }
  return best;
}

}  // namespace

TEST_CASE("family orders and structure") {
  CHECK(generate({FamilyKind::Gk, {3}}).order() == 17);
  CHECK(generate({FamilyKind::Bouquet, {4, 4, 4, 4}}).order() == 13);
  CHECK(generate({FamilyKind::CompleteMultipartite, {1, 1, 1, 2}}).order() == 5);
  CHECK(generate({FamilyKind::CompleteMultipartite, {1, 1, 1, 2}}).size() == 9);
  CHECK(generate({FamilyKind::Star, {4}}).order() == 5);
  CHECK(generate({FamilyKind::Spider, {2, 2, 2}}).order() == 7);
  CHECK(generate({FamilyKind::Grid, {3, 4}}).order() == 12);
  CHECK(generate({FamilyKind::Torus, {4, 4}}).size() == 32);
  CHECK(generate({FamilyKind::LexCycleK2, {4}}).order() == 8);
  CHECK(generate({FamilyKind::Complete, {5}}).size() == 10);

  const Graph pet = generate({FamilyKind::Petersen, {}});
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(girth(pet) == 5);
  CHECK(pet.label(0) == "u_1");
  CHECK(pet.label(9) == "w_5");
  CHECK(pet.has_edge(pet.vertex("u_1"), pet.vertex("w_1")));
  CHECK(pet.has_edge(pet.vertex("w_1"), pet.vertex("w_3")));
  CHECK_FALSE(pet.has_edge(pet.vertex("w_1"), pet.vertex("w_2")));
}

TEST_CASE("every generated graph is connected") {
  const std::vector<FamilySpec> specs{
      {FamilyKind::Path, {2}},          {FamilyKind::Cycle, {3}},
      {FamilyKind::Complete, {2}},      {FamilyKind::Star, {1}},
      {FamilyKind::Star, {6}},          {FamilyKind::CompleteMultipartite, {1, 1}},
      {FamilyKind::CompleteMultipartite, {2, 3, 4}},
      {FamilyKind::TreeFromEdges, {0, 1, 1, 2, 1, 3}},
      {FamilyKind::Spider, {1, 3, 2}},  {FamilyKind::Petersen, {}},
      {FamilyKind::Bouquet, {3, 3}},    {FamilyKind::Bouquet, {4, 5, 6, 7}},
      {FamilyKind::Grid, {2, 2}},       {FamilyKind::Grid, {5, 3}},
      {FamilyKind::Torus, {3, 3}},      {FamilyKind::Torus, {5, 4}},
      {FamilyKind::LexCycleK2, {3}},    {FamilyKind::Gk, {3}},
      {FamilyKind::Gk, {4}},
  };
  for (const auto& spec : specs) {
    CAPTURE(to_json(spec).dump());
    CHECK(is_connected(generate(spec)));
  }
}

TEST_CASE("grid equals the product of paths up to relabelling") {
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 2}}) {
    const Graph grid = generate({FamilyKind::Grid, {s, t}});
    const Graph prod = cartesian_product(generate({FamilyKind::Path, {t}}), generate({FamilyKind::Path, {s}}));
    CHECK(sorted_distances(grid) == sorted_distances(prod));
  }
}

TEST_CASE("g_k edges follow the construction clause by clause") {
  for (int k : {3, 4}) {
    const Graph g = generate({FamilyKind::Gk, {k}});
    const GkStructure gs = g_k_structure(k);
    const int subsets = (1 << k) - 1;
    CHECK(gs.a.size() == k);
    CHECK(gs.b.size() == subsets);
    CHECK(gs.c.size() == subsets);
    CHECK(static_cast<int>(gs.pairing.size()) == subsets);
    CHECK(g.order() == k + 2 * subsets);

    auto b_index = [&](int v) { return v - k + 1; };            // binary value of S
    auto c_index = [&](int v) { return v - k - subsets + 1; };  // same for C
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        bool expected = false;
        const bool ua = gs.a.contains(u), ub = gs.b.contains(u), uc = gs.c.contains(u);
        const bool va = gs.a.contains(v), vb = gs.b.contains(v), vc = gs.c.contains(v);
        if ((ua && va) || (ub && vb) || (uc && vc)) expected = true;  // three cliques
        if (ua && vb) expected = (b_index(v) >> (k - 1 - u) & 1) == 1;  // b_S ~ a_j iff a_j in S
        if (ub && vc) expected = b_index(u) == c_index(v);              // b_S ~ c_S
        CAPTURE(g.label(u));
        CAPTURE(g.label(v));
        CHECK(g.has_edge(u, v) == expected);
      }
    }
  }
  const Graph g3 = generate({FamilyKind::Gk, {3}});
  const GkStructure gs = g_k_structure(3);
  CHECK(g3.label(gs.pairing[3].first) == "b_100");
  CHECK(g3.label(gs.pairing[3].second) == "c_100");
  CHECK(g3.has_edge(g3.vertex("b_100"), g3.vertex("a_1")));
  CHECK_FALSE(g3.has_edge(g3.vertex("b_100"), g3.vertex("a_2")));
  CHECK(g_k_structure(4).b.size() == 15);
}

TEST_CASE("bouquet profile") {
  auto profile = [](std::vector<int> lens) { return bouquet_profile({FamilyKind::Bouquet, std::move(lens)}); };
  const auto a = profile({3, 5});
  CHECK(a.m == 2);
  CHECK(a.x == 0);
  CHECK(a.z == 0);
  const auto b = profile({4, 6});
  CHECK(b.m == 2);
  CHECK(b.x == 2);
  CHECK(b.z == 1);
  CHECK(profile({4, 4, 4}).z == 3);

  const Graph g = generate({FamilyKind::Bouquet, {3, 5}});
  CHECK(g.label(a.cut_vertex) == "w");
  // Odd length 2k+1 exposes u_{i,k}, u_{i,k+1}.
  CHECK(g.label(a.cycles[0].middle[0]) == "u_{1,1}");
  CHECK(g.label(a.cycles[0].middle[1]) == "u_{1,2}");
  CHECK(g.label(a.cycles[1].middle[0]) == "u_{2,2}");
  CHECK(g.label(a.cycles[1].middle[1]) == "u_{2,3}");
  const Graph h = generate({FamilyKind::Bouquet, {4, 6}});
  CHECK(h.label(b.cycles[1].middle[0]) == "u_{2,3}");
  CHECK(b.cycles[1].middle.size() == 1);
  // The path vertices run around the cycle, ends adjacent to w.
  for (const auto& c : b.cycles) {
    CHECK(h.has_edge(0, c.path.front()));
    CHECK(h.has_edge(0, c.path.back()));
    for (std::size_t i = 0; i + 1 < c.path.size(); ++i) CHECK(h.has_edge(c.path[i], c.path[i + 1]));
  }
  CHECK_THROWS_AS(bouquet_profile({FamilyKind::Cycle, {4}}), InvalidInput);
}

TEST_CASE("family validation and JSON") {
  CHECK_THROWS_AS(generate({FamilyKind::Path, {1}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Cycle, {2}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Grid, {3}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Torus, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Bouquet, {4}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Gk, {2}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Gk, {5}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::TreeFromEdges, {0, 1, 1, 2, 2, 0}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::TreeFromEdges, {0, 1, 2, 3}}), InvalidInput);
  CHECK_THROWS_AS(generate({FamilyKind::Petersen, {1}}), InvalidInput);
  CHECK_THROWS_AS(parse_family_kind("hypercube"), InvalidInput);

  for (const auto& entry : family_catalog()) {
    const FamilyKind kind = parse_family_kind(entry.at("kind").get<std::string>());
    CHECK(family_name(kind) == entry.at("kind").get<std::string>());
    CHECK(entry.at("params").is_string());
  }
  CHECK(family_catalog().size() == 13);

  const FamilySpec spec{FamilyKind::Bouquet, {3, 4}};
  const FamilySpec back = family_from_json(to_json(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.params == spec.params);
  CHECK(family_from_json(nlohmann::json::parse(R"({"kind":"petersen"})")).kind == FamilyKind::Petersen);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"kind":"grid","params":["a"]})")), InvalidInput);
  CHECK_THROWS_AS(family_from_json(nlohmann::json::parse(R"({"params":[3]})")), InvalidInput);
}
