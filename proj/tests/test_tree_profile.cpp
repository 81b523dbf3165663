#include <doctest.h>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/tree_profile.hpp"
#include "mbrg/verify.hpp"

using namespace mbrg;

TEST_CASE("tree profile of small trees") {
  const TreeProfile k13 = tree_profile(generate({FamilyKind::Star, {3}}));
  CHECK(k13.sigma() == 3);
  CHECK(k13.ex() == 1);
  REQUIRE(k13.exterior.size() == 1);
  CHECK(k13.exterior[0].terminal_degree() == 3);
  CHECK(k13.exterior[0].adjacent_leaf_count == 3);

  const Graph spider = generate({FamilyKind::Spider, {2, 2, 2}});
  const TreeProfile sp = tree_profile(spider);
  CHECK(sp.sigma() == 3);
  CHECK(sp.ex() == 1);
  CHECK(sp.exterior[0].adjacent_leaf_count == 0);
  CHECK(sp.exterior[0].legs[0] == std::vector<int>{spider.vertex("x_{1,1}"), spider.vertex("x_{1,2}")});

  // Centre joined to u_1, w_1, u_2, u_3, u_4; pendant paths below u_2, u_3, u_4.
  const Graph t = pairing_example_tree();
  const TreeProfile tp = tree_profile(t);
  CHECK(tp.sigma() == 5);
  CHECK(tp.ex() == 1);
  CHECK(tp.major == VertexSet::single(t.vertex("v")));
  const auto& em = tp.exterior[0];
  CHECK(em.terminal_degree() == 5);
  CHECK(em.adjacent_leaf_count == 2);
  // Nearest terminals first.
  CHECK(em.terminals[0] == t.vertex("u_1"));
  CHECK(em.terminals[1] == t.vertex("w_1"));
  CHECK(em.terminals[4] == t.vertex("w_4"));
  CHECK(metric_dimension(t).dimension == tp.sigma() - tp.ex());
}

TEST_CASE("exterior major vertices with one terminal leaf") {
  // Two major vertices 0 and 3 joined by a path through 6; 3 also carries a
  // longer path so that both are exterior.
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 6}, {6, 3}, {3, 4}, {3, 5}, {5, 7}};
  const Graph g = Graph::build(8, edges);
  const TreeProfile p = tree_profile(g);
  CHECK(p.sigma() == 4);
  CHECK(p.ex() == 2);
  CHECK(p.m2 == VertexSet::from(std::vector<int>{0, 3}));
  CHECK(metric_dimension(g).dimension == 2);

  // Major vertex 1 has terminal degree 1; 0 and 2 have two leaves each.
  const std::vector<Edge> caterpillar{{0, 3}, {0, 4}, {0, 1}, {1, 5}, {1, 2}, {2, 6}, {2, 7}};
  const TreeProfile c = tree_profile(Graph::build(8, caterpillar));
  CHECK(c.ex() == 3);
  CHECK(c.m1 == VertexSet::single(1));
  CHECK(c.m2 == VertexSet::from(std::vector<int>{0, 2}));
}

TEST_CASE("tree profile rejects paths and non-trees") {
  CHECK_THROWS_AS(tree_profile(generate({FamilyKind::Path, {5}})), InvalidInput);
  CHECK_THROWS_AS(tree_profile(generate({FamilyKind::Cycle, {5}})), InvalidInput);
  CHECK(is_tree(generate({FamilyKind::Path, {5}})));
  CHECK(is_path_graph(generate({FamilyKind::Path, {5}})));
  CHECK_FALSE(is_tree(generate({FamilyKind::Cycle, {5}})));
}

TEST_CASE("basis characterization predicate") {
  const Graph spider = generate({FamilyKind::Spider, {2, 2, 2}});
  const TreeProfile p = tree_profile(spider);
  auto ok = [&](std::initializer_list<const char*> names) {
    VertexSet w;
    for (const char* n : names) w.insert(spider.vertex(n));
    return satisfies_tree_basis_characterization(p, w);
  };
  CHECK(ok({"x_{1,2}", "x_{2,2}"}));
  CHECK(ok({"x_{1,1}", "x_{3,2}"}));
  CHECK_FALSE(ok({"x_{1,1}", "x_{1,2}"}));            // two from one leg
  CHECK_FALSE(ok({"x_{1,1}", "x_{2,1}", "x_{3,1}"}));  // no leg left empty
  CHECK_FALSE(ok({"c", "x_{1,1}"}));                   // outside the legs
}

TEST_CASE("random trees are trees and deterministic per seed") {
  for (int n = 2; n <= 14; ++n) {
    const Graph t = random_tree(n, 100 + static_cast<std::uint64_t>(n));
    CHECK(t.order() == n);
    CHECK(is_tree(t));
    CHECK(random_tree(n, 100 + static_cast<std::uint64_t>(n)) == t);
  }
}
