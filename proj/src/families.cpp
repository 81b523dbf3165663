#include "mbrg/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"

namespace mbrg {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::string_view params;
};

constexpr std::array<KindInfo, 13> kKinds = {{
    {FamilyKind::Path, "path", "n >= 2"},
    {FamilyKind::Cycle, "cycle", "n >= 3"},
    {FamilyKind::Complete, "complete", "n >= 2"},
    {FamilyKind::Star, "star", "k >= 1 leaves (K_{1,k})"},
    {FamilyKind::CompleteMultipartite, "complete_multipartite", "part sizes a_1..a_k, k >= 2, a_i >= 1"},
    {FamilyKind::TreeFromEdges, "tree_from_edges", "flattened edge list u_0 v_0 u_1 v_1 ... forming a tree"},
    {FamilyKind::Spider, "spider", "leg lengths l_1..l_k >= 1"},
    {FamilyKind::Petersen, "petersen", "none"},
    {FamilyKind::Bouquet, "bouquet", "cycle lengths, at least 2, each >= 3"},
    {FamilyKind::Grid, "grid", "s t >= 2 (P_s x P_t)"},
    {FamilyKind::Torus, "torus", "s t >= 3 (C_s x C_t)"},
    {FamilyKind::LexCycleK2, "lex_cycle_k2", "m >= 3 (C_m[K_2])"},
    {FamilyKind::Gk, "g_k", "k >= 3"},
}};

std::string fmt_params(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s;
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& why) {
  throw InvalidInput(std::string(family_name(spec.kind)) + "(" + fmt_params(spec.params) + "): " + why);
}

void need_count(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    bad(spec, "expected " + std::to_string(count) + " parameter(s)");
  }
}

void need_min(const FamilySpec& spec, int value, int lo, const char* what) {
  if (value < lo) bad(spec, std::string(what) + " must be at least " + std::to_string(lo));
}

std::vector<std::string> indexed_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v_" + std::to_string(i));
  return out;
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e, indexed_labels(n));
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e, indexed_labels(n));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e, indexed_labels(n));
}

Graph multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      part_of.push_back(static_cast<int>(i));
      labels.push_back("u_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
    }
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph::build(n, e, std::move(labels));
}

Graph star(int k) {
  std::vector<Edge> e;
  std::vector<std::string> labels{"c"};
  for (int i = 1; i <= k; ++i) {
    e.emplace_back(0, i);
    labels.push_back("l_" + std::to_string(i));
  }
  return Graph::build(k + 1, e, std::move(labels));
}

Graph spider(const std::vector<int>& legs) {
  std::vector<Edge> e;
  std::vector<std::string> labels{"c"};
  int next = 1;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    int prev = 0;
    for (int j = 1; j <= legs[i]; ++j) {
      e.emplace_back(prev, next);
      labels.push_back("x_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}");
      prev = next++;
    }
  }
  return Graph::build(next, e, std::move(labels));
}

Graph tree_from_edges(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (p.empty() || p.size() % 2 != 0) bad(spec, "needs a nonempty flattened edge list");
  const int n = *std::max_element(p.begin(), p.end()) + 1;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < p.size(); i += 2) e.emplace_back(p[i], p[i + 1]);
  Graph g = Graph::build(n, e, indexed_labels(n));
  if (g.size() != n - 1 || !is_connected(g)) bad(spec, "edges do not form a tree");
  return g;
}

Graph petersen() {
  // u_i = i - 1, w_i = i + 4.
  const std::vector<Edge> e = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},  // outer 5-cycle
      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},  // inner pentagram w1-w3-w5-w2-w4
      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
  };
  std::vector<std::string> labels;
  for (int i = 1; i <= 5; ++i) labels.push_back("u_" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) labels.push_back("w_" + std::to_string(i));
  return Graph::build(10, e, std::move(labels));
}

Graph bouquet(const std::vector<int>& lengths) {
  std::vector<Edge> e;
  std::vector<std::string> labels{"w"};
  int next = 1;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    int prev = 0;
    for (int j = 1; j < lengths[i]; ++j) {
      e.emplace_back(prev, next);
      labels.push_back("u_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}");
      prev = next++;
    }
    e.emplace_back(prev, 0);
  }
  return Graph::build(next, e, std::move(labels));
}

std::string subset_bits(int subset, int k) {
  // Leftmost character is a_1, i.e. the most significant bit.
  std::string s(k, '0');
  for (int j = 0; j < k; ++j) {
    if ((subset >> (k - 1 - j)) & 1) s[j] = '1';
  }
  return s;
}

Graph g_k(int k) {
  const int subsets = (1 << k) - 1;
  const int n = k + 2 * subsets;
  if (n > kMaxVertices) throw InvalidInput("g_k(" + std::to_string(k) + ") has order beyond the supported maximum");
  const auto gs = g_k_structure(k);
  std::vector<Edge> e;
  auto clique = [&e](VertexSet s) {
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) e.emplace_back(m[i], m[j]);
  };
  clique(gs.a);
  clique(gs.b);
  clique(gs.c);
  std::vector<std::string> labels;
  for (int j = 1; j <= k; ++j) labels.push_back("a_" + std::to_string(j));
  for (int x = 1; x <= subsets; ++x) labels.push_back("b_" + subset_bits(x, k));
  for (int x = 1; x <= subsets; ++x) labels.push_back("c_" + subset_bits(x, k));
  for (int x = 1; x <= subsets; ++x) {
    const int b = k + x - 1;
    const int c = k + subsets + x - 1;
    e.emplace_back(b, c);
    for (int j = 0; j < k; ++j) {
      if ((x >> (k - 1 - j)) & 1) e.emplace_back(b, j);
    }
  }
  return Graph::build(n, e, std::move(labels));
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  throw InvalidInput("unknown family kind '" + std::string(name) + "'");
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      need_count(spec, 1);
      need_min(spec, p[0], 2, "order");
      break;
    case FamilyKind::Cycle:
      need_count(spec, 1);
      need_min(spec, p[0], 3, "cycle length");
      break;
    case FamilyKind::Star:
      need_count(spec, 1);
      need_min(spec, p[0], 1, "leaf count");
      break;
    case FamilyKind::CompleteMultipartite:
      if (p.size() < 2) bad(spec, "needs at least 2 parts");
      for (int a : p) need_min(spec, a, 1, "part size");
      break;
    case FamilyKind::TreeFromEdges:
      if (p.empty() || p.size() % 2 != 0) bad(spec, "needs a nonempty flattened edge list");
      for (int v : p) need_min(spec, v, 0, "vertex index");
      break;
    case FamilyKind::Spider:
      if (p.empty()) bad(spec, "needs at least one leg");
      for (int l : p) need_min(spec, l, 1, "leg length");
      break;
    case FamilyKind::Petersen:
      need_count(spec, 0);
      break;
    case FamilyKind::Bouquet:
      if (p.size() < 2) bad(spec, "needs at least 2 cycles");
      for (int l : p) need_min(spec, l, 3, "cycle length");
      break;
    case FamilyKind::Grid:
      need_count(spec, 2);
      need_min(spec, std::min(p[0], p[1]), 2, "grid side");
      break;
    case FamilyKind::Torus:
      need_count(spec, 2);
      need_min(spec, std::min(p[0], p[1]), 3, "torus side");
      break;
    case FamilyKind::LexCycleK2:
      need_count(spec, 1);
      need_min(spec, p[0], 3, "cycle length");
      break;
    case FamilyKind::Gk:
      need_count(spec, 1);
      need_min(spec, p[0], 3, "k");
      if (p[0] > 4) bad(spec, "k above 4 exceeds the supported graph order");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path: return path(p[0]);
    case FamilyKind::Cycle: return cycle(p[0]);
    case FamilyKind::Complete: return complete(p[0]);
    case FamilyKind::Star: return star(p[0]);
    case FamilyKind::CompleteMultipartite: return multipartite(p);
    case FamilyKind::TreeFromEdges: return tree_from_edges(spec);
    case FamilyKind::Spider: return spider(p);
    case FamilyKind::Petersen: return petersen();
    case FamilyKind::Bouquet: return bouquet(p);
    case FamilyKind::Grid: return cartesian_product(path(p[0]), path(p[1]));
    case FamilyKind::Torus: return cartesian_product(cycle(p[0]), cycle(p[1]));
    case FamilyKind::LexCycleK2: return lexicographic_product_with_k2(cycle(p[0]));
    case FamilyKind::Gk: return g_k(p[0]);
  }
  throw std::logic_error("unhandled family kind");
}

nlohmann::json to_json(const FamilySpec& spec) {
  return {{"kind", family_name(spec.kind)}, {"params", spec.params}};
}

FamilySpec family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("family JSON needs a \"kind\"");
  try {
    FamilySpec spec;
    spec.kind = parse_family_kind(j.at("kind").get<std::string>());
    if (j.contains("params")) spec.params = j.at("params").get<std::vector<int>>();
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed family JSON: ") + e.what());
  }
}

nlohmann::json family_catalog() {
  auto out = nlohmann::json::array();
  for (const auto& k : kKinds) out.push_back({{"kind", k.name}, {"params", k.params}});
  return out;
}

GkStructure g_k_structure(int k) {
  if (k < 3) throw InvalidInput("g_k requires k >= 3");
  if (k > 4) throw InvalidInput("g_k requires k <= 4 (order limit)");
  const int subsets = (1 << k) - 1;
  GkStructure gs;
  for (int j = 0; j < k; ++j) gs.a.insert(j);
  for (int x = 1; x <= subsets; ++x) {
    const int b = k + x - 1;
    const int c = k + subsets + x - 1;
    gs.b.insert(b);
    gs.c.insert(c);
    gs.pairing.emplace_back(b, c);
  }
  return gs;
}

BouquetProfile bouquet_profile(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::Bouquet) throw InvalidInput("bouquet_profile needs a bouquet spec");
  validate(spec);
  BouquetProfile bp;
  bp.m = static_cast<int>(spec.params.size());
  bp.cut_vertex = 0;
  int next = 1;
  for (int len : spec.params) {
    BouquetCycle c;
    c.length = len;
    for (int j = 1; j < len; ++j) c.path.push_back(next++);
    const int half = len / 2;
    // u_{i,j} is path[j - 1].
    if (len % 2 == 1) {
      c.middle = {c.path[half - 1], c.path[half]};
    } else {
      c.middle = {c.path[half - 1]};
      ++bp.x;
      if (len == 4) ++bp.z;
    }
    bp.cycles.push_back(std::move(c));
  }
  return bp;
}

}  // namespace mbrg
