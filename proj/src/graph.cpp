#include "mbrg/graph.hpp"

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"

namespace mbrg {

Graph Graph::build(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (n < 2) throw InvalidInput("graph order must be at least 2, got " + std::to_string(n));
  if (n > kMaxVertices) {
    throw InvalidInput("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                       std::to_string(kMaxVertices));
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw InvalidInput("label count must equal the graph order");
  }
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, VertexSet{});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
  }
  g.labels_ = std::move(labels);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (const auto& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    adjacency_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string Graph::label(int v) const {
  if (!labels_.empty()) return labels_[v];
  return "v_" + std::to_string(v);
}

int Graph::vertex(const std::string& name) const {
  for (int v = 0; v < n_; ++v) {
    if (label(v) == name) return v;
  }
  throw InvalidInput("no vertex labelled '" + name + "'");
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw InvalidInput("label count must equal the graph order");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d(n);
  // Level-synchronous BFS over bitmask frontiers.
  for (int src = 0; src < n; ++src) {
    VertexSet seen = VertexSet::single(src);
    VertexSet frontier = seen;
    d.at(src, src) = 0;
    for (int level = 1; !frontier.empty(); ++level) {
      VertexSet next;
      frontier.for_each([&](int u) { next |= g.neighbors(u); });
      next = next - seen;
      next.for_each([&](int v) { d.at(src, v) = level; });
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

bool is_connected(const Graph& g) {
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int u) { next |= g.neighbors(u); });
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw NotConnected();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int gn = g.order();
  const int hn = h.order();
  if (gn * hn > kMaxVertices) throw InvalidInput("product order exceeds the supported maximum");
  auto id = [hn](int i, int j) { return i * hn + j; };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < gn; ++i) {
    for (int j = 0; j < hn; ++j) {
      labels.push_back("(u_" + std::to_string(i + 1) + ",v_" + std::to_string(j + 1) + ")");
    }
  }
  for (const auto& [a, b] : h.edges()) {
    for (int i = 0; i < gn; ++i) edges.emplace_back(id(i, a), id(i, b));
  }
  for (const auto& [a, b] : g.edges()) {
    for (int j = 0; j < hn; ++j) edges.emplace_back(id(a, j), id(b, j));
  }
  return Graph::build(gn * hn, edges, std::move(labels));
}

Graph lexicographic_product_with_k2(const Graph& g) {
  const int n = g.order();
  if (2 * n > kMaxVertices) throw InvalidInput("product order exceeds the supported maximum");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(2 * v, 2 * v + 1);
    labels.push_back("(" + g.label(v) + ",1)");
    labels.push_back("(" + g.label(v) + ",2)");
  }
  for (const auto& [u, v] : g.edges()) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) edges.emplace_back(2 * u + a, 2 * v + b);
    }
  }
  return Graph::build(2 * n, edges, std::move(labels));
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("graph JSON must be an object with \"n\" and \"edges\"");
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) labels = j["labels"].get<std::vector<std::string>>();
    return Graph::build(n, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << to_json(g).dump(2) << '\n';
}

}  // namespace mbrg
