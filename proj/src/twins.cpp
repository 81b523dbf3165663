#include "mbrg/twins.hpp"

#include <algorithm>

namespace mbrg {

bool are_twins(const Graph& g, int u, int v) {
  if (u == v) return true;
  return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

TwinPartition twin_classes(const Graph& g) {
  const int n = g.order();
  TwinPartition tp;
  VertexSet assigned;
  for (int u = 0; u < n; ++u) {
    if (assigned.contains(u)) continue;
    VertexSet cls = VertexSet::single(u);
    for (int v = u + 1; v < n; ++v) {
      if (!assigned.contains(v) && are_twins(g, u, v)) cls.insert(v);
    }
    assigned |= cls;
    TwinClass tc{cls, TwinKind::Singleton};
    if (cls.size() > 1) {
      // Twin classes are cliques or independent sets, so one pair decides.
      const auto m = cls.members();
      tc.kind = g.has_edge(m[0], m[1]) ? TwinKind::Clique : TwinKind::Independent;
    }
    tp.classes.push_back(tc);
  }
  return tp;
}

int twin_lower_bound(const TwinPartition& tp) {
  int bound = 0;
  for (const auto& c : tp.classes) bound += c.members.size() - 1;
  return bound;
}

std::optional<SpoilerQuickWin> spoiler_quick_win(const TwinPartition& tp) {
  for (const auto& c : tp.classes) {
    if (c.members.size() >= 4) {
      SpoilerQuickWin w;
      w.witness = {c.members};
      w.grab = c.members.members();
      return w;
    }
  }
  std::vector<VertexSet> triples;
  for (const auto& c : tp.classes) {
    if (c.members.size() >= 3) triples.push_back(c.members);
    if (triples.size() == 2) {
      SpoilerQuickWin w;
      w.witness = triples;
      for (const auto& t : triples) {
        auto m = t.members();
        w.grab.insert(w.grab.end(), m.begin(), m.begin() + 3);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<int> twin_grab_move(const TwinPartition& tp, VertexSet resolver, VertexSet spoiler) {
  const auto quick = spoiler_quick_win(tp);
  if (!quick) return std::nullopt;
  const VertexSet claimed = resolver | spoiler;
  // A second vertex in any witness class kills every completion.
  for (const auto& cls : quick->witness) {
    const VertexSet free = cls - claimed;
    if (!(cls & spoiler).empty() && !free.empty()) return free.min();
  }
  // Otherwise open a class Resolver has not touched.
  for (const auto& cls : quick->witness) {
    const VertexSet free = cls - claimed;
    if ((cls & resolver).empty() && !free.empty()) return free.min();
  }
  for (int v : quick->grab) {
    if (!claimed.contains(v)) return v;
  }
  return std::nullopt;
}

}  // namespace mbrg
