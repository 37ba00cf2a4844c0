#include "sgm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgm {

namespace {

// Relabels a connected graph into canonical order and orients every edge
// from the lower to the higher index.
Multigraph canonical_oriented(const Multigraph& g, const std::vector<int>& order) {
  std::vector<int> image(g.n_vertices());
  for (size_t k = 0; k < order.size(); ++k) image[order[k]] = static_cast<int>(k);
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    int a = image[e.from], b = image[e.to];
    es.push_back({std::min(a, b), std::max(a, b), e.mult});
  }
  return Multigraph(g.n_vertices(), std::move(es));
}

std::map<CanonicalKey, Multigraph> connected_by_key(int e) {
  std::map<CanonicalKey, Multigraph> level;
  if (e < 1) return level;
  Multigraph single(2, {{0, 1, 1}});
  level.emplace(canonical_form(single), single);
  for (int edges = 2; edges <= e; ++edges) {
    // Every connected multigraph has an edge whose removal leaves it
    // connected (a cycle or repeated edge) or strands a single vertex (a
    // pendant edge of a tree), so one-edge extensions reach every class.
    std::map<CanonicalKey, Multigraph> next;
    for (const auto& [key, g] : level) {
      const int n = g.n_vertices();
      auto add = [&](const Multigraph& h) {
        auto lab = canonical_labeling_connected(h);
        if (!next.contains(lab.key)) next.emplace(lab.key, canonical_oriented(h, lab.order));
      };
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          auto es = g.edges();
          es.push_back({u, v, 1});
          add(Multigraph(n, std::move(es)));
        }
      for (int u = 0; u < n; ++u) {
        auto es = g.edges();
        es.push_back({u, n, 1});
        add(Multigraph(n + 1, std::move(es)));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Multigraph> enumerate_connected(int e) {
  std::vector<Multigraph> out;
  for (auto& [key, g] : connected_by_key(e)) out.push_back(std::move(g));
  return out;
}

std::vector<Multigraph> enumerate_multigraphs(int d) {
  if (d < 1) throw std::invalid_argument("edge count must be at least 1");
  struct Piece {
    CanonicalKey key;
    Multigraph graph;
    int edges;
  };
  std::vector<Piece> pieces;
  for (int e = 1; e <= d; ++e)
    for (auto& [key, g] : connected_by_key(e)) pieces.push_back({key, g, e});

  std::map<CanonicalKey, Multigraph> result;
  std::vector<size_t> chosen;
  // Multisets of components as non-decreasing index sequences.
  auto rec = [&](auto&& self, size_t start, int remaining) -> void {
    if (remaining == 0) {
      std::vector<size_t> by_key = chosen;
      std::sort(by_key.begin(), by_key.end(), [&](size_t a, size_t b) { return pieces[a].key < pieces[b].key; });
      Multigraph g;
      for (size_t i : by_key) g = disjoint_union(g, pieces[i].graph);
      result.emplace(canonical_form(g), std::move(g));
      return;
    }
    for (size_t i = start; i < pieces.size(); ++i) {
      if (pieces[i].edges > remaining) continue;
      chosen.push_back(i);
      self(self, i, remaining - pieces[i].edges);
      chosen.pop_back();
    }
  };
  rec(rec, 0, d);
  std::vector<Multigraph> out;
  for (auto& [key, g] : result) out.push_back(std::move(g));
  return out;
}

}  // namespace sgm
