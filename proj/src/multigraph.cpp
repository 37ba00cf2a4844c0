#include "sgm/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sgm {

Multigraph::Multigraph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("negative vertex count");
  std::map<std::pair<int, int>, int> merged;
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("loops are not allowed");
    if (e.mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
    merged[{e.from, e.to}] += e.mult;
  }
  for (const auto& [ends, mult] : merged) edges_.push_back({ends.first, ends.second, mult});
}

int Multigraph::edge_count() const {
  int d = 0;
  for (const auto& e : edges_) d += e.mult;
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    deg[e.from] += e.mult;
    deg[e.to] += e.mult;
  }
  return deg;
}

int Multigraph::non_isolated_count() const {
  auto deg = degrees();
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int x) { return x > 0; }));
}

int Multigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (const auto& e : edges_)
    if ((e.from == u && e.to == v) || (e.from == v && e.to == u)) m += e.mult;
  return m;
}

std::vector<std::vector<int>> components(const Multigraph& g) {
  const int n = g.n_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(e.from)] = find(e.to);
  auto deg = g.degrees();
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v)
    if (deg[v] > 0) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

bool Multigraph::is_connected_ignoring_isolated() const { return components(*this).size() <= 1; }

Multigraph Multigraph::relabeled(const std::vector<int>& image, int image_vertices) const {
  if (static_cast<int>(image.size()) != n_) throw std::invalid_argument("relabeling has wrong length");
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back({image[e.from], image[e.to], e.mult});
  return Multigraph(image_vertices, std::move(es));
}

Multigraph Multigraph::without_isolated() const {
  auto deg = degrees();
  std::vector<int> image(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (deg[v] > 0) image[v] = next++;
  std::vector<Edge> es;
  for (const auto& e : edges_) es.push_back({image[e.from], image[e.to], e.mult});
  return Multigraph(next, std::move(es));
}

Multigraph Multigraph::with_reversed_group(size_t index) const {
  std::vector<Edge> es = edges_;
  std::swap(es.at(index).from, es.at(index).to);
  return Multigraph(n_, std::move(es));
}

namespace {

char multiplicity_char(int m) {
  if (m < 10) return static_cast<char>('0' + m);
  if (m < 36) return static_cast<char>('a' + (m - 10));
  throw std::out_of_range("edge multiplicity too large for canonical key");
}

// Key of the undirected adjacency matrix read in the given vertex order.
std::string matrix_key(const std::vector<std::vector<int>>& adj, const std::vector<int>& order) {
  std::string s;
  const size_t k = order.size();
  s.reserve(k * (k - 1) / 2);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) s.push_back(multiplicity_char(adj[order[i]][order[j]]));
  return s;
}

}  // namespace

CanonicalLabeling canonical_labeling_connected(const Multigraph& g) {
  const int n = g.n_vertices();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    adj[e.from][e.to] += e.mult;
    adj[e.to][e.from] += e.mult;
  }
  auto deg = g.degrees();
  // Only orderings with degrees weakly decreasing are searched; the degree
  // sequence is itself invariant, so the minimum stays canonical.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<std::pair<size_t, size_t>> blocks;
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j < order.size() && deg[order[j]] == deg[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);

  std::string prefix = std::to_string(n) + ":";
  for (int v : order) prefix += multiplicity_char(deg[v]);
  prefix += ":";

  std::string best;
  std::vector<int> best_order;
  // Odometer over the per-block permutations.
  while (true) {
    std::string key = matrix_key(adj, order);
    if (best_order.empty() || key < best) {
      best = std::move(key);
      best_order = order;
    }
    size_t b = blocks.size();
    while (b > 0) {
      auto [lo, hi] = blocks[b - 1];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
      --b;  // this block wrapped around to sorted order; carry
    }
    if (b == 0) break;
  }
  return {prefix + best, best_order};
}

CanonicalKey canonical_form(const Multigraph& g) {
  std::vector<CanonicalKey> keys;
  for (const auto& comp : components(g)) {
    std::vector<int> image(g.n_vertices(), 0);
    for (size_t i = 0; i < comp.size(); ++i) image[comp[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const auto& e : g.edges())
      if (std::binary_search(comp.begin(), comp.end(), e.from)) es.push_back({image[e.from], image[e.to], e.mult});
    keys.push_back(canonical_labeling_connected(Multigraph(static_cast<int>(comp.size()), std::move(es))).key);
  }
  std::sort(keys.begin(), keys.end());
  CanonicalKey out;
  for (const auto& k : keys) {
    if (!out.empty()) out += "|";
    out += k;
  }
  return out;
}

Multigraph double_graph(const Multigraph& g) {
  std::vector<Edge> es = g.edges();
  for (auto& e : es) e.mult *= 2;
  return Multigraph(g.n_vertices(), std::move(es));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> es = a.edges();
  for (const auto& e : b.edges()) es.push_back({e.from + a.n_vertices(), e.to + a.n_vertices(), e.mult});
  return Multigraph(a.n_vertices() + b.n_vertices(), std::move(es));
}

std::string describe(const Multigraph& g) {
  std::string s;
  for (const auto& e : g.edges()) {
    if (!s.empty()) s += " ";
    s += std::to_string(e.from + 1) + "->" + std::to_string(e.to + 1);
    if (e.mult > 1) s += "x" + std::to_string(e.mult);
  }
  return s.empty() ? "(empty)" : s;
}

}  // namespace sgm
