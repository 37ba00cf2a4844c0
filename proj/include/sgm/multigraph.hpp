#pragma once

#include <string>
#include <vector>

namespace sgm {

/// A directed edge group: `mult` parallel edges from `from` to `to`
/// (0-based vertex indices).
struct Edge {
  int from;
  int to;
  int mult;
  auto operator<=>(const Edge&) const = default;
};

/// Loopless directed multigraph. Edge groups are kept sorted and merged, so
/// two Multigraph values compare equal iff they have the same labelled
/// directed edges.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Total edge count d, with multiplicity.
  int edge_count() const;
  int non_isolated_count() const;
  /// Undirected multiplicity between u and v.
  int multiplicity(int u, int v) const;
  std::vector<int> degrees() const;
  bool is_connected_ignoring_isolated() const;

  /// Same graph with isolated vertices removed and the rest renumbered in order.
  Multigraph without_isolated() const;
  /// Vertex i becomes image[i]; the result has image_vertices vertices.
  Multigraph relabeled(const std::vector<int>& image, int image_vertices) const;
  /// Edge group `index` reversed.
  Multigraph with_reversed_group(size_t index) const;

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Isomorphism-invariant key of the underlying undirected multigraph, ignoring
/// isolated vertices.
using CanonicalKey = std::string;

CanonicalKey canonical_form(const Multigraph& g);

/// Canonical labelling of a connected multigraph (no isolated vertices):
/// order[k] is the original vertex placed at canonical position k.
struct CanonicalLabeling {
  CanonicalKey key;
  std::vector<int> order;
};
CanonicalLabeling canonical_labeling_connected(const Multigraph& g);

/// Connected components (vertex lists), isolated vertices excluded.
std::vector<std::vector<int>> components(const Multigraph& g);

/// Every multiplicity doubled.
Multigraph double_graph(const Multigraph& g);

/// Disjoint union; the vertices of b follow those of a.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Human-readable "1->2x2 2->3" form (1-based).
std::string describe(const Multigraph& g);

}  // namespace sgm
