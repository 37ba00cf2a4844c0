#pragma once

#include <vector>

#include "sgm/elementary.hpp"
#include "sgm/multigraph.hpp"
#include "sgm/poly.hpp"
#include "sgm/sympoly.hpp"

namespace sgm {

/// prod over edge groups (i -> j, m) of (x_i - x_j)^m, in g.n_vertices() variables.
Poly graph_monomial(const Multigraph& g);

/// sum over sigma in S_n of P_g(sigma x) for n >= the number of non-isolated
/// vertices of g. Isolated vertices of g are dropped first, so n only has to
/// cover the vertices that carry edges.
SymPoly symmetrized_graph_monomial(const Multigraph& g, int n);

/// Signed partition-coloring count of g for alpha.
struct ColoringCount {
  Integer positive = 0;
  Integer negative = 0;
  Integer signed_value() const { return positive - negative; }
};

/// Colorings that paint one distinct vertex per part alpha_i together with
/// alpha_i of its incident edges, every edge painted exactly once. An edge is
/// odd when its color is that of its head; the sign is the parity of odd edges.
/// Parallel edges are distinguishable.
ColoringCount count_partition_colorings(const Multigraph& g, const Partition& alpha);

/// (n - len(alpha))! * (positive - negative): the coefficient of x^alpha in the
/// n-variable symmetrization. The factorial counts the placements of the
/// unpainted vertices, which the coloring itself does not see.
Rational coeff_by_coloring(const Multigraph& g, const Partition& alpha, int n);

/// homogenize(to_elementary(g~), d) with d the edge count of g.
ElemPoly q_covariant(const Multigraph& g, int n);

}  // namespace sgm
