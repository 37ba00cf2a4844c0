#pragma once

#include <vector>

#include "sgm/multigraph.hpp"

namespace sgm {

/// Connected loopless multigraphs with exactly e edges (with multiplicity),
/// one per isomorphism class, each in its canonical labelling, sorted by key.
std::vector<Multigraph> enumerate_connected(int e);

/// One representative per isomorphism class of loopless multigraphs with d
/// edges and no isolated vertices. Components are laid out in key order, each
/// in its canonical labelling, and every edge points from the lower to the
/// higher vertex index. Sorted by canonical key.
std::vector<Multigraph> enumerate_multigraphs(int d);

}  // namespace sgm
