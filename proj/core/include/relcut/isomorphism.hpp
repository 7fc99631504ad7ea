#pragma once

#include <string>
#include <vector>

#include "relcut/multigraph.hpp"

namespace relcut {

/// Brute-force search bound; every intended use is an 8-vertex distillation.
inline constexpr int kIsomorphismVertexLimit = 12;

/// Exact isomorphism test by backtracking vertex mapping with a degree
/// pre-filter. Throws if either graph exceeds kIsomorphismVertexLimit.
bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// The full automorphism group as vertex permutations (perm[v] = image of v).
/// The identity is always included. Same size guard as are_isomorphic.
std::vector<std::vector<int>> automorphisms(const MultiGraph& g);

/// Canonical name of a small graph, stable across vertex relabelings:
/// "K1", "K2", paths "Pn", cycles "Cn", complete "Kn", and an exact
/// permutation-canonical code "g<n>:<code>" for other graphs up to 9
/// vertices. Larger irregular graphs get a coarse "n<n>m<m>" tag.
std::string graph_signature(const MultiGraph& g);

}  // namespace relcut
