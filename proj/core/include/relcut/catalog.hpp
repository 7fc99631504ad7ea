#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relcut/multigraph.hpp"

namespace relcut::catalog {

/// A named reference object: either a graph, an edge set of a named host
/// graph, or a vertex set of a named host graph. Vertex labels follow the
/// conventional 1-based drawings, so reports can be checked against them by
/// eye; edge ids follow the drawing order (8 rim edges, then 4 chords for the
/// cubic graphs).
struct Entry {
  std::string name;
  std::string host;  // equals name for graph entries
  MultiGraph graph;  // the graph itself, or the host of the set
  std::optional<EdgeSet> edge_set;
  std::optional<std::vector<int>> vertex_set;

  bool is_graph() const { return !edge_set && !vertex_set; }
};

const Entry& get(const std::string& name);  // throws std::out_of_range on unknown names
std::vector<std::string> names();

/// Convenience accessors; throw when the entry is not of the requested kind.
const MultiGraph& graph(const std::string& name);
const EdgeSet& edge_set(const std::string& name);

/// All connected cubic simple graphs on n vertices, one per isomorphism
/// class, by degree-constrained backtracking with isomorphism rejection.
/// Guard: n even, 4 <= n <= 10.
std::vector<MultiGraph> cubic_graphs(int n);

/// Every perfect matching of g as an edge set, in lexicographic edge-id
/// order. Guard: n even, n <= 12.
std::vector<EdgeSet> perfect_matchings(const MultiGraph& g);

/// Partition of the given matchings into orbits under the automorphism group
/// of g (indices into the input list; orbits ordered by smallest member).
/// Requires g simple so that vertex maps induce unambiguous edge maps.
std::vector<std::vector<int>> matching_orbits(const MultiGraph& g,
                                              const std::vector<EdgeSet>& matchings);

}  // namespace relcut::catalog
