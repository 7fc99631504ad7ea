#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace relcut {

/// Loop-free undirected multigraph. Vertices are 0..n-1, edges are addressed
/// by their index in construction order and never move afterwards. Parallel
/// edges are allowed; loops are rejected at construction.
///
/// Values are immutable after construction and safe to share across threads.
class MultiGraph {
 public:
  MultiGraph(int n, std::vector<std::pair<int, int>> edges);
  MultiGraph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> vertex_labels);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::pair<int, int> edge(int id) const;
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Display name of a vertex (defaults to its decimal index). Labels carry
  /// external naming conventions through reports; they do not affect any
  /// computation.
  const std::string& vertex_label(int v) const;
  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }

  int degree(int v) const;
  int min_degree() const;

  /// True iff no two edges join the same vertex pair.
  bool is_simple() const;

  /// Count of edges joining u and v (order-insensitive).
  int multiplicity(int u, int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
};

/// Immutable, duplicate-free set of edge ids of a specific graph. Ids are kept
/// sorted ascending.
class EdgeSet {
 public:
  EdgeSet(const MultiGraph& g, std::vector<int> ids);
  static EdgeSet empty(const MultiGraph& g) { return EdgeSet(g, {}); }

  const std::vector<int>& ids() const noexcept { return ids_; }
  int size() const noexcept { return static_cast<int>(ids_.size()); }
  bool contains(int id) const;

  bool operator==(const EdgeSet& other) const { return ids_ == other.ids_; }

 private:
  std::vector<int> ids_;
};

/// True iff g has exactly one connected component; isolated vertices count as
/// components. A one-vertex graph is connected.
bool is_connected(const MultiGraph& g);

struct EdgeRemoval {
  MultiGraph graph;
  /// old edge id -> new edge id, -1 for removed edges.
  std::vector<int> old_to_new;
};

/// Same vertex set, edges of g minus the given set; surviving edges keep
/// their relative order.
EdgeRemoval remove_edges(const MultiGraph& g, const EdgeSet& cut);

/// True iff removing the set disconnects g. Requires g connected.
bool is_edge_cut(const MultiGraph& g, const EdgeSet& cut);

/// Smallest k such that some k-subset of edges disconnects g, by exhaustive
/// search over subset sizes. Requires g connected and n >= 2.
int edge_connectivity(const MultiGraph& g);

MultiGraph make_cycle(int n);
MultiGraph make_path(int n);
/// Two hub vertices joined by three internally disjoint paths of the given
/// edge lengths (each >= 1, at most one of length 1 to stay simple).
MultiGraph make_theta(int a, int b, int c);

/// Vertex relabeling: vertex v of g becomes perm[v]; edge order is preserved.
MultiGraph apply_vertex_permutation(const MultiGraph& g, const std::vector<int>& perm);

/// Text edge-list format: header line "n m", then m lines "u v" (0-based),
/// lines starting with '#' ignored. The writer emits edges in id order, so a
/// read/write cycle of writer output is byte-identical.
MultiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const MultiGraph& g);

}  // namespace relcut
