#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcut/bigint.hpp"
#include "relcut/cuts.hpp"
#include "relcut/multigraph.hpp"

namespace relcut {

/// Maximal path whose internal vertices have degree 2 in the host and whose
/// two distinct endpoints have degree greater than 2. Edge ids and internal
/// vertices run from endpoint_a to endpoint_b, with endpoint_a < endpoint_b.
struct Chain {
  std::vector<int> edge_ids;
  int endpoint_a = -1;
  int endpoint_b = -1;
  std::vector<int> internal_vertices;

  int length() const noexcept { return static_cast<int>(edge_ids.size()); }
};

class DecomposeError : public std::runtime_error {
 public:
  enum class Kind { NotSimple, NotTwoConnected, TooFewEdges };

  DecomposeError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Partition of a host graph's edges into chains, together with the
/// distillation (each chain collapsed to a single edge). Distillation edge i
/// corresponds to chain i; distillation vertices are the host vertices of
/// degree > 2, renumbered in ascending host order and keeping their labels.
class ChainDecomposition {
 public:
  ChainDecomposition(MultiGraph host, std::vector<Chain> chains, MultiGraph distillation,
                     std::vector<int> chain_of_edge, std::vector<int> branch_of_host,
                     std::vector<int> host_of_branch);

  const MultiGraph& host() const noexcept { return host_; }
  const std::vector<Chain>& chains() const noexcept { return chains_; }
  int chain_count() const noexcept { return static_cast<int>(chains_.size()); }
  const MultiGraph& distillation() const noexcept { return distillation_; }

  int chain_of_edge(int host_edge_id) const;
  int chain_of_distillation_edge(int d_edge_id) const;
  int distillation_vertex(int host_vertex) const;  // -1 for degree-2 vertices
  int host_vertex(int distillation_vertex) const;

  std::vector<int> chain_lengths() const;

 private:
  MultiGraph host_;
  std::vector<Chain> chains_;
  MultiGraph distillation_;
  std::vector<int> chain_of_edge_;
  std::vector<int> branch_of_host_;
  std::vector<int> host_of_branch_;
};

/// Chain decomposition of a simple 2-connected graph with more edges than
/// vertices. Chains are ordered by their smallest edge id. Precondition
/// failures raise DecomposeError with a distinct kind.
ChainDecomposition decompose(const MultiGraph& g);

/// Construction recipe: every edge of the base in short_edges is replaced by
/// a chain of length s, every other edge by a chain of length s+1.
struct EnlargedGraphSpec {
  MultiGraph base;      // cubic, simple, 2-connected
  EdgeSet short_edges;  // edge ids of the base
  int s = 1;
};

/// Subdivision vertices are appended after the base vertices, per base edge
/// in ascending edge id, ordered along the path from the lower-numbered
/// endpoint. The edge order follows the same rule, so the result is a fixed
/// graph, not merely one fixed up to isomorphism.
MultiGraph enlarge(const EnlargedGraphSpec& spec);

/// True iff all chain lengths differ pairwise by at most 1.
bool is_fair(const MultiGraph& g);

/// Exact elementary symmetric polynomial e_k of the given values (0 when k
/// exceeds the count, 1 when k == 0).
BigInt elementary_symmetric(const std::vector<int>& values, int k);

/// e_k of the balanced tuple of t positive integers summing to m: the common
/// maximum of e_k over all such tuples. Requires 2 <= k <= t <= m.
BigInt fair_maximum(int t, int m, int k);

/// Sum over k-subsets H of chains whose removal disconnects the host of the
/// product of the chain lengths in H. Membership is decided twice, by
/// chain removal on the host and by edge-cut test on the distillation; a
/// disagreement (never expected) throws std::logic_error.
BigInt mu_k_induced(const ChainDecomposition& decomposition, int k);

/// Same sum, split by the classification of the inducing distillation cut.
/// Nontrivial cuts are bucketed by the signature of their smallest separated
/// set, as in cut_type_census.
struct InducedCutCounts {
  BigInt vertex_separating{0};
  BigInt edge_separating{0};
  std::map<std::string, BigInt> nontrivial;
  BigInt total() const;
};

InducedCutCounts mu_k_induced_by_type(const ChainDecomposition& decomposition, int k);

/// Exact cut count through the chain structure:
///   mu_k = C(m,k) - e_k(chain lengths) + mu_k_induced.
BigInt mu_k_via_chain_formula(const ChainDecomposition& decomposition, int k);

/// Structural minimality conditions on a decomposition: the distillation is
/// simple, cubic, on 2c-2 vertices with edge connectivity 3, and the chain
/// lengths follow the balanced profile determined by m = (3c-3)s + r.
struct BauerReport {
  int corank = 0;
  int s = 0;
  int r = 0;
  bool distillation_simple = false;
  bool distillation_cubic = false;
  bool distillation_size_ok = false;
  bool distillation_lambda3 = false;
  bool chain_profile_ok = false;

  bool distillation_clause() const {
    return distillation_simple && distillation_cubic && distillation_size_ok &&
           distillation_lambda3;
  }
  bool all() const { return distillation_clause() && chain_profile_ok; }
};

BauerReport check_bauer_conditions(const ChainDecomposition& decomposition);

/// The stronger three-clause condition set: additionally the distillation
/// must attain the minimum 3-cut count among connected cubic simple graphs on
/// the same vertex count, and the long/short chains must be placed correctly
/// (a matching of chains, or mixed lengths at every branch vertex, depending
/// on the remainder r).
struct WangReport {
  int corank = 0;
  int s = 0;
  int r = 0;
  bool distillation_simple = false;
  bool distillation_cubic = false;
  bool distillation_size_ok = false;
  bool distillation_min_mu3 = false;
  bool distillation_lambda3 = false;
  bool chain_profile_ok = false;
  bool placement_ok = false;

  bool distillation_clause() const {
    return distillation_simple && distillation_cubic && distillation_size_ok &&
           distillation_min_mu3 && distillation_lambda3;
  }
  bool all() const { return distillation_clause() && chain_profile_ok && placement_ok; }
};

WangReport check_wang_m3_conditions(const ChainDecomposition& decomposition);

/// JSON report: chains with endpoint display names and lengths, plus the
/// distillation edge list.
std::string chain_report_json(const ChainDecomposition& decomposition);

}  // namespace relcut
