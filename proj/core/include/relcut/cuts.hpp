#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcut/bigint.hpp"
#include "relcut/multigraph.hpp"

namespace relcut {

/// Enumeration cost cap, counted in subsets examined (machine-independent).
struct EnumerationBudget {
  std::uint64_t max_subsets = 100'000'000ULL;
};

/// Raised before any enumeration whose planned subset count exceeds the
/// budget; results are never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The sequence mu_0..mu_m of k-edge-cut counts of a graph, with corank
/// c = m - n + 1 carried as metadata. Entries may be absent when a partial
/// spectrum was requested and the corank rule mu_k = C(m,k) (valid for all
/// k >= c+1) does not apply.
class CutSpectrum {
 public:
  CutSpectrum(int vertex_count, int edge_count);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }
  int corank() const noexcept { return m_ - n_ + 1; }

  bool has(int k) const;
  const BigInt& mu(int k) const;  // throws std::logic_error if absent
  void set(int k, BigInt value);
  bool complete() const;

 private:
  int n_;
  int m_;
  std::vector<std::optional<BigInt>> counts_;
};

/// Exact number of k-subsets of edges whose removal disconnects g.
BigInt mu_k_bruteforce(const MultiGraph& g, int k, const EnumerationBudget& budget = {});

/// Full spectrum by exhaustive 2^m subset enumeration.
CutSpectrum cut_spectrum(const MultiGraph& g, const EnumerationBudget& budget = {});

/// Spectrum with mu_0..mu_k_max enumerated per-k; entries above k_max are
/// filled by the corank rule where it applies and left absent otherwise.
CutSpectrum cut_spectrum(const MultiGraph& g, int k_max, const EnumerationBudget& budget = {});

/// Streams every k-edge-cut exactly once, in lexicographic order of edge ids.
void enumerate_cuts(const MultiGraph& g, int k,
                    const std::function<void(const EdgeSet&)>& emit,
                    const EnumerationBudget& budget = {});

enum class CutKind { VertexSeparating, EdgeSeparating, Nontrivial };

struct SeparatedSet {
  std::vector<int> vertices;  // sorted ascending
  std::string signature;      // graph_signature of the induced subgraph
};

/// A cut's separated sets are the components of g - F containing no edge of
/// F; the kind is assigned with priority vertex > edge > nontrivial.
struct CutClassification {
  CutKind kind;
  std::vector<SeparatedSet> separated_sets;  // sorted by (size, vertices)
};

CutClassification classify_cut(const MultiGraph& g, const EdgeSet& cut);

/// Exhaustive classification of all k-edge-cuts. Nontrivial cuts are bucketed
/// by the signature of their smallest separated set.
struct CutCensus {
  BigInt vertex_separating{0};
  BigInt edge_separating{0};
  std::map<std::string, BigInt> nontrivial;
  BigInt total() const;
};

CutCensus cut_type_census(const MultiGraph& g, int k, const EnumerationBudget& budget = {});

/// Exact spanning-tree count via the Laplacian minor determinant, evaluated
/// with fraction-free integer elimination. 0 for disconnected graphs.
BigInt spanning_tree_count(const MultiGraph& g);

/// CSV rows "k,mu_k,binom_m_k" for every present entry.
void write_spectrum_csv(std::ostream& out, const CutSpectrum& spectrum);

/// Census as JSON: {"V": ..., "E": ..., "N": {signature: count}, "total": ...}.
std::string census_json(const CutCensus& census);

}  // namespace relcut
