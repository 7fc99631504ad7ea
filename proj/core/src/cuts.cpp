#include "relcut/cuts.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "enumeration.hpp"
#include "relcut/isomorphism.hpp"

namespace relcut {

namespace {

void check_budget(const BigInt& planned, const EnumerationBudget& budget, const char* where) {
  if (planned > BigInt(budget.max_subsets))
    throw BudgetExceeded(std::string(where) + ": planned " + planned.str() +
                         " subsets exceeds budget " + std::to_string(budget.max_subsets));
}

void check_k_range(int k, int m, const char* where) {
  if (k < 0 || k > m) throw std::invalid_argument(std::string(where) + ": k out of range");
}

}  // namespace

CutSpectrum::CutSpectrum(int vertex_count, int edge_count)
    : n_(vertex_count), m_(edge_count), counts_(edge_count + 1) {
  if (n_ < 1 || m_ < 0) throw std::invalid_argument("CutSpectrum: bad dimensions");
}

bool CutSpectrum::has(int k) const {
  return k >= 0 && k <= m_ && counts_[k].has_value();
}

const BigInt& CutSpectrum::mu(int k) const {
  if (k < 0 || k > m_) throw std::out_of_range("CutSpectrum: k out of range");
  if (!counts_[k]) throw std::logic_error("CutSpectrum: mu_" + std::to_string(k) + " absent");
  return *counts_[k];
}

void CutSpectrum::set(int k, BigInt value) {
  if (k < 0 || k > m_) throw std::out_of_range("CutSpectrum: k out of range");
  counts_[k] = std::move(value);
}

bool CutSpectrum::complete() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& c) { return c.has_value(); });
}

BigInt mu_k_bruteforce(const MultiGraph& g, int k, const EnumerationBudget& budget) {
  const int m = g.edge_count();
  check_k_range(k, m, "mu_k_bruteforce");
  check_budget(binomial(m, k), budget, "mu_k_bruteforce");
  detail::ConnectivityScratch scratch(g.vertex_count());
  std::vector<char> removed(m, 0);
  std::uint64_t count = 0;
  detail::for_each_combination(m, k, [&](const std::vector<int>& pick) {
    for (int id : pick) removed[id] = 1;
    if (!scratch.connected_without(g, removed)) ++count;
    for (int id : pick) removed[id] = 0;
  });
  return BigInt(count);
}

CutSpectrum cut_spectrum(const MultiGraph& g, const EnumerationBudget& budget) {
  const int m = g.edge_count();
  check_budget(pow2(m), budget, "cut_spectrum");
  CutSpectrum spectrum(g.vertex_count(), m);
  std::vector<std::uint64_t> counts(m + 1, 0);
  detail::ConnectivityScratch scratch(g.vertex_count());
  std::vector<char> removed(m, 0);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int id = 0; id < m; ++id) removed[id] = (mask >> id) & 1u;
    if (!scratch.connected_without(g, removed)) ++counts[std::popcount(mask)];
  }
  for (int k = 0; k <= m; ++k) spectrum.set(k, BigInt(counts[k]));
  return spectrum;
}

CutSpectrum cut_spectrum(const MultiGraph& g, int k_max, const EnumerationBudget& budget) {
  const int m = g.edge_count();
  check_k_range(k_max, m, "cut_spectrum");
  if (k_max == m) return cut_spectrum(g, budget);
  CutSpectrum spectrum(g.vertex_count(), m);
  const int corank = spectrum.corank();
  // Removing more than corank edges leaves fewer than n-1 edges, hence always
  // a disconnected graph; those entries need no enumeration.
  BigInt planned = 0;
  for (int k = 0; k <= std::min(k_max, corank); ++k) planned += binomial(m, k);
  check_budget(planned, budget, "cut_spectrum");
  for (int k = 0; k <= m; ++k) {
    if (k >= corank + 1)
      spectrum.set(k, binomial(m, k));
    else if (k <= k_max)
      spectrum.set(k, mu_k_bruteforce(g, k, EnumerationBudget{std::uint64_t(-1)}));
  }
  return spectrum;
}

void enumerate_cuts(const MultiGraph& g, int k,
                    const std::function<void(const EdgeSet&)>& emit,
                    const EnumerationBudget& budget) {
  const int m = g.edge_count();
  check_k_range(k, m, "enumerate_cuts");
  check_budget(binomial(m, k), budget, "enumerate_cuts");
  detail::ConnectivityScratch scratch(g.vertex_count());
  std::vector<char> removed(m, 0);
  detail::for_each_combination(m, k, [&](const std::vector<int>& pick) {
    for (int id : pick) removed[id] = 1;
    if (!scratch.connected_without(g, removed)) emit(EdgeSet(g, pick));
    for (int id : pick) removed[id] = 0;
  });
}

CutClassification classify_cut(const MultiGraph& g, const EdgeSet& cut) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<char> removed(m, 0);
  for (int id : cut.ids()) {
    if (id < 0 || id >= m) throw std::invalid_argument("classify_cut: invalid edge id");
    removed[id] = 1;
  }
  // Component labels of g - F.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int id = 0; id < m; ++id) {
    if (removed[id]) continue;
    auto [u, v] = g.edges()[id];
    parent[find(u)] = find(v);
  }
  std::vector<std::vector<int>> components;
  {
    std::vector<int> comp_of_root(n, -1);
    for (int v = 0; v < n; ++v) {
      int root = find(v);
      if (comp_of_root[root] < 0) {
        comp_of_root[root] = static_cast<int>(components.size());
        components.emplace_back();
      }
      components[comp_of_root[root]].push_back(v);
    }
  }
  if (components.size() < 2) throw std::invalid_argument("classify_cut: set is not an edge-cut");

  CutClassification result;
  std::vector<int> comp_of(n);
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int v : components[c]) comp_of[v] = c;
  for (const auto& comp : components) {
    bool internal_cut_edge = false;
    for (int id : cut.ids()) {
      auto [u, v] = g.edges()[id];
      if (comp_of[u] == comp_of[comp[0]] && comp_of[v] == comp_of[comp[0]]) {
        internal_cut_edge = true;
        break;
      }
    }
    if (internal_cut_edge) continue;
    SeparatedSet set;
    set.vertices = comp;  // already ascending by construction
    // Induced subgraph on the separated set; none of its edges are in F.
    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) local[comp[i]] = i;
    std::vector<std::pair<int, int>> induced;
    for (auto [u, v] : g.edges())
      if (local[u] >= 0 && local[v] >= 0) induced.emplace_back(local[u], local[v]);
    set.signature = graph_signature(MultiGraph(static_cast<int>(comp.size()), std::move(induced)));
    result.separated_sets.push_back(std::move(set));
  }
  std::sort(result.separated_sets.begin(), result.separated_sets.end(),
            [](const SeparatedSet& a, const SeparatedSet& b) {
              if (a.vertices.size() != b.vertices.size())
                return a.vertices.size() < b.vertices.size();
              return a.vertices < b.vertices;
            });
  result.kind = CutKind::Nontrivial;
  for (const auto& set : result.separated_sets) {
    if (set.vertices.size() == 1) {
      result.kind = CutKind::VertexSeparating;
      break;
    }
    if (set.vertices.size() == 2) result.kind = CutKind::EdgeSeparating;
  }
  return result;
}

BigInt CutCensus::total() const {
  BigInt t = vertex_separating + edge_separating;
  for (const auto& [sig, count] : nontrivial) t += count;
  return t;
}

CutCensus cut_type_census(const MultiGraph& g, int k, const EnumerationBudget& budget) {
  CutCensus census;
  enumerate_cuts(
      g, k,
      [&](const EdgeSet& cut) {
        const CutClassification cls = classify_cut(g, cut);
        switch (cls.kind) {
          case CutKind::VertexSeparating:
            census.vertex_separating += 1;
            break;
          case CutKind::EdgeSeparating:
            census.edge_separating += 1;
            break;
          case CutKind::Nontrivial: {
            const std::string key =
                cls.separated_sets.empty() ? "(none)" : cls.separated_sets.front().signature;
            census.nontrivial[key] += 1;
            break;
          }
        }
      },
      budget);
  return census;
}

BigInt spanning_tree_count(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  const int d = n - 1;
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d, 0));
  for (auto [u, v] : g.edges()) {
    if (u < d) a[u][u] += 1;
    if (v < d) a[v][v] += 1;
    if (u < d && v < d) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss fraction-free elimination; all divisions are exact.
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < d; ++col) {
    if (a[col][col] == 0) {
      int pivot_row = -1;
      for (int row = col + 1; row < d; ++row)
        if (a[row][col] != 0) {
          pivot_row = row;
          break;
        }
      if (pivot_row < 0) return 0;
      std::swap(a[col], a[pivot_row]);
      sign = -sign;
    }
    for (int row = col + 1; row < d; ++row)
      for (int j = col + 1; j < d; ++j)
        a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
    prev = a[col][col];
  }
  BigInt det = a[d - 1][d - 1];
  if (sign < 0) det = -det;
  return det;
}

void write_spectrum_csv(std::ostream& out, const CutSpectrum& spectrum) {
  out << "k,mu_k,binom_m_k\n";
  for (int k = 0; k <= spectrum.edge_count(); ++k) {
    if (!spectrum.has(k)) continue;
    out << k << ',' << spectrum.mu(k).str() << ',' << binomial(spectrum.edge_count(), k).str()
        << '\n';
  }
}

std::string census_json(const CutCensus& census) {
  nlohmann::ordered_json j;
  j["V"] = census.vertex_separating.str();
  j["E"] = census.edge_separating.str();
  nlohmann::ordered_json n = nlohmann::ordered_json::object();
  for (const auto& [sig, count] : census.nontrivial) n[sig] = count.str();
  j["N"] = std::move(n);
  j["total"] = census.total().str();
  return j.dump(2);
}

}  // namespace relcut
