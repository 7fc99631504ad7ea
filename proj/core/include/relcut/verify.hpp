#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relcut/chains.hpp"
#include "relcut/cuts.hpp"
#include "relcut/reliability.hpp"

namespace relcut::verify {

/// One verified value: what was expected, what was computed, and where the
/// expectation comes from ("stated" reference value, "closed-form" polynomial
/// in s, "enumeration" oracle, or "consistency" between two computed routes).
struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  std::string source;
  bool pass = false;
};

struct Section {
  std::string id;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const;
};

/// Exact reliability polynomials produced by the s = 1 full-spectrum stage,
/// for curve emission.
struct MainTheoremArtifacts {
  std::optional<ReliabilityPolynomial> locally_best_near_zero;  // enlargement of W by M1
  std::optional<ReliabilityPolynomial> better_near_one;         // enlargement of W by X
};

struct Report {
  int schema = 1;
  int s = 1;
  std::uint64_t budget = 0;
  std::vector<Section> sections;
  std::int64_t elapsed_ms = 0;
  std::string generated_at;

  bool pass() const;
};

/// The five verification stages. Exhaustive cross-checks are gated by s
/// (3-/4-cut enumeration up to s = 2, 5-cut enumeration and full spectra at
/// s = 1); the closed-form and structural checks run for any s >= 1.
Section verify_remark_cubic8();
Section verify_min_mu3(int s, const EnumerationBudget& budget);
Section verify_mu4(int s, const EnumerationBudget& budget);
Section verify_mu5(int s, const EnumerationBudget& budget);
Section verify_main_theorem(int s, const EnumerationBudget& budget,
                            MainTheoremArtifacts* artifacts = nullptr);

Report run(int s, const EnumerationBudget& budget = {},
           MainTheoremArtifacts* artifacts = nullptr);

/// Deterministic JSON rendering; with include_meta the elapsed time and a
/// timestamp are appended (and byte-identical output is no longer expected).
std::string report_json(const Report& report, bool include_meta);

/// mu_0..mu_m of the host, exact for every k: the chain formula below the
/// corank threshold, the forced binomial value above it.
CutSpectrum formula_spectrum(const ChainDecomposition& decomposition);

/// The named enlargements used throughout the pipeline.
struct Construction {
  std::string name;
  MultiGraph graph;
};
std::vector<Construction> min_mu3_candidates(int s);  // enlargements of W and Q by M1..M5
Construction near_one_rival(int s);                   // enlargement of W by X

}  // namespace relcut::verify
