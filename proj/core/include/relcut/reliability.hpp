#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relcut/bigint.hpp"
#include "relcut/cuts.hpp"
#include "relcut/multigraph.hpp"

namespace relcut {

/// Exact integer coefficients of R(rho) = 1 - sum_k mu_k rho^k (1-rho)^(m-k)
/// in the monomial basis. The source spectrum is retained.
class ReliabilityPolynomial {
 public:
  /// Requires a complete spectrum (all of mu_0..mu_m present).
  explicit ReliabilityPolynomial(CutSpectrum spectrum);

  int edge_count() const noexcept { return m_; }
  /// coefficients()[d] multiplies rho^d; size is m+1.
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  const CutSpectrum& spectrum() const noexcept { return spectrum_; }

  bool operator==(const ReliabilityPolynomial& other) const {
    return coefficients_ == other.coefficients_;
  }

 private:
  int m_;
  std::vector<BigInt> coefficients_;
  CutSpectrum spectrum_;
};

ReliabilityPolynomial polynomial_from_spectrum(CutSpectrum spectrum);

/// Exact value at a rational failure probability in [0, 1].
BigRat evaluate(const ReliabilityPolynomial& poly, const BigRat& rho);

/// Direct evaluation of the defining sum, without the monomial expansion.
/// An independent arithmetic route kept for cross-checking the expansion.
BigRat bernstein_evaluate(const CutSpectrum& spectrum, const BigRat& rho);

enum class CompareVerdict { FirstBetter, SecondBetter, Equal };

struct CompareOutcome {
  CompareVerdict verdict;
  int first_diff_index = -1;  // -1 when Equal
  BigInt mu_first;            // values at the first differing index
  BigInt mu_second;
};

/// Lexicographic spectrum comparison from k = 0 upward; fewer cuts at the
/// first differing index wins (greater reliability for small rho). Requires
/// equal edge counts and enough known entries to reach a decision.
CompareOutcome compare_near_zero(const CutSpectrum& a, const CutSpectrum& b);

/// Same comparison scanned from k = m downward (greater reliability for rho
/// close to 1).
CompareOutcome compare_near_one(const CutSpectrum& a, const CutSpectrum& b);

struct Interval {
  BigRat lo;
  BigRat hi;
};

/// Isolating intervals for the sign changes of R_a - R_b on (0,1): a dyadic
/// sample grid is refined until the sign-change pattern is stable, then each
/// bracket is bisected to the requested width. Endpoints carry opposite exact
/// signs. Throws when the polynomials are identical.
std::vector<Interval> find_crossings(const ReliabilityPolynomial& a,
                                     const ReliabilityPolynomial& b, const BigRat& tolerance);

/// First rho = 2^-i (i = 1..max_exponent) with R_better(rho) > R_other(rho),
/// or nullopt if none exists in that range.
std::optional<BigRat> witness_near_zero(const ReliabilityPolynomial& better,
                                        const ReliabilityPolynomial& other,
                                        int max_exponent = 64);

/// First rho = 1 - 2^-i with R_better(rho) > R_other(rho).
std::optional<BigRat> witness_near_one(const ReliabilityPolynomial& better,
                                       const ReliabilityPolynomial& other,
                                       int max_exponent = 64);

/// Empirical connectivity frequency when each edge fails independently with
/// probability rho. Deterministic for a fixed seed.
double monte_carlo_connectivity(const MultiGraph& g, double rho, int trials,
                                std::uint64_t seed);

/// CSV "rho,R" on a uniform grid (default 1001 points including both ends),
/// 12 significant digits.
void write_curve_csv(std::ostream& out, const ReliabilityPolynomial& poly, int points = 1001);

}  // namespace relcut
