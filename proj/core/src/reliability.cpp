#include "relcut/reliability.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace relcut {

namespace {

int sign_of(const BigRat& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

BigRat horner(const std::vector<BigInt>& coefficients, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= x;
    acc += BigRat(*it);
  }
  return acc;
}

void require_same_m(const CutSpectrum& a, const CutSpectrum& b, const char* where) {
  if (a.edge_count() != b.edge_count())
    throw std::invalid_argument(std::string(where) + ": spectra have different edge counts");
}

const BigInt& known_mu(const CutSpectrum& s, int k, const char* where) {
  if (!s.has(k))
    throw std::invalid_argument(std::string(where) + ": mu_" + std::to_string(k) +
                                " is absent; spectrum too partial to decide");
  return s.mu(k);
}

}  // namespace

ReliabilityPolynomial::ReliabilityPolynomial(CutSpectrum spectrum)
    : m_(spectrum.edge_count()), spectrum_(std::move(spectrum)) {
  if (!spectrum_.complete())
    throw std::invalid_argument("ReliabilityPolynomial: spectrum is incomplete");
  // rho^k (1-rho)^(m-k) expands to sum_j (-1)^j C(m-k, j) rho^(k+j).
  coefficients_.assign(m_ + 1, 0);
  coefficients_[0] = 1;
  for (int k = 0; k <= m_; ++k) {
    const BigInt& mu = spectrum_.mu(k);
    if (mu == 0) continue;
    for (int d = k; d <= m_; ++d) {
      const BigInt term = mu * binomial(m_ - k, d - k);
      if ((d - k) % 2 == 0)
        coefficients_[d] -= term;
      else
        coefficients_[d] += term;
    }
  }
}

ReliabilityPolynomial polynomial_from_spectrum(CutSpectrum spectrum) {
  return ReliabilityPolynomial(std::move(spectrum));
}

BigRat evaluate(const ReliabilityPolynomial& poly, const BigRat& rho) {
  if (rho < 0 || rho > 1) throw std::invalid_argument("evaluate: rho must lie in [0, 1]");
  return horner(poly.coefficients(), rho);
}

BigRat bernstein_evaluate(const CutSpectrum& spectrum, const BigRat& rho) {
  if (rho < 0 || rho > 1)
    throw std::invalid_argument("bernstein_evaluate: rho must lie in [0, 1]");
  if (!spectrum.complete())
    throw std::invalid_argument("bernstein_evaluate: spectrum is incomplete");
  const int m = spectrum.edge_count();
  const BigRat q = BigRat(1) - rho;
  // Powers built incrementally; exact rationals throughout.
  std::vector<BigRat> rho_pow(m + 1), q_pow(m + 1);
  rho_pow[0] = 1;
  q_pow[0] = 1;
  for (int i = 1; i <= m; ++i) {
    rho_pow[i] = rho_pow[i - 1] * rho;
    q_pow[i] = q_pow[i - 1] * q;
  }
  BigRat sum = 0;
  for (int k = 0; k <= m; ++k) sum += BigRat(spectrum.mu(k)) * rho_pow[k] * q_pow[m - k];
  return BigRat(1) - sum;
}

CompareOutcome compare_near_zero(const CutSpectrum& a, const CutSpectrum& b) {
  require_same_m(a, b, "compare_near_zero");
  for (int k = 0; k <= a.edge_count(); ++k) {
    const BigInt& mu_a = known_mu(a, k, "compare_near_zero");
    const BigInt& mu_b = known_mu(b, k, "compare_near_zero");
    if (mu_a != mu_b)
      return CompareOutcome{mu_a < mu_b ? CompareVerdict::FirstBetter
                                        : CompareVerdict::SecondBetter,
                            k, mu_a, mu_b};
  }
  return CompareOutcome{CompareVerdict::Equal, -1, 0, 0};
}

CompareOutcome compare_near_one(const CutSpectrum& a, const CutSpectrum& b) {
  require_same_m(a, b, "compare_near_one");
  for (int k = a.edge_count(); k >= 0; --k) {
    const BigInt& mu_a = known_mu(a, k, "compare_near_one");
    const BigInt& mu_b = known_mu(b, k, "compare_near_one");
    if (mu_a != mu_b)
      return CompareOutcome{mu_a < mu_b ? CompareVerdict::FirstBetter
                                        : CompareVerdict::SecondBetter,
                            k, mu_a, mu_b};
  }
  return CompareOutcome{CompareVerdict::Equal, -1, 0, 0};
}

std::vector<Interval> find_crossings(const ReliabilityPolynomial& a,
                                     const ReliabilityPolynomial& b, const BigRat& tolerance) {
  if (a.edge_count() != b.edge_count())
    throw std::invalid_argument("find_crossings: polynomials have different edge counts");
  if (tolerance <= 0) throw std::invalid_argument("find_crossings: tolerance must be positive");
  const int degree = std::max(a.edge_count(), b.edge_count());
  std::vector<BigInt> diff(degree + 1, 0);
  for (int d = 0; d <= degree; ++d) {
    if (d < static_cast<int>(a.coefficients().size())) diff[d] += a.coefficients()[d];
    if (d < static_cast<int>(b.coefficients().size())) diff[d] -= b.coefficients()[d];
  }
  if (std::all_of(diff.begin(), diff.end(), [](const BigInt& c) { return c == 0; }))
    throw std::invalid_argument("find_crossings: polynomials are identical");

  auto sign_at = [&](const BigRat& x) { return sign_of(horner(diff, x)); };

  // Refine the dyadic grid until the number of sign changes is stable across
  // two consecutive levels.
  int level = 6;
  int previous_changes = -1;
  std::vector<std::pair<BigRat, BigRat>> brackets;
  for (;; ++level) {
    brackets.clear();
    const std::int64_t cells = std::int64_t{1} << level;
    int last_sign = 0;
    BigRat last_point = 0;
    for (std::int64_t i = 1; i < cells; ++i) {
      BigRat point{BigInt(i), BigInt(cells)};
      int s = sign_at(point);
      if (s == 0) {
        // Exact zero at a grid point: shrink a symmetric window until both
        // ends are nonzero, keep it only if the signs flip across it.
        BigRat h = BigRat(BigInt(1), BigInt(4) * BigInt(cells));
        int sl = 0, sr = 0;
        while (true) {
          sl = sign_at(point - h);
          sr = sign_at(point + h);
          if (sl != 0 && sr != 0) break;
          h /= 2;
        }
        if (sl != sr) brackets.emplace_back(BigRat(point - h), BigRat(point + h));
        last_sign = sr;
        last_point = BigRat(point + h);
        continue;
      }
      if (last_sign != 0 && s != last_sign) brackets.emplace_back(last_point, point);
      last_sign = s;
      last_point = point;
    }
    const int changes = static_cast<int>(brackets.size());
    if (changes == previous_changes || level >= 24) break;
    previous_changes = changes;
  }

  std::vector<Interval> result;
  result.reserve(brackets.size());
  for (auto& [lo, hi] : brackets) {
    int sign_lo = sign_at(lo);
    while (hi - lo > tolerance) {
      const BigRat mid = (lo + hi) / 2;
      const int sign_mid = sign_at(mid);
      if (sign_mid == 0) {
        // Exact root at the midpoint: re-bracket around it, or skip past it
        // when the sign does not actually flip there.
        BigRat h = (hi - lo) / 4;
        while (sign_at(mid - h) == 0 || sign_at(mid + h) == 0) h /= 2;
        if (sign_at(mid - h) != sign_lo) {
          hi = mid - h;
        } else if (sign_at(mid + h) != sign_lo) {
          lo = mid - h;
          hi = mid + h;
        } else {
          lo = mid + h;
        }
        continue;
      }
      if (sign_mid == sign_lo)
        lo = mid;
      else
        hi = mid;
    }
    result.push_back(Interval{lo, hi});
  }
  return result;
}

namespace {

std::optional<BigRat> witness_search(const ReliabilityPolynomial& better,
                                     const ReliabilityPolynomial& other, bool near_one,
                                     int max_exponent) {
  for (int i = 1; i <= max_exponent; ++i) {
    BigRat rho = BigRat(BigInt(1), pow2(i));
    if (near_one) rho = BigRat(1) - rho;
    if (evaluate(better, rho) > evaluate(other, rho)) return rho;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BigRat> witness_near_zero(const ReliabilityPolynomial& better,
                                        const ReliabilityPolynomial& other, int max_exponent) {
  return witness_search(better, other, false, max_exponent);
}

std::optional<BigRat> witness_near_one(const ReliabilityPolynomial& better,
                                       const ReliabilityPolynomial& other, int max_exponent) {
  return witness_search(better, other, true, max_exponent);
}

double monte_carlo_connectivity(const MultiGraph& g, double rho, int trials,
                                std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("monte_carlo_connectivity: trials must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> parent(n);
  int connected = 0;
  for (int trial = 0; trial < trials; ++trial) {
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    int components = n;
    for (int id = 0; id < m; ++id) {
      if (uniform(rng) < rho) continue;  // edge failed
      auto [u, v] = g.edges()[id];
      const int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components == 1) ++connected;
  }
  return static_cast<double>(connected) / trials;
}

void write_curve_csv(std::ostream& out, const ReliabilityPolynomial& poly, int points) {
  if (points < 2) throw std::invalid_argument("write_curve_csv: need at least 2 points");
  out << "rho,R\n";
  char buffer[64];
  for (int i = 0; i < points; ++i) {
    const BigRat rho{BigInt(i), BigInt(points - 1)};
    const BigRat value = evaluate(poly, rho);
    // Floating point appears here only, to render the exact values.
    std::snprintf(buffer, sizeof(buffer), "%.12g,%.12g\n", rho.convert_to<double>(),
                  value.convert_to<double>());
    out << buffer;
  }
}

}  // namespace relcut
