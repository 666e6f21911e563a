#pragma once

// Deterministic generators and independent oracles shared by the test
// binaries. Nothing here calls back into the code paths under test except
// where a comment says so explicitly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sectorstab/core.hpp"
#include "sectorstab/rng.hpp"
#include "sectorstab/sector.hpp"

namespace sectorstab::testing {

using cd = std::complex<double>;

// --- polynomial construction from known roots ------------------------------

inline std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Real coefficients (ascending) of lead * prod (s - r) over the given real
/// roots and conjugate pairs; pair_roots holds one representative per pair.
inline std::vector<double> expand_roots(const std::vector<double>& real_roots,
                                        const std::vector<cd>& pair_roots, double lead = 1.0) {
  std::vector<double> poly{lead};
  for (double r : real_roots) poly = convolve(poly, {-r, 1.0});
  for (const cd& z : pair_roots) {
    poly = convolve(poly, {std::norm(z), -2.0 * z.real(), 1.0});
  }
  return poly;
}

inline std::vector<cd> with_conjugates(const std::vector<double>& real_roots,
                                       const std::vector<cd>& pair_roots) {
  std::vector<cd> all;
  for (double r : real_roots) all.emplace_back(r, 0.0);
  for (const cd& z : pair_roots) {
    all.push_back(z);
    all.push_back(std::conj(z));
  }
  return all;
}

// --- root matching ----------------------------------------------------------

/// Pairs each computed root with its nearest expected root. Returns the
/// largest pairing distance, or nullopt when the nearest-neighbour map is
/// not a bijection (which, given separation far above the tolerance, means
/// the solver genuinely missed a root).
inline std::optional<double> match_roots(const std::vector<cd>& expected,
                                         const std::vector<cd>& got) {
  if (expected.size() != got.size()) return std::nullopt;
  std::vector<int> hits(expected.size(), 0);
  double worst = 0.0;
  for (const cd& g : got) {
    std::size_t best = 0;
    double best_dist = std::abs(g - expected[0]);
    for (std::size_t i = 1; i < expected.size(); ++i) {
      const double dist = std::abs(g - expected[i]);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    ++hits[best];
    worst = std::max(worst, best_dist);
  }
  for (int h : hits) {
    if (h != 1) return std::nullopt;
  }
  return worst;
}

// --- sector sampling --------------------------------------------------------

inline std::vector<int> valid_ps(int q) {
  std::vector<int> ps;
  for (int p = (q + 1) / 2; p < q; ++p) {
    if (std::gcd(p, q) == 1) ps.push_back(p);
  }
  return ps;
}

inline SectorSpec sample_sector(SplitMix64& rng, int q_max) {
  const int q = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(q_max - 1)));
  const std::vector<int> ps = valid_ps(q);
  const int p = ps[static_cast<std::size_t>(rng.next_below(ps.size()))];
  return SectorSpec(p, q);
}

// --- family generation ------------------------------------------------------

/// True when every one of the 2^(n+1) vertices has a converged solve, a
/// non-marginal verdict, and a margin at least 1e-6 rad away from zero.
/// Families failing this sit too close to the open boundary for oracle
/// comparisons to be meaningful. (Uses polynomial_verdict, i.e. the code
/// under test, but only as a filter; the compared verdicts are recomputed
/// by the callers.)
inline bool margins_bounded_away(const IntervalFamily& family, const SectorSpec& sector,
                                 const Tolerances& tol = {}) {
  const int count = family.degree() + 1;
  const std::uint32_t total = 1u << count;
  std::vector<double> coeffs(static_cast<std::size_t>(count));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < count; ++i) {
      coeffs[static_cast<std::size_t>(i)] =
          (mask >> i) & 1u ? family.upper()[static_cast<std::size_t>(i)]
                           : family.lower()[static_cast<std::size_t>(i)];
    }
    const StabilityVerdict verdict = polynomial_verdict(coeffs, sector, tol);
    if (!verdict.solver_converged) return false;
    if (verdict.status == Status::Marginal) return false;
    if (std::abs(verdict.margin) < 1e-6) return false;
  }
  return true;
}

/// Random interval family of the given degree. Builds a monic centre
/// polynomial from roots placed well inside the sector (or, for
/// want_stable == false, with one root pushed clearly outside), then wraps
/// a small relative box around it, regenerating until margins_bounded_away
/// accepts the result.
inline IntervalFamily gen_family(SplitMix64& rng, const SectorSpec& sector, int degree,
                                 bool want_stable) {
  const double boundary = sector.boundary_angle();
  for (int attempt = 0; attempt < 500; ++attempt) {
    const int pairs =
        degree >= 2 ? static_cast<int>(rng.next_below(static_cast<std::uint64_t>(degree / 2 + 1)))
                    : 0;
    const int reals = degree - 2 * pairs;
    std::vector<double> real_roots;
    std::vector<cd> pair_roots;
    for (int i = 0; i < reals; ++i) real_roots.push_back(-rng.next_in(0.3, 2.0));
    for (int i = 0; i < pairs; ++i) {
      const double angle = rng.next_in(boundary + 0.15, std::numbers::pi - 0.03);
      pair_roots.push_back(std::polar(rng.next_in(0.3, 2.0), angle));
    }
    if (!want_stable) {
      if (reals > 0) {
        real_roots[0] = rng.next_in(0.3, 2.0);
      } else {
        const double angle = rng.next_in(0.05, boundary - 0.15);
        pair_roots[0] = std::polar(std::abs(pair_roots[0]), angle);
      }
    }
    const std::vector<double> center = expand_roots(real_roots, pair_roots);
    const double rel = rng.next_in(1e-3, 2e-2);
    std::vector<double> lower(center.size());
    std::vector<double> upper(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
      const double width = rel * std::max(std::abs(center[i]), 0.1);
      lower[i] = center[i] - width;
      upper[i] = center[i] + width;
    }
    IntervalFamily family(std::move(lower), std::move(upper));
    if (margins_bounded_away(family, sector)) return family;
  }
  throw std::runtime_error("family generation did not settle after 500 attempts");
}

}  // namespace sectorstab::testing
