#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sectorstab/core.hpp"
#include "sectorstab/sector.hpp"

// Independent verification machinery: full vertex enumeration, seeded box
// sampling, and a Routh-Hurwitz table for the half-plane sector. None of it
// shares a decision path with family_check beyond the root solver.

namespace sectorstab {

enum class OracleMethod { Exhaustive, MonteCarlo, Routh };

std::string_view oracle_method_name(OracleMethod m);

struct Counterexample {
  std::vector<double> coeffs;  // a family member with a root outside the sector
  std::complex<double> worst_root;
};

struct OracleReport {
  OracleMethod method;
  Status status;
  std::optional<Counterexample> counterexample;  // present iff status == Unstable
  long long checked_count = 0;
  std::optional<std::uint64_t> seed;
};

/// Verdict over all 2^(n+1) vertex polynomials, enumerated in bitmask order
/// (bit i set selects upper[i]). Stops at the first unstable vertex.
/// Families with more than 2^24 vertices are rejected.
OracleReport exhaustive_vertex_check(const IntervalFamily& family, const SectorSpec& sector,
                                     const Tolerances& tol = {});

/// Verdict over `samples` members drawn uniformly from the box. Sample k
/// uses an RNG stream derived from (seed, k), so the report depends only on
/// (family, sector, samples, seed). Stops at the first unstable sample.
OracleReport monte_carlo_check(const IntervalFamily& family, const SectorSpec& sector,
                               long long samples, std::uint64_t seed, const Tolerances& tol = {});

enum class RouthVerdict { Stable, NotStable };

/// Classical Routh table for Hurwitz stability (all roots in the open left
/// half plane). A zero first-column entry is reported as NotStable rather
/// than epsilon-perturbed.
RouthVerdict routh_hurwitz(std::span<const double> coeffs);

}  // namespace sectorstab
