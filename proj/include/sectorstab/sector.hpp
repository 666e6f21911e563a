#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sectorstab/core.hpp"
#include "sectorstab/rootfind.hpp"
#include "sectorstab/vertexgen.hpp"

// Point classification against the open sector and the verdict aggregation
// built on it. The argument convention is the principal value in (-pi, pi];
// a point is in the sector iff |arg z| > p*pi/q and z != 0.

namespace sectorstab {

enum class Region { Inside, Outside, Boundary };
enum class Status { Stable, Marginal, Unstable };

std::string_view region_name(Region r);  // "inside" / "outside" / "boundary"
std::string_view status_name(Status s);  // "stable" / "marginal" / "unstable"

struct Tolerances {
  double angle = 1e-9;       // radians; half-width of the Boundary band
  double magnitude = 1e-12;  // times the root scale; at or below counts as the origin
  RootfindOptions rootfind;
};

/// angular_margin is |arg z| - p*pi/q: positive inside the sector, negative
/// outside. The origin itself is outside (the sector excludes rho = 0) and
/// reports margin -p*pi/q.
struct PointClass {
  Region region;
  double angular_margin;
};

PointClass classify_point(std::complex<double> z, const SectorSpec& sector,
                          double angle_tolerance = 1e-9, double magnitude_tolerance = 1e-12);

struct StabilityVerdict {
  Status status;
  double margin;                    // min angular margin over the roots
  std::complex<double> worst_root;  // root attaining that minimum
  std::vector<std::pair<std::complex<double>, PointClass>> per_root;
  bool solver_converged;
};

/// Aggregation over a precomputed root set. Stable needs every root strictly
/// inside and a converged solve. A root within the angle tolerance of the
/// boundary ray, a root too close to the origin for its argument to mean
/// anything, or a non-converged solve each give Marginal: certification is
/// refused rather than guessed. Only a root outside by a clear angle makes
/// the verdict Unstable.
StabilityVerdict verdict_from_roots(const RootSet& rootset, const SectorSpec& sector,
                                    const Tolerances& tol = {});

/// Root-check one polynomial (ascending coefficients) against the sector.
StabilityVerdict polynomial_verdict(std::span<const double> coeffs, const SectorSpec& sector,
                                    const Tolerances& tol = {});

struct FamilyReport {
  SectorSpec sector;
  std::vector<SignPattern> patterns;  // critical patterns, generation order
  std::vector<int> starts;            // walk starts, parallel to patterns
  std::vector<VertexPolynomial> vertices;
  std::vector<StabilityVerdict> verdicts;  // parallel to vertices
  Status family_status;
  int worst_vertex;  // index of the vertex with the smallest margin
};

/// Decide the whole family from its critical vertices: stable iff every
/// critical vertex is stable; any unstable vertex makes the family unstable;
/// a marginal vertex (and no unstable one) leaves the family marginal.
FamilyReport family_check(const IntervalFamily& family, const SectorSpec& sector,
                          const Tolerances& tol = {});

}  // namespace sectorstab
