#include "sectorstab/sector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sectorstab {

std::string_view region_name(Region r) {
  switch (r) {
    case Region::Inside: return "inside";
    case Region::Outside: return "outside";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Stable: return "stable";
    case Status::Marginal: return "marginal";
    case Status::Unstable: return "unstable";
  }
  return "?";
}

PointClass classify_point(std::complex<double> z, const SectorSpec& sector,
                          double angle_tolerance, double magnitude_tolerance) {
  const double boundary = sector.boundary_angle();
  if (std::abs(z) <= magnitude_tolerance) {
    return {Region::Outside, -boundary};
  }
  const double margin = std::abs(std::arg(z)) - boundary;
  if (std::abs(margin) <= angle_tolerance) return {Region::Boundary, margin};
  return {margin > 0.0 ? Region::Inside : Region::Outside, margin};
}

StabilityVerdict verdict_from_roots(const RootSet& rootset, const SectorSpec& sector,
                                    const Tolerances& tol) {
  // The origin cutoff scales with the root magnitudes so that the verdict is
  // invariant under coefficient scaling.
  double root_scale = 1.0;
  for (const auto& z : rootset.roots) root_scale = std::max(root_scale, std::abs(z));
  const double origin_cutoff = tol.magnitude * root_scale;

  StabilityVerdict verdict;
  verdict.per_root.reserve(rootset.roots.size());
  verdict.margin = std::numeric_limits<double>::infinity();
  verdict.worst_root = 0.0;
  verdict.solver_converged = rootset.converged;

  bool outside = false;
  bool marginal = !rootset.converged;
  for (const auto& z : rootset.roots) {
    const PointClass pc = classify_point(z, sector, tol.angle, origin_cutoff);
    verdict.per_root.emplace_back(z, pc);
    if (pc.angular_margin < verdict.margin) {
      verdict.margin = pc.angular_margin;
      verdict.worst_root = z;
    }
    if (pc.region == Region::Boundary) {
      marginal = true;
    } else if (pc.region == Region::Outside) {
      // A root indistinguishable from the origin has no usable argument, so
      // it cannot certify instability either; refuse instead.
      if (std::abs(z) <= origin_cutoff) {
        marginal = true;
      } else {
        outside = true;
      }
    }
  }

  verdict.status = outside ? Status::Unstable : (marginal ? Status::Marginal : Status::Stable);
  return verdict;
}

StabilityVerdict polynomial_verdict(std::span<const double> coeffs, const SectorSpec& sector,
                                    const Tolerances& tol) {
  return verdict_from_roots(roots(coeffs, tol.rootfind), sector, tol);
}

FamilyReport family_check(const IntervalFamily& family, const SectorSpec& sector,
                          const Tolerances& tol) {
  CriticalPatterns critical = critical_patterns(sector, family.degree());

  FamilyReport report{sector, std::move(critical.patterns), std::move(critical.starts),
                      {},     {},                           Status::Stable,
                      0};
  report.vertices.reserve(report.patterns.size());
  report.verdicts.reserve(report.patterns.size());

  bool any_unstable = false;
  bool any_marginal = false;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < report.patterns.size(); ++k) {
    VertexPolynomial vertex = instantiate(family, report.patterns[k]);
    StabilityVerdict verdict = polynomial_verdict(vertex.coeffs, sector, tol);
    if (verdict.status == Status::Unstable) any_unstable = true;
    if (verdict.status == Status::Marginal) any_marginal = true;
    if (verdict.margin < worst_margin) {
      worst_margin = verdict.margin;
      report.worst_vertex = static_cast<int>(k);
    }
    report.vertices.push_back(std::move(vertex));
    report.verdicts.push_back(std::move(verdict));
  }

  report.family_status =
      any_unstable ? Status::Unstable : (any_marginal ? Status::Marginal : Status::Stable);
  return report;
}

}  // namespace sectorstab
