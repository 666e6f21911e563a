#include "sectorstab/oracle.hpp"

#include <cmath>
#include <string>

#include "sectorstab/rng.hpp"

namespace sectorstab {

std::string_view oracle_method_name(OracleMethod m) {
  switch (m) {
    case OracleMethod::Exhaustive: return "exhaustive";
    case OracleMethod::MonteCarlo: return "monte_carlo";
    case OracleMethod::Routh: return "routh";
  }
  return "?";
}

OracleReport exhaustive_vertex_check(const IntervalFamily& family, const SectorSpec& sector,
                                     const Tolerances& tol) {
  const int count = family.degree() + 1;
  if (count > 24) {
    throw Error(Errc::TooManyVertices, std::to_string(count) +
                                           " coefficient intervals would mean 2^" +
                                           std::to_string(count) + " vertices");
  }
  const std::uint32_t total = 1u << count;

  OracleReport report{OracleMethod::Exhaustive, Status::Stable, std::nullopt, 0, std::nullopt};
  bool any_marginal = false;
  std::vector<double> coeffs(static_cast<std::size_t>(count));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < count; ++i) {
      coeffs[static_cast<std::size_t>(i)] =
          (mask >> i) & 1u ? family.upper()[static_cast<std::size_t>(i)]
                           : family.lower()[static_cast<std::size_t>(i)];
    }
    const StabilityVerdict verdict = polynomial_verdict(coeffs, sector, tol);
    ++report.checked_count;
    if (verdict.status == Status::Unstable) {
      report.status = Status::Unstable;
      report.counterexample = Counterexample{coeffs, verdict.worst_root};
      return report;
    }
    if (verdict.status == Status::Marginal) any_marginal = true;
  }
  report.status = any_marginal ? Status::Marginal : Status::Stable;
  return report;
}

OracleReport monte_carlo_check(const IntervalFamily& family, const SectorSpec& sector,
                               long long samples, std::uint64_t seed, const Tolerances& tol) {
  if (samples < 1) {
    throw Error(Errc::NonPositive, "sample count must be >= 1, got " + std::to_string(samples));
  }
  const std::size_t count = family.lower().size();

  OracleReport report{OracleMethod::MonteCarlo, Status::Stable, std::nullopt, 0, seed};
  bool any_marginal = false;
  std::vector<double> coeffs(count);
  for (long long k = 0; k < samples; ++k) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(k));
    for (std::size_t i = 0; i < count; ++i) {
      coeffs[i] = rng.next_in(family.lower()[i], family.upper()[i]);
    }
    const StabilityVerdict verdict = polynomial_verdict(coeffs, sector, tol);
    ++report.checked_count;
    if (verdict.status == Status::Unstable) {
      report.status = Status::Unstable;
      report.counterexample = Counterexample{coeffs, verdict.worst_root};
      return report;
    }
    if (verdict.status == Status::Marginal) any_marginal = true;
  }
  report.status = any_marginal ? Status::Marginal : Status::Stable;
  return report;
}

RouthVerdict routh_hurwitz(std::span<const double> coeffs) {
  if (coeffs.size() < 2) {
    throw Error(Errc::DegreeTooSmall,
                "need degree >= 1, got " + std::to_string(coeffs.size()) + " coefficient(s)");
  }
  if (coeffs.back() == 0.0) {
    throw Error(Errc::ZeroLeadingCoefficient, "leading coefficient must be nonzero");
  }

  std::vector<double> c(coeffs.begin(), coeffs.end());
  if (c.back() < 0.0) {
    // Roots of f and -f coincide, so a fully negated polynomial may be
    // flipped; any other negative leading sign already fails the necessary
    // same-sign condition.
    if (c.front() < 0.0) {
      for (double& x : c) x = -x;
    } else {
      return RouthVerdict::NotStable;
    }
  }

  const int n = static_cast<int>(c.size()) - 1;
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<double> above(width, 0.0);  // row for s^n
  std::vector<double> row(width, 0.0);    // row for s^(n-1)
  for (std::size_t j = 0; 2 * j <= static_cast<std::size_t>(n); ++j) {
    above[j] = c[static_cast<std::size_t>(n) - 2 * j];
  }
  for (std::size_t j = 0; 2 * j + 1 <= static_cast<std::size_t>(n); ++j) {
    row[j] = c[static_cast<std::size_t>(n) - 2 * j - 1];
  }

  if (row[0] <= 0.0) return RouthVerdict::NotStable;
  std::vector<double> next(width, 0.0);
  for (int k = 2; k <= n; ++k) {
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (row[0] * above[j + 1] - above[0] * row[j + 1]) / row[0];
    }
    next[width - 1] = 0.0;
    std::swap(above, row);
    std::swap(row, next);
    if (row[0] <= 0.0) return RouthVerdict::NotStable;
  }
  return RouthVerdict::Stable;
}

}  // namespace sectorstab
