#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sectorstab/sector.hpp"

namespace sectorstab {

enum class OutputFormat { Text, Machine };

/// True when the critical-vertex status contradicts an oracle: a definite
/// Stable/Unstable flip against the exhaustive check in either direction, or
/// a concrete unstable sample against a stable vertex certificate. Marginal
/// never counts as a contradiction. The sampler staying quiet on an unstable
/// family is a miss, not a contradiction.
bool verdicts_contradict(Status family, Status exhaustive, Status sampled);

// Exit codes shared by every subcommand.
inline constexpr int kExitStable = 0;
inline constexpr int kExitUnstable = 1;
inline constexpr int kExitMarginal = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitDisagreement = 4;
inline constexpr int kExitIoError = 5;

/// Prints the critical patterns for (p, q, degree), one per line as a
/// '+'/'-' string (index 0 leftmost) in text mode, as JSON in machine mode.
int cmd_vertices(int p, int q, int degree, OutputFormat format, std::ostream& out,
                 std::ostream& err);

/// Runs family_check on a spec file and prints per-vertex verdicts plus the
/// family status. Exit code encodes the verdict.
int cmd_check(const std::string& spec_path, OutputFormat format, std::ostream& out,
              std::ostream& err);

/// Runs family_check, the exhaustive vertex oracle, and the Monte Carlo
/// oracle side by side. Exit 0 when the verdicts are consistent (marginal
/// verdicts are never counted as contradictions), 4 when the critical-vertex
/// verdict contradicts an oracle.
int cmd_verify(const std::string& spec_path, std::optional<long long> samples,
               std::optional<std::uint64_t> seed, OutputFormat format, std::ostream& out,
               std::ostream& err);

/// Writes per-root rows and the two sector boundary rays as CSV to
/// out_path. Columns: vertex_index, root_re, root_im, margin_rad, class.
int cmd_roots(const std::string& spec_path, const std::string& out_path, std::ostream& out,
              std::ostream& err);

}  // namespace sectorstab
