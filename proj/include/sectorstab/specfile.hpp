#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sectorstab/core.hpp"
#include "sectorstab/sector.hpp"

namespace sectorstab {

/// One parsed problem file: the coefficient box, the sector, and optional
/// tolerance/sampling settings. The on-disk form is JSON with // comments
/// allowed; "lower" and "upper" are ascending-power arrays (index i
/// multiplies s^i), "sector" holds integer p and q.
struct SpecFile {
  IntervalFamily family;
  SectorSpec sector;
  Tolerances tolerances;
  std::optional<std::uint64_t> seed;
  std::optional<long long> samples;
};

/// Parses spec text. Throws Error for domain violations and
/// std::runtime_error with field context for structural problems.
SpecFile parse_spec(const std::string& text);

/// Reads and parses a file; failures mention the path.
SpecFile load_spec(const std::string& path);

/// Canonical rendering; parse_spec(format_spec(s)) reproduces s exactly.
std::string format_spec(const SpecFile& spec);

}  // namespace sectorstab
