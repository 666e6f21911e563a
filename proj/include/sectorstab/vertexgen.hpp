#pragma once

#include <vector>

#include "sectorstab/core.hpp"

// Critical-vertex pattern construction. A circle of 2q signs (q pluses
// followed by q minuses) is traversed with stride p; the signs visited from
// a given start index form the endpoint-selection pattern of one critical
// vertex. Sweeping all 2q starts and dropping exact duplicates yields the
// full critical set for a family of the given degree.

namespace sectorstab {

/// Circular arrangement of 2q signs: positions 0..q-1 hold Plus, positions
/// q..2q-1 hold Minus. Diametrically opposite entries are negations of each
/// other.
class SignCircle {
 public:
  explicit SignCircle(const SectorSpec& sector);

  int size() const noexcept { return static_cast<int>(signs_.size()); }
  Sign at(long long k) const noexcept { return signs_[static_cast<std::size_t>(k % size())]; }
  const std::vector<Sign>& signs() const noexcept { return signs_; }

 private:
  std::vector<Sign> signs_;
};

inline SignCircle build_sign_circle(const SectorSpec& sector) { return SignCircle(sector); }

/// Read degree+1 signs off the circle with stride p: entry i is the sign at
/// index (start + i*p) mod 2q. Entry 0 is the start sign itself, so a
/// zero-step walk still records one sign.
SignPattern walk(const SignCircle& circle, int start, int p, int degree);

struct CriticalPatterns {
  std::vector<SignPattern> patterns;  // distinct patterns, first-occurrence order
  std::vector<int> starts;            // starts[k] is the walk start that produced patterns[k]
};

/// Walks from every start 0..2q-1 in order, keeping the first occurrence of
/// each distinct pattern. At most 2q entries; low degrees collapse to fewer.
CriticalPatterns critical_patterns(const SectorSpec& sector, int degree);

/// Pick the box corner the pattern selects.
VertexPolynomial instantiate(const IntervalFamily& family, const SignPattern& pattern);

}  // namespace sectorstab
