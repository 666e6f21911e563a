#include "sectorstab/vertexgen.hpp"

#include <string>
#include <unordered_set>
#include <utility>

namespace sectorstab {

SignCircle::SignCircle(const SectorSpec& sector) {
  const int q = sector.q();
  signs_.assign(static_cast<std::size_t>(2 * q), Sign::Minus);
  for (int k = 0; k < q; ++k) signs_[static_cast<std::size_t>(k)] = Sign::Plus;
}

SignPattern walk(const SignCircle& circle, int start, int p, int degree) {
  const int len = circle.size();
  if (start < 0 || start >= len) {
    throw Error(Errc::StartOutOfRange, "start " + std::to_string(start) +
                                           " not in [0, " + std::to_string(len) + ")");
  }
  std::vector<Sign> signs(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) {
    signs[static_cast<std::size_t>(i)] =
        circle.at((static_cast<long long>(start) + static_cast<long long>(i) * p) % len);
  }
  return SignPattern(std::move(signs));
}

CriticalPatterns critical_patterns(const SectorSpec& sector, int degree) {
  if (degree < 1) {
    throw Error(Errc::DegreeTooSmall, "degree must be >= 1, got " + std::to_string(degree));
  }
  const SignCircle circle(sector);
  CriticalPatterns out;
  std::unordered_set<std::string> seen;
  for (int start = 0; start < circle.size(); ++start) {
    SignPattern pattern = walk(circle, start, sector.p(), degree);
    if (seen.insert(pattern.str()).second) {
      out.patterns.push_back(std::move(pattern));
      out.starts.push_back(start);
    }
  }
  return out;
}

VertexPolynomial instantiate(const IntervalFamily& family, const SignPattern& pattern) {
  const std::size_t len = family.lower().size();
  if (pattern.size() != len) {
    throw Error(Errc::LengthMismatch, "pattern has " + std::to_string(pattern.size()) +
                                          " signs, family has " + std::to_string(len) +
                                          " coefficient intervals");
  }
  VertexPolynomial vertex;
  vertex.coeffs.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    vertex.coeffs[i] = pattern[i] == Sign::Minus ? family.lower()[i] : family.upper()[i];
  }
  vertex.pattern = pattern;
  return vertex;
}

}  // namespace sectorstab
