#include "sectorstab/core.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

namespace sectorstab {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPositive: return "NonPositive";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::RatioOutOfRange: return "RatioOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::EmptyInterval: return "EmptyInterval";
    case Errc::DegreeDrop: return "DegreeDrop";
    case Errc::NonFinite: return "NonFinite";
    case Errc::StartOutOfRange: return "StartOutOfRange";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::TooManyVertices: return "TooManyVertices";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

namespace {

// Circles beyond this many signs serve no practical purpose.
constexpr int kMaxSectorQ = 1'000'000;

}  // namespace

SectorSpec::SectorSpec(int p, int q) : p_(p), q_(q) {
  if (p <= 0 || q <= 0) {
    throw Error(Errc::NonPositive, "sector needs positive integers, got p=" + std::to_string(p) +
                                       " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime,
                "p=" + std::to_string(p) + " and q=" + std::to_string(q) + " share a factor");
  }
  if (p >= q) {
    throw Error(Errc::RatioOutOfRange,
                "p/q = " + std::to_string(p) + "/" + std::to_string(q) + " must be < 1");
  }
  if (q > kMaxSectorQ) {
    throw Error(Errc::RatioOutOfRange, "q=" + std::to_string(q) + " exceeds the supported maximum " +
                                           std::to_string(kMaxSectorQ));
  }
  if (2 * p < q) {
    throw Error(Errc::RatioOutOfRange,
                "p/q = " + std::to_string(p) + "/" + std::to_string(q) + " must be >= 1/2");
  }
}

double SectorSpec::boundary_angle() const noexcept {
  return std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_);
}

SectorSpec validate_sector(int p, int q) { return SectorSpec(p, q); }

IntervalFamily::IntervalFamily(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw Error(Errc::LengthMismatch, "lower has " + std::to_string(lower_.size()) +
                                          " entries, upper has " + std::to_string(upper_.size()));
  }
  if (lower_.size() < 2) {
    throw Error(Errc::DegreeTooSmall, "need at least two coefficient intervals (degree >= 1), got " +
                                          std::to_string(lower_.size()));
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) {
      throw Error(Errc::NonFinite, "bound at index " + std::to_string(i) + " is not finite");
    }
    if (lower_[i] > upper_[i]) {
      throw Error(Errc::EmptyInterval, "lower[" + std::to_string(i) + "] = " +
                                           std::to_string(lower_[i]) + " exceeds upper[" +
                                           std::to_string(i) + "] = " + std::to_string(upper_[i]));
    }
  }
  const std::size_t n = lower_.size() - 1;
  if (lower_[n] <= 0.0 && upper_[n] >= 0.0) {
    throw Error(Errc::DegreeDrop, "leading interval [" + std::to_string(lower_[n]) + ", " +
                                      std::to_string(upper_[n]) + "] contains zero");
  }
  if (upper_[n] < 0.0) {
    // Whole leading interval negative: negate the box. f and -f have the
    // same roots, so every downstream verdict is unchanged.
    for (std::size_t i = 0; i <= n; ++i) {
      const double lo = lower_[i];
      lower_[i] = -upper_[i];
      upper_[i] = -lo;
    }
    negated_ = true;
  }
}

IntervalFamily validate_family(std::vector<double> lower, std::vector<double> upper) {
  return IntervalFamily(std::move(lower), std::move(upper));
}

SignPattern SignPattern::negated() const {
  std::vector<Sign> flipped(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i) flipped[i] = opposite(signs_[i]);
  return SignPattern(std::move(flipped));
}

std::string SignPattern::str() const {
  std::string out(signs_.size(), '+');
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] == Sign::Minus) out[i] = '-';
  }
  return out;
}

SignPattern SignPattern::parse(std::string_view s) {
  std::vector<Sign> signs;
  signs.reserve(s.size());
  for (char c : s) {
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else {
      throw std::invalid_argument(std::string("sign pattern may only contain '+' and '-', got '") +
                                  c + "'");
    }
  }
  return SignPattern(std::move(signs));
}

}  // namespace sectorstab
