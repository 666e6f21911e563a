#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Shared domain types. Coefficient vectors are ascending-power everywhere:
// index i holds the coefficient of s^i.

namespace sectorstab {

enum class Errc {
  NonPositive,
  NotCoprime,
  RatioOutOfRange,
  LengthMismatch,
  DegreeTooSmall,
  EmptyInterval,
  DegreeDrop,
  NonFinite,
  StartOutOfRange,
  ZeroLeadingCoefficient,
  TooManyVertices,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Open sector of the complex plane containing the negative real axis:
/// points rho*e^{j*theta} with rho > 0 and p*pi/q < theta < 2*pi - p*pi/q,
/// equivalently |principal arg| > p*pi/q. p and q are coprime positive
/// integers with 1/2 <= p/q < 1; (1, 2) gives the open left half plane.
class SectorSpec {
 public:
  SectorSpec(int p, int q);  // throws Error when (p, q) is not a valid sector

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Boundary ray angle p*pi/q, in [pi/2, pi).
  double boundary_angle() const noexcept;

 private:
  int p_;
  int q_;
};

SectorSpec validate_sector(int p, int q);

/// Coefficient box: coefficient i ranges over [lower[i], upper[i]],
/// i = 0..n. The leading interval must not contain zero (the degree would
/// drop); an all-negative leading interval is normalized by negating the
/// whole box, which leaves every member's roots unchanged. The negation is
/// recorded by negated() but does not take part in value equality.
class IntervalFamily {
 public:
  IntervalFamily(std::vector<double> lower, std::vector<double> upper);

  int degree() const noexcept { return static_cast<int>(lower_.size()) - 1; }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }

  /// True when the input box was globally negated during validation.
  bool negated() const noexcept { return negated_; }

  bool operator==(const IntervalFamily& other) const noexcept {
    return lower_ == other.lower_ && upper_ == other.upper_;
  }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  bool negated_ = false;
};

IntervalFamily validate_family(std::vector<double> lower, std::vector<double> upper);

enum class Sign : unsigned char { Minus, Plus };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

/// Endpoint selector, one sign per coefficient: Minus picks lower[i], Plus
/// picks upper[i]. Index 0 refers to the constant term and is printed
/// leftmost in str().
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  std::size_t size() const noexcept { return signs_.size(); }
  Sign operator[](std::size_t i) const noexcept { return signs_[i]; }
  const std::vector<Sign>& signs() const noexcept { return signs_; }

  SignPattern negated() const;
  std::string str() const;                       // e.g. "++--"
  static SignPattern parse(std::string_view s);  // inverse of str()

  bool operator==(const SignPattern&) const = default;

 private:
  std::vector<Sign> signs_;
};

/// One corner of the box: coeffs[i] is lower[i] or upper[i] as the pattern
/// dictates. Ascending powers, like everything else.
struct VertexPolynomial {
  std::vector<double> coeffs;
  SignPattern pattern;
};

}  // namespace sectorstab
