#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sectorstab/core.hpp"

namespace sectorstab {

struct RootSet {
  std::vector<std::complex<double>> roots;  // sorted by (re, im)
  std::vector<double> residuals;            // |f(z)| / (max|c_i| * max(1, |z|)^n)
  int iterations = 0;
  bool converged = false;  // true iff every residual <= residual_bound
};

struct RootfindOptions {
  int max_iterations = 200;
  double correction_tol = 1e-13;  // relative to max(1, largest iterate magnitude)
  double residual_bound = 1e-8;
};

/// Horner evaluation of sum_i coeffs[i] * z^i. An empty span evaluates to 0.
std::complex<double> evaluate(std::span<const double> coeffs, std::complex<double> z);

/// All complex roots of a real polynomial of degree >= 1 by simultaneous
/// Ehrlich-Aberth iteration, with closed forms for degrees one and two and
/// exact deflation of roots at the origin. Initial guesses sit on a circle
/// of radius (|c_0/c_n|)^(1/n) rotated by a fixed offset; there is no
/// randomness, so identical input gives identical output. A result with
/// converged == false carries the best iterate and must never be read as a
/// stability certificate.
RootSet roots(std::span<const double> coeffs, const RootfindOptions& options = {});

}  // namespace sectorstab
