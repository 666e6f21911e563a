#include "sectorstab/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sectorstab {

namespace {

using cd = std::complex<double>;

struct ValueAndSlope {
  cd f;
  cd df;
};

ValueAndSlope eval_with_derivative(std::span<const double> coeffs, cd z) {
  cd f = 0.0;
  cd df = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    df = df * z + f;
    f = f * z + coeffs[i];
  }
  return {f, df};
}

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Stable quadratic formula for c0 + c1*z + c2*z^2; complex pairs come out as
// exact conjugates.
void solve_quadratic(double c0, double c1, double c2, std::vector<cd>& out) {
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (c1 + std::copysign(sq, c1));
    if (qq != 0.0) {
      out.emplace_back(qq / c2, 0.0);
      out.emplace_back(c0 / qq, 0.0);
    } else {
      // c1 == 0 and disc == 0 forces c0 == 0: double root at the origin.
      out.emplace_back(0.0, 0.0);
      out.emplace_back(0.0, 0.0);
    }
  } else {
    const double re = -c1 / (2.0 * c2);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(c2));
    out.emplace_back(re, -im);
    out.emplace_back(re, im);
  }
}

// Ehrlich-Aberth sweep over the deflated polynomial g (g[0] != 0, degree >= 3).
// Returns the number of sweeps performed.
int aberth(std::span<const double> g, std::vector<cd>& z, const RootfindOptions& opt) {
  const int d = static_cast<int>(g.size()) - 1;
  double radius = std::pow(std::abs(g[0] / g[static_cast<std::size_t>(d)]), 1.0 / d);
  if (!std::isfinite(radius) || radius <= 0.0) radius = 1.0;

  // Fixed rotation keeps guesses off the real axis and off each other's
  // reflections, so the sweep never stalls on a symmetric configuration.
  constexpr double kOffset = 0.70710678118654752;
  z.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / d + kOffset;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  int sweeps = 0;
  for (; sweeps < opt.max_iterations; ) {
    ++sweeps;
    double max_correction = 0.0;
    for (int i = 0; i < d; ++i) {
      cd& zi = z[static_cast<std::size_t>(i)];
      const auto [f, df] = eval_with_derivative(g, zi);
      if (f == 0.0) continue;
      cd newton;
      if (df != 0.0) {
        newton = f / df;
      } else {
        newton = cd(1.0, 1.0) * (1e-2 * (1.0 + std::abs(zi)));
      }
      cd repulsion = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        cd dz = zi - z[static_cast<std::size_t>(j)];
        if (dz == 0.0) dz = cd(1e-30, 0.0);
        repulsion += 1.0 / dz;
      }
      const cd denom = 1.0 - newton * repulsion;
      cd w = denom == 0.0 ? newton : newton / denom;
      if (!finite(w)) w = newton;
      if (!finite(w)) w = cd(1e-2 * (1.0 + std::abs(zi)), 1e-2);
      zi -= w;
      max_correction = std::max(max_correction, std::abs(w));
    }
    double scale = 1.0;
    for (const cd& r : z) scale = std::max(scale, std::abs(r));
    if (max_correction <= opt.correction_tol * scale) break;
  }
  return sweeps;
}

}  // namespace

std::complex<double> evaluate(std::span<const double> coeffs, std::complex<double> z) {
  cd acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

RootSet roots(std::span<const double> coeffs, const RootfindOptions& options) {
  if (coeffs.size() < 2) {
    throw Error(Errc::DegreeTooSmall,
                "need degree >= 1, got " + std::to_string(coeffs.size()) + " coefficient(s)");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw Error(Errc::NonFinite, "coefficient is not finite");
  }
  if (coeffs.back() == 0.0) {
    throw Error(Errc::ZeroLeadingCoefficient, "leading coefficient must be nonzero");
  }

  const int n = static_cast<int>(coeffs.size()) - 1;

  // Scale to unit max-norm; the roots are unchanged and the residual
  // denominator below simplifies to max(1, |z|)^n.
  double norm = 0.0;
  for (double c : coeffs) norm = std::max(norm, std::abs(c));
  std::vector<double> c(coeffs.begin(), coeffs.end());
  for (double& x : c) x /= norm;

  // Exact zeros in the low-order coefficients are roots at the origin.
  int origin_roots = 0;
  while (c[static_cast<std::size_t>(origin_roots)] == 0.0) ++origin_roots;
  const std::span<const double> g(c.data() + origin_roots, c.size() - origin_roots);
  const int d = n - origin_roots;

  RootSet out;
  out.roots.assign(static_cast<std::size_t>(origin_roots), cd(0.0, 0.0));
  if (d == 1) {
    out.roots.emplace_back(-g[0] / g[1], 0.0);
  } else if (d == 2) {
    solve_quadratic(g[0], g[1], g[2], out.roots);
  } else if (d >= 3) {
    std::vector<cd> z;
    out.iterations = aberth(g, z, options);
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  std::sort(out.roots.begin(), out.roots.end(), [](cd a, cd b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  out.residuals.reserve(out.roots.size());
  bool all_small = true;
  for (const cd& root : out.roots) {
    const double denom = std::pow(std::max(1.0, std::abs(root)), n);
    const double residual = std::abs(evaluate(c, root)) / denom;
    out.residuals.push_back(residual);
    if (!(residual <= options.residual_bound)) all_small = false;
  }
  out.converged = all_small;
  return out;
}

}  // namespace sectorstab
