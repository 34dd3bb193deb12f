#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fta/complex.hpp"
#include "fta/error.hpp"
#include "fta/polynomial.hpp"

namespace fta {

/// One accepted norm-decreasing move z0 -> z0 + zs.
///
/// The quantities refer to the normalized local polynomial
///     q(z) = p(z + z0) / p(z0) = 1 + ak z^k + z^(k+1) tail(z)
/// with zs = (-s / ak)^(1/k), so that ak zs^k = -s.
struct DescentStep {
  std::size_t k = 0;
  Complex ak;
  double M = 0.0;  // max coefficient norm of q
  double s = 0.0;
  Complex zs;
  double before = 0.0;  // |p(z0)|
  double after = 0.0;   // |p(z0 + zs)|
  std::size_t halvings = 0;
  Polynomial tail;  // coefficients a(k+1) .. an of q

  /// r = |zs| / |ak| * |tail(zs)|; then |q(zs)| <= 1 - s (1 - r).
  double tail_ratio() const { return norm(zs) / norm(ak) * norm(eval(tail, zs)); }
};

/// One row of a descent trace. Row 0 is the starting point (s = 0, k = 0).
struct TraceRow {
  std::size_t iter = 0;
  Complex z;
  double residual = 0.0;
  double s = 0.0;
  std::size_t k = 0;
};

struct RootResult {
  Complex root;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool stalled = false;
  std::vector<TraceRow> trace;
};

/// Smallest i >= 1 with ai != 0.
inline std::size_t lowest_nonzero_exponent(const Polynomial& p) {
  const Polynomial t = truncate(p);
  if (t.size() <= 1)
    throw Error(ErrorKind::NotApplicableToConstant, "a constant polynomial has no non-constant term");
  std::size_t k = 1;
  while (t[k].is_zero()) ++k;
  return k;
}

/// Half of the largest admissible step, capped at 1/2:
///     s = min(1/2, 1/2 * |ak|^(k+1) / (M^k (n+1)^k)).
/// Any s below the uncapped bound keeps |zs| < |ak| / (M (n+1)) <= 1/(n+1),
/// so |zs| < 1 follows without a separate check.
inline double step_parameter(const Polynomial& p) {
  const Polynomial t = truncate(p);
  const std::size_t k = lowest_nonzero_exponent(t);
  if (!(t[0] == Complex{1.0}))
    throw Error(ErrorKind::InvalidArgument, "step_parameter expects a unit constant term");
  const std::size_t n = t.size() - 1;
  const double ak = norm(t[k]);
  const double m = max_coeff_norm(t, false);
  // |ak| <= M, so the ratio is below 1/(n+1); this form avoids overflowing M^k.
  const double ratio = ak / (m * static_cast<double>(n + 1));
  const double bound = ak * std::pow(ratio, static_cast<double>(k));
  const double s = std::min(0.5, 0.5 * bound);
  if (!(s > 0.0)) throw Error(ErrorKind::StepStalled, "step parameter underflowed");
  return s;
}

/// Builds z0 + zs with |p(z0 + zs)| < |p(z0)|. If rounding defeats the strict
/// decrease, s is halved until it succeeds or drops below 1e-300.
inline DescentStep descent_step(const Polynomial& p, const Complex& z0) {
  constexpr double kMinStep = 1e-300;
  const Polynomial t = truncate(p);
  if (t.size() <= 1)
    throw Error(ErrorKind::NotApplicableToConstant, "descent needs a non-constant polynomial");

  DescentStep step;
  step.before = norm(eval(t, z0));
  const Polynomial shifted = shift(t, z0);
  if (step.before == 0.0 || shifted[0].is_zero())
    throw Error(ErrorKind::AlreadyAtRoot, "z0 is already a root");

  const Polynomial q = scale_to_unit_constant(shifted);
  step.k = lowest_nonzero_exponent(q);
  step.ak = q[step.k];
  step.M = max_coeff_norm(q, false);
  step.s = step_parameter(q);
  step.tail = Polynomial(std::vector<Complex>(q.coeffs().begin() + static_cast<std::ptrdiff_t>(step.k) + 1,
                                              q.coeffs().end()));

  const auto k = static_cast<unsigned>(step.k);
  for (;;) {
    step.zs = nth_root(Complex{-step.s} / step.ak, k);
    step.after = norm(eval(t, z0 + step.zs));
    if (step.after < step.before) return step;
    step.s *= 0.5;
    ++step.halvings;
    if (step.s < kMinStep)
      throw Error(ErrorKind::StepStalled, "no strict decrease before the step underflowed");
  }
}

/// Iterates descent_step until |p(z)| <= tol, max_iter steps, or a stall.
/// The residual trace is strictly decreasing.
inline RootResult descend(const Polynomial& p, const Complex& z0, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "descend: tol must be > 0");
  const Polynomial t = truncate(p);
  if (t.size() <= 1)
    throw Error(ErrorKind::NotApplicableToConstant, "descent needs a non-constant polynomial");

  RootResult out;
  out.root = z0;
  out.residual = norm(eval(t, z0));
  out.trace.push_back({0, z0, out.residual, 0.0, 0});
  while (out.residual > tol && out.iterations < max_iter) {
    DescentStep step;
    try {
      step = descent_step(t, out.root);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::StepStalled) throw;
      out.stalled = true;
      break;
    }
    out.root = out.root + step.zs;
    out.residual = step.after;
    ++out.iterations;
    out.trace.push_back({out.iterations, out.root, out.residual, step.s, step.k});
  }
  out.converged = out.residual <= tol;
  return out;
}

}  // namespace fta
