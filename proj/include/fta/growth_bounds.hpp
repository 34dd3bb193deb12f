#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fta/complex.hpp"
#include "fta/error.hpp"
#include "fta/polynomial.hpp"
#include "fta/region.hpp"

namespace fta {

/// Radii past which the norm of a polynomial is controlled by its leading
/// term.
///
/// For |z| >= threshold_radius:
///     1/2 |an| |z|^n  <=  |p(z)|  <=  3/2 |an| |z|^n
/// For |z| >= enclosure_radius additionally |p(z)| >= |p(0)|, so every global
/// minimizer of |p| lies in the disc (and the square) of that radius.
struct GrowthCertificate {
  double threshold_radius = 1.0;
  double enclosure_radius = 1.0;
  double lead_norm = 0.0;  // |an|
  double sub_max = 0.0;    // A = max |ai|, i < n
  std::size_t deg = 0;
};

inline GrowthCertificate growth_certificate(const Polynomial& p) {
  const Polynomial t = truncate(p);
  if (t.size() <= 1)
    throw Error(ErrorKind::NotApplicableToConstant, "growth bounds need a non-constant polynomial");

  GrowthCertificate cert;
  cert.deg = t.size() - 1;
  cert.lead_norm = norm(t.back());
  cert.sub_max = max_coeff_norm(t, /*exclude_leading=*/true);
  // The sub-leading part has n terms, each bounded by A |z|^(n-1) once |z| >= 1;
  // with K = |an| / 2 the hypothesis A n <= K |z| becomes |z| >= 2 A n / |an|.
  const double growth = 2.0 * cert.sub_max * static_cast<double>(cert.deg) / cert.lead_norm;
  cert.threshold_radius = std::max(1.0, growth);
  cert.enclosure_radius = std::max(cert.threshold_radius, 2.0 * norm(t[0]) / cert.lead_norm);
  return cert;
}

struct BoundsCheck {
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;

  bool holds(double rel_slack = 1e-9) const {
    return lower * (1.0 - rel_slack) <= value && value <= upper * (1.0 + rel_slack);
  }
};

/// Evaluates the growth sandwich at z. z must lie at or beyond the threshold.
inline BoundsCheck check_bounds(const Polynomial& p, const Complex& z, const GrowthCertificate& cert) {
  const double r = norm(z);
  if (r < cert.threshold_radius)
    throw Error(ErrorKind::BelowThreshold, "|z| is below the growth threshold");
  const double lead_term = cert.lead_norm * std::pow(r, static_cast<double>(cert.deg));
  return {0.5 * lead_term, norm(eval(p, z)), 1.5 * lead_term};
}

/// Square centered at the origin with half-side equal to the enclosure radius.
inline SquareRegion minimum_enclosing_square(const Polynomial& p) {
  const double r = growth_certificate(p).enclosure_radius;
  return SquareRegion(Complex{-r, -r}, 2.0 * r);
}

}  // namespace fta
