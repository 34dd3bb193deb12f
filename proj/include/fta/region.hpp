#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "fta/complex.hpp"
#include "fta/error.hpp"

namespace fta {

/// Closed axis-aligned square [x0, x0 + side] x [y0, y0 + side].
class SquareRegion {
 public:
  SquareRegion(const Complex& corner, double side) : corner_(corner), side_(side) {
    if (!corner.is_finite() || !std::isfinite(side) || !(side > 0.0))
      throw Error(ErrorKind::InvalidArgument, "square region needs a finite corner and side > 0");
  }

  const Complex& corner() const { return corner_; }
  double side() const { return side_; }
  Complex center() const { return {corner_.re + 0.5 * side_, corner_.im + 0.5 * side_}; }

  bool contains(const Complex& z) const {
    return corner_.re <= z.re && z.re <= corner_.re + side_ && corner_.im <= z.im &&
           z.im <= corner_.im + side_;
  }

  std::array<Complex, 4> corners() const {
    const double x1 = corner_.re + side_;
    const double y1 = corner_.im + side_;
    return {corner_, Complex{x1, corner_.im}, Complex{corner_.re, y1}, Complex{x1, y1}};
  }

  /// Largest norm attained on the square (always at a corner).
  double max_norm() const {
    double r = 0.0;
    for (const Complex& c : corners()) r = std::max(r, norm(c));
    return r;
  }

 private:
  Complex corner_;
  double side_;
};

}  // namespace fta
