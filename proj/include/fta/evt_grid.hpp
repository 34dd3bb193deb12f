#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

#include "fta/complex.hpp"
#include "fta/error.hpp"
#include "fta/polynomial.hpp"
#include "fta/region.hpp"

namespace fta {

/// Near-minimizer of a real function over a square with a proven gap:
/// the true minimum lies in [value - gap, value].
struct CertifiedMinimum {
  Complex argmin;
  double value = 0.0;
  double gap = 0.0;
  std::size_t evaluations = 0;
  std::size_t cells = 0;
  bool budget_exhausted = false;

  double lower_bound() const { return value - gap; }
};

namespace detail {

// Distance from a cell's center to its farthest point, per unit side.
inline constexpr double kHalfDiagonal = std::numbers::sqrt2 / 2.0;

// Coefficient norms of p', i * |ai| at index i - 1.
inline std::vector<double> derivative_norms(const Polynomial& p) {
  std::vector<double> d;
  d.reserve(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * norm(p[i]));
  return d;
}

inline double lipschitz_from_norms(const std::vector<double>& dnorms, double radius) {
  double acc = 0.0;
  for (std::size_t i = dnorms.size(); i-- > 0;) acc = acc * radius + dnorms[i];
  return acc;
}

}  // namespace detail

/// L = sum_{i>=1} i |ai| R^(i-1), with R the largest norm on the square. Bounds
/// |p'| on the square and therefore the Lipschitz constant of |p| there.
inline double lipschitz_bound(const Polynomial& p, const SquareRegion& region) {
  return detail::lipschitz_from_norms(detail::derivative_norms(p), region.max_norm());
}

/// Minimum of f over the (n+1) x (n+1) grid on the square. Ties go to the
/// smallest row-major index (rows run along the imaginary axis). The gap uses
/// the caller's Lipschitz constant: every point is within side/n * sqrt(2)/2
/// of some grid point.
template <class F>
CertifiedMinimum grid_min(F&& f, double lipschitz, const SquareRegion& region, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "grid_min: n must be positive");
  const double x0 = region.corner().re;
  const double y0 = region.corner().im;
  const double side = region.side();
  const double dn = static_cast<double>(n);

  CertifiedMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= n; ++j) {
    const double y = y0 + side * static_cast<double>(j) / dn;
    for (std::size_t i = 0; i <= n; ++i) {
      const Complex z{x0 + side * static_cast<double>(i) / dn, y};
      const double v = f(z);
      ++best.evaluations;
      if (v < best.value) {
        best.value = v;
        best.argmin = z;
      }
    }
  }
  best.cells = 1;
  best.gap = lipschitz * detail::kHalfDiagonal * (side / dn);
  return best;
}

inline CertifiedMinimum grid_min(const Polynomial& p, const SquareRegion& region, std::size_t n) {
  return grid_min([&p](const Complex& z) { return norm(eval(p, z)); }, lipschitz_bound(p, region),
                  region, n);
}

/// Best-first Lipschitz branch-and-bound over sub-squares.
///
/// Each cell carries the bound f(center) - L_cell * sqrt(2)/2 * side_cell,
/// floored at `value_floor`. The incumbent is the best value seen at any cell
/// center or corner. Cells whose bound is not below the incumbent are pruned;
/// the cell with the smallest bound is split 2x2. Stops once the gap reaches
/// epsilon or `budget` cells have been created; the gap is valid either way.
///
/// `cell_lipschitz(region)` must bound the Lipschitz constant of f on that
/// region.
template <class F, class L>
  requires std::invocable<L&, const SquareRegion&>
CertifiedMinimum certified_min(F&& f, L&& cell_lipschitz, const SquareRegion& region, double epsilon,
                               std::size_t budget,
                               double value_floor = -std::numeric_limits<double>::infinity()) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "certified_min: epsilon must be > 0");

  struct Cell {
    double x, y, side;
    double bound;
    std::uint64_t id;
  };
  struct Later {
    bool operator()(const Cell& a, const Cell& b) const {
      return a.bound != b.bound ? a.bound > b.bound : a.id > b.id;
    }
  };

  CertifiedMinimum out;
  out.value = std::numeric_limits<double>::infinity();
  const double x_hi = region.corner().re + region.side();
  const double y_hi = region.corner().im + region.side();
  // Child edges are sums of halved sides and can round past the parent's edge.
  auto sample = [&](Complex z) {
    z.re = std::clamp(z.re, region.corner().re, x_hi);
    z.im = std::clamp(z.im, region.corner().im, y_hi);
    const double v = f(z);
    ++out.evaluations;
    if (v < out.value) {
      out.value = v;
      out.argmin = z;
    }
    return v;
  };
  std::uint64_t next_id = 0;
  auto make_cell = [&](double x, double y, double side) {
    const SquareRegion cell(Complex{x, y}, side);
    const double fc = sample(cell.center());
    const double bound = std::max(value_floor, fc - cell_lipschitz(cell) * detail::kHalfDiagonal * side);
    ++out.cells;
    return Cell{x, y, side, bound, next_id++};
  };

  std::priority_queue<Cell, std::vector<Cell>, Later> open;
  open.push(make_cell(region.corner().re, region.corner().im, region.side()));
  for (const Complex& c : region.corners()) sample(c);

  // Lowest bound among cells too small to split further in double precision.
  double stuck_bound = std::numeric_limits<double>::infinity();
  auto global_lower = [&] {
    double lb = std::min(out.value, stuck_bound);
    if (!open.empty()) lb = std::min(lb, open.top().bound);
    return lb;
  };

  while (!open.empty()) {
    if (out.value - global_lower() <= epsilon) break;
    if (out.cells + 4 > budget) {
      out.budget_exhausted = true;
      break;
    }
    const Cell cell = open.top();
    open.pop();
    if (cell.bound >= out.value) continue;

    const double h = 0.5 * cell.side;
    const double xm = cell.x + h;
    const double ym = cell.y + h;
    if (!(h > 0.0) || xm == cell.x || ym == cell.y || xm == cell.x + cell.side ||
        ym == cell.y + cell.side) {
      stuck_bound = std::min(stuck_bound, cell.bound);
      continue;
    }
    const double x1 = cell.x + cell.side;
    const double y1 = cell.y + cell.side;
    // Edge midpoints complete the corner sets of the four children.
    sample(Complex{xm, cell.y});
    sample(Complex{cell.x, ym});
    sample(Complex{x1, ym});
    sample(Complex{xm, y1});
    for (const auto& [cx, cy] : {std::pair{cell.x, cell.y}, std::pair{xm, cell.y},
                                 std::pair{cell.x, ym}, std::pair{xm, ym}}) {
      const Cell child = make_cell(cx, cy, h);
      if (child.bound < out.value) open.push(child);
    }
  }
  out.gap = std::max(0.0, out.value - global_lower());
  return out;
}

/// Global-constant Lipschitz variant for arbitrary continuous objectives.
template <class F>
CertifiedMinimum certified_min(F&& f, double lipschitz, const SquareRegion& region, double epsilon,
                               std::size_t budget,
                               double value_floor = -std::numeric_limits<double>::infinity()) {
  return certified_min(std::forward<F>(f), [lipschitz](const SquareRegion&) { return lipschitz; },
                       region, epsilon, budget, value_floor);
}

inline CertifiedMinimum certified_min(const Polynomial& p, const SquareRegion& region, double epsilon,
                                      std::size_t budget) {
  const std::vector<double> dnorms = detail::derivative_norms(p);
  return certified_min([&p](const Complex& z) { return norm(eval(p, z)); },
                       [&dnorms](const SquareRegion& cell) {
                         return detail::lipschitz_from_norms(dnorms, cell.max_norm());
                       },
                       region, epsilon, budget, 0.0);
}

}  // namespace fta
