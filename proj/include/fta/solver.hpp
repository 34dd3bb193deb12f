#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "fta/complex.hpp"
#include "fta/descent.hpp"
#include "fta/error.hpp"
#include "fta/evt_grid.hpp"
#include "fta/growth_bounds.hpp"
#include "fta/polynomial.hpp"

namespace fta {

struct SolveReport {
  std::vector<RootResult> roots;
  double reconstruction_error = 0.0;
  GrowthCertificate enclosure;
  CertifiedMinimum seed;

  bool converged() const {
    return std::all_of(roots.begin(), roots.end(), [](const RootResult& r) { return r.converged; });
  }
};

// Seed search parameters: a coarse grid fixes the target gap, then the
// branch-and-bound refines within this many cells.
inline constexpr std::size_t kSeedGrid = 16;
inline constexpr std::size_t kSeedBudget = 20000;

namespace detail {

inline Polynomial require_nonconstant(const Polynomial& p) {
  Polynomial t = truncate(p);
  if (t.empty())
    throw Error(ErrorKind::DegenerateZeroPolynomial, "all points are roots of the zero polynomial");
  if (t.size() == 1)
    throw Error(ErrorKind::NoRootExists, "no root exists for nonzero constant polynomial");
  return t;
}

}  // namespace detail

/// Root search along the proof's pipeline: enclosure square, certified
/// minimum of |p| on it as the seed, then descent from the seed.
/// `report.roots` holds the single result.
inline SolveReport solve_one(const Polynomial& p, double tol, std::size_t max_iter) {
  const Polynomial t = detail::require_nonconstant(p);
  SolveReport report;
  report.enclosure = growth_certificate(t);
  const SquareRegion square = minimum_enclosing_square(t);
  const CertifiedMinimum coarse = grid_min(t, square, kSeedGrid);
  const double eps = std::max(tol, coarse.value / 10.0);
  report.seed = certified_min(t, square, eps, kSeedBudget);
  report.roots.push_back(descend(t, report.seed.argmin, tol, max_iter));
  return report;
}

inline RootResult find_root(const Polynomial& p, double tol, std::size_t max_iter) {
  return std::move(solve_one(p, tol, max_iter).roots.front());
}

/// All roots by repeated root finding and deflation. Each root found on the
/// deflated polynomial is polished by descending on the original from there;
/// the deflation itself uses the unpolished root of the deflated polynomial.
/// Repeated roots come back as separate, nearly equal entries.
inline SolveReport find_all_roots(const Polynomial& p, double tol, std::size_t max_iter) {
  const Polynomial t = detail::require_nonconstant(p);
  SolveReport report;
  Polynomial rest = t;
  bool first = true;
  std::vector<Complex> found;
  while (rest.size() > 1) {
    SolveReport one = solve_one(rest, tol, max_iter);
    if (first) {
      report.enclosure = one.enclosure;
      report.seed = one.seed;
      first = false;
    }
    const Complex estimate = one.roots.front().root;
    RootResult polished = descend(t, estimate, tol, max_iter);
    polished.iterations += one.roots.front().iterations;
    found.push_back(polished.root);
    report.roots.push_back(std::move(polished));
    rest = truncate(deflate(rest, estimate).quotient);
  }

  const Polynomial rebuilt = from_roots(found, t.back());
  double err = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) err = std::max(err, norm(rebuilt[i] - t[i]));
  report.reconstruction_error = err;
  return report;
}

}  // namespace fta
