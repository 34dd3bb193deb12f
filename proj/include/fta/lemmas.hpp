#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fta/complex.hpp"
#include "fta/descent.hpp"
#include "fta/error.hpp"
#include "fta/evt_grid.hpp"
#include "fta/growth_bounds.hpp"
#include "fta/polynomial.hpp"
#include "fta/solver.hpp"

namespace fta {

/// Outcome of replaying one lemma on random samples. `worst_margin` is the
/// smallest slack observed (negative means a violation).
struct LemmaResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst_margin = 0.0;

  bool passed() const { return failures == 0; }
};

inline constexpr std::uint64_t kDefaultCheckSeed = 42;

namespace detail {

class LemmaSampler {
 public:
  explicit LemmaSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Magnitudes spread over [10^lo, 10^hi].
  Complex log_polar(double lo, double hi) {
    return from_polar({std::pow(10.0, uniform(lo, hi)), uniform(-std::numbers::pi, std::numbers::pi)});
  }

  Complex annulus(double r0, double r1) {
    return from_polar({uniform(r0, r1), uniform(-std::numbers::pi, std::numbers::pi)});
  }

  Complex in_square(const SquareRegion& sq) {
    return {sq.corner().re + uniform(0.0, sq.side()), sq.corner().im + uniform(0.0, sq.side())};
  }

  unsigned small_int(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

class LemmaTally {
 public:
  explicit LemmaTally(std::string name) {
    result_.name = std::move(name);
    result_.worst_margin = std::numeric_limits<double>::infinity();
  }

  void record(double margin) {
    ++result_.samples;
    if (!(margin >= 0.0)) ++result_.failures;
    result_.worst_margin = std::min(result_.worst_margin, margin);
  }

  LemmaResult done() && { return std::move(result_); }

 private:
  LemmaResult result_;
};

}  // namespace detail

/// Replays the norm laws, de Moivre, the growth lemma, the enclosure argument,
/// the certified minimum, d'Alembert's decrease and the root search on `p`,
/// `samples` random draws each.
inline std::vector<LemmaResult> check_lemmas(const Polynomial& p, std::size_t samples,
                                             std::uint64_t seed = kDefaultCheckSeed) {
  const Polynomial t = truncate(p);
  const GrowthCertificate cert = growth_certificate(t);
  const SquareRegion square = minimum_enclosing_square(t);
  detail::LemmaSampler rng(seed);
  std::vector<LemmaResult> out;

  {
    detail::LemmaTally mult("norm_multiplicativity"), tri("triangle_inequality"),
        rev("reverse_triangle_inequality");
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex x = rng.log_polar(-3, 3);
      const Complex y = rng.log_polar(-3, 3);
      const double nx = norm(x), ny = norm(y);
      mult.record(1e-12 * (1 + nx * ny) - std::abs(norm(x * y) - nx * ny));
      tri.record(nx + ny + 1e-12 * (1 + nx + ny) - norm(x + y));
      rev.record(norm(x - y) - (nx - ny) + 1e-12 * (1 + nx + ny));
    }
    out.push_back(std::move(mult).done());
    out.push_back(std::move(tri).done());
    out.push_back(std::move(rev).done());
  }
  {
    detail::LemmaTally moivre("de_moivre_round_trip");
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex z = rng.log_polar(-6, 6);
      const unsigned n = rng.small_int(1, 16);
      moivre.record(1e-10 - norm(pow(nth_root(z, n), n) - z) / norm(z));
    }
    out.push_back(std::move(moivre).done());
  }
  {
    detail::LemmaTally upper("growth_upper_bound"), lower("growth_lower_bound");
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex z = rng.annulus(cert.threshold_radius, 10 * cert.threshold_radius);
      const BoundsCheck b = check_bounds(t, z, cert);
      upper.record((b.upper * (1 + 1e-9) - b.value) / b.upper);
      lower.record((b.value - b.lower * (1 - 1e-9)) / b.lower);
    }
    out.push_back(std::move(upper).done());
    out.push_back(std::move(lower).done());
  }
  {
    detail::LemmaTally encl("enclosure_domination");
    const double at_origin = norm(t[0]);
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex z = rng.annulus(cert.enclosure_radius, 10 * cert.enclosure_radius);
      encl.record(norm(eval(t, z)) - at_origin + 1e-9 * (1 + at_origin));
    }
    out.push_back(std::move(encl).done());
  }
  {
    detail::LemmaTally evt("certified_minimum");
    const CertifiedMinimum m = certified_min(t, square, 1e-6, 100000);
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex z = rng.in_square(square);
      evt.record(norm(eval(t, z)) + m.gap - m.value + 1e-9);
    }
    out.push_back(std::move(evt).done());
  }
  {
    detail::LemmaTally dec("dalembert_decrease");
    for (std::size_t i = 0; i < samples; ++i) {
      const Complex z0 = rng.in_square(square);
      if (norm(eval(t, z0)) <= 1e-6) continue;
      try {
        const DescentStep step = descent_step(t, z0);
        dec.record(step.after < step.before ? step.before - step.after : -1.0);
      } catch (const Error&) {
        dec.record(-1.0);
      }
    }
    out.push_back(std::move(dec).done());
  }
  {
    detail::LemmaTally root("root_exists");
    const double tol = 1e-8 * (1 + max_coeff_norm(t, false));
    const RootResult r = find_root(t, 1e-10, 10000);
    root.record(tol - r.residual);
    out.push_back(std::move(root).done());
  }
  return out;
}

}  // namespace fta
