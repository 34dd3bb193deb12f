#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fta/complex.hpp"
#include "fta/error.hpp"

namespace fta {

/// Dense polynomial a0 + a1 z + ... + an z^n, stored constant term first.
/// Trailing zeros are kept as given; `truncate` produces the normalized form.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {}
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Last stored coefficient. Equals the leading coefficient once normalized.
  const Complex& back() const { return coeffs_.back(); }

  bool is_normalized() const { return coeffs_.empty() || !coeffs_.back().is_zero(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation; the empty polynomial is identically zero.
inline Complex eval(const Polynomial& p, const Complex& z) {
  Complex acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

/// Drops the maximal trailing run of coefficients with norm <= zero_tol.
/// The default tolerance of 0 makes the test exact.
inline Polynomial truncate(const Polynomial& p, double zero_tol = 0.0) {
  auto c = p.coeffs();
  std::size_t len = c.size();
  while (len > 0 && (c[len - 1].is_zero() || norm(c[len - 1]) <= zero_tol)) --len;
  return Polynomial(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len)));
}

inline std::size_t degree(const Polynomial& p) {
  const Polynomial t = truncate(p);
  if (t.empty()) throw Error(ErrorKind::DegenerateZeroPolynomial, "the zero polynomial has no degree");
  return t.size() - 1;
}

inline bool is_constant(const Polynomial& p) { return truncate(p).size() <= 1; }

/// p / a0, with the constant term set to exactly 1.
inline Polynomial scale_to_unit_constant(const Polynomial& p) {
  if (p.empty() || p[0].is_zero())
    throw Error(ErrorKind::ZeroConstantTerm, "constant term is zero; z = 0 is a root");
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  const Complex a0 = p[0];
  out[0] = Complex{1.0, 0.0};
  for (std::size_t i = 1; i < out.size(); ++i) out[i] /= a0;
  return Polynomial(std::move(out));
}

/// Taylor shift: returns q with q(z) = p(z + z0), by repeated synthetic
/// division at z0. The leading coefficient is carried over untouched.
inline Polynomial shift(const Polynomial& p, const Complex& z0) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  if (z0.is_zero()) return Polynomial(std::move(c));
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += z0 * c[j + 1];
  }
  return Polynomial(std::move(c));
}

inline Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Complex> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = static_cast<double>(i) * p[i];
  return Polynomial(std::move(out));
}

/// Max coefficient norm of the normalized polynomial, optionally leaving out
/// the leading coefficient.
inline double max_coeff_norm(const Polynomial& p, bool exclude_leading) {
  const Polynomial t = truncate(p);
  const std::size_t count = exclude_leading && !t.empty() ? t.size() - 1 : t.size();
  if (count == 0)
    throw Error(ErrorKind::DegenerateZeroPolynomial, "max_coeff_norm: no coefficients selected");
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, norm(t[i]));
  return best;
}

struct Deflation {
  Polynomial quotient;
  Complex remainder;
};

/// Synthetic division p(z) = (z - r) q(z) + rem.
inline Deflation deflate(const Polynomial& p, const Complex& r) {
  const Polynomial t = truncate(p);
  if (degree(t) == 0)
    throw Error(ErrorKind::CannotDeflateConstant, "cannot deflate a constant polynomial");
  const std::size_t n = t.size() - 1;
  std::vector<Complex> q(n);
  Complex acc = t[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = acc;
    acc = acc * r + t[i];
  }
  return {Polynomial(std::move(q)), acc};
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Polynomial(std::move(out));
}

/// lead * prod (z - r_i).
inline Polynomial from_roots(std::span<const Complex> roots, const Complex& lead) {
  Polynomial acc{lead};
  for (const Complex& r : roots) acc = multiply(acc, Polynomial{-r, Complex{1.0}});
  return acc;
}

}  // namespace fta
