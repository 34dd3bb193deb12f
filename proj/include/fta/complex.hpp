#pragma once

#include <cmath>
#include <numbers>

#include "fta/error.hpp"

namespace fta {

/// A point of the complex plane. Both parts are finite IEEE doubles.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  constexpr Complex() = default;
  constexpr Complex(double real) : re(real) {}  // NOLINT: implicit real -> complex
  constexpr Complex(double real, double imag) : re(real), im(imag) {}

  constexpr Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr Complex& operator*=(const Complex& o) {
    const double r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator/=(const Complex& o);

  friend constexpr Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend constexpr Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend constexpr Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend constexpr Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

  friend constexpr bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  constexpr bool is_zero() const { return re == 0.0 && im == 0.0; }
  bool is_finite() const { return std::isfinite(re) && std::isfinite(im); }
};

constexpr Complex conj(const Complex& z) { return {z.re, -z.im}; }

/// Euclidean norm sqrt(re^2 + im^2), computed without intermediate overflow.
inline double norm(const Complex& z) { return std::hypot(z.re, z.im); }

// Smith's algorithm: scale by the larger component of the divisor.
inline Complex& Complex::operator/=(const Complex& o) {
  if (std::abs(o.re) >= std::abs(o.im)) {
    const double ratio = o.im / o.re;
    const double den = o.re + o.im * ratio;
    const double r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = r;
  } else {
    const double ratio = o.re / o.im;
    const double den = o.re * ratio + o.im;
    const double r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = r;
  }
  return *this;
}

/// Polar form with radius >= 0 and angle in (-pi, pi]. Zero maps to (0, 0).
struct Polar {
  double radius = 0.0;
  double angle = 0.0;
};

inline Polar polar(const Complex& z) {
  if (z.is_zero()) return {};
  double angle = std::atan2(z.im, z.re);
  // atan2 yields -pi for a negative real with a negative-zero imaginary part.
  if (angle == -std::numbers::pi) angle = std::numbers::pi;
  return {norm(z), angle};
}

inline Complex from_polar(const Polar& p) {
  return {p.radius * std::cos(p.angle), p.radius * std::sin(p.angle)};
}

/// z^n by square-and-multiply; pow(z, 0) == 1 for every z.
inline Complex pow(Complex z, unsigned n) {
  Complex result{1.0, 0.0};
  while (n != 0) {
    if (n & 1U) result *= z;
    n >>= 1U;
    if (n != 0) z *= z;
  }
  return result;
}

/// Principal nth root radius^(1/n) * exp(i * angle / n).
inline Complex nth_root(const Complex& z, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "nth_root: n must be positive");
  if (n == 1) return z;
  const Polar p = polar(z);
  if (p.radius == 0.0) return {};
  const double radius = n == 2 ? std::sqrt(p.radius) : std::pow(p.radius, 1.0 / n);
  return from_polar({radius, p.angle / n});
}

}  // namespace fta
