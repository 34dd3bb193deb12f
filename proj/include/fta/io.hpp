#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fta/complex.hpp"
#include "fta/error.hpp"
#include "fta/polynomial.hpp"

namespace fta::io {

/// 17 significant digits: every double survives a print/parse round trip.
inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Imaginary magnitudes may be written bare: "i", "+i", "-i".
inline std::optional<double> parse_imag(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace detail

/// Parses `a`, `bi`, `a+bi` or `a-bi`.
inline std::optional<Complex> parse_complex(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (token.back() != 'i') {
    const auto re = detail::parse_real(token);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = detail::parse_imag(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = detail::parse_real(body.substr(0, split));
  const auto im = detail::parse_imag(body.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

inline std::string format_complex(const Complex& z) {
  if (z.im == 0.0) return format_real(z.re);
  std::string im = format_real(std::abs(z.im)) + "i";
  const char sign = std::signbit(z.im) ? '-' : '+';
  if (z.re == 0.0 && !std::signbit(z.re)) return sign == '-' ? "-" + im : im;
  return format_real(z.re) + sign + im;
}

namespace detail {

inline Polynomial parse_json_polynomial(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError(1, "expected a JSON array of [re, im] pairs");
  if (doc.empty()) throw Error(ErrorKind::EmptyPolynomial, "empty polynomial");
  std::vector<Complex> coeffs;
  coeffs.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& pair = doc[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ParseError(i + 1, "expected [re, im]");
    const Complex z{pair[0].get<double>(), pair[1].get<double>()};
    if (!z.is_finite()) throw ParseError(i + 1, "coefficient is not finite");
    coeffs.push_back(z);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Whitespace-separated complex literals (a0 first) or a JSON array of
/// [re, im] pairs.
inline Polynomial parse_polynomial(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) throw Error(ErrorKind::EmptyPolynomial, "empty polynomial");
  if (text[first] == '[') return detail::parse_json_polynomial(text.substr(first));

  std::istringstream in{std::string(text)};
  std::vector<Complex> coeffs;
  std::string token;
  while (in >> token) {
    const auto z = parse_complex(token);
    if (!z) throw ParseError(coeffs.size() + 1, "malformed complex literal '" + token + "'");
    coeffs.push_back(*z);
  }
  return Polynomial(std::move(coeffs));
}

inline std::string serialize_polynomial(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ' ';
    out += format_complex(p[i]);
  }
  return out;
}

/// Minimal streaming JSON emitter; numbers use format_real.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separate();
    write_string(k);
    out_ += ':';
    after_key_ = true;
    return *this;
  }

  JsonWriter& value(double x) {
    separate();
    out_ += std::isfinite(x) ? format_real(x) : "null";
    return *this;
  }
  JsonWriter& value(std::size_t n) {
    separate();
    out_ += std::to_string(n);
    return *this;
  }
  JsonWriter& value(bool b) {
    separate();
    out_ += b ? "true" : "false";
    return *this;
  }
  JsonWriter& value(std::string_view s) {
    separate();
    write_string(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(const Complex& z) { return begin_array().value(z.re).value(z.im).end_array(); }

  JsonWriter& value(const Polynomial& p) {
    begin_array();
    for (const Complex& c : p.coeffs()) value(c);
    return end_array();
  }

  template <class T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  const std::string& str() const { return out_; }

 private:
  JsonWriter& open(char c) {
    separate();
    out_ += c;
    first_ = true;
    return *this;
  }
  JsonWriter& close(char c) {
    out_ += c;
    first_ = false;
    return *this;
  }
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_) out_ += ',';
    first_ = false;
  }
  void write_string(std::string_view s) {
    out_ += '"';
    for (const char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool first_ = true;
  bool after_key_ = false;
};

}  // namespace fta::io
