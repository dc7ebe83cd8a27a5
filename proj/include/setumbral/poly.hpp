#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setumbral/rational.hpp"

namespace setumbral {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored low degree first and kept normalized: the last
/// stored coefficient is nonzero, so the zero polynomial has no coefficients.
class Poly {
 public:
  static constexpr int zero_degree = INT_MIN;

  Poly() = default;
  explicit Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

  static Poly monomial(unsigned k, Rational c = Rational(1)) {
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  /// Degree, or zero_degree for the zero polynomial.
  int degree() const {
    return coeffs_.empty() ? zero_degree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Rational leading_coefficient() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
  }

  Poly pow(unsigned exponent) const {
    Poly out(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) out *= *this;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  Poly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Lagrange interpolation through (xs[i], ys[i]); abscissae must be distinct.
  static Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    detail::require(xs.size() == ys.size(), "interpolate: abscissa/ordinate count mismatch");
    Poly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Poly basis(Rational(1));
      Rational denom(1);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        detail::require(xs[i] != xs[j], "interpolate: repeated abscissa");
        basis *= Poly{Rational(-xs[j]), Rational(1)};
        denom *= xs[i] - xs[j];
      }
      out += basis * Rational(ys[i] / denom);
    }
    return out;
  }

  // Human-readable form, highest degree first: "x^3 - 3x^2 + 2x".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = mag == 1 && k > 0;
      if (!unit) {
        std::string m = setumbral::to_string(mag);
        out += (k > 0 && m.find('/') != std::string::npos) ? "(" + m + ")" : m;
      }
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// x(x-1)...(x-n+1)
inline Poly falling_factorial(unsigned n) {
  Poly out(Rational(1));
  for (unsigned i = 0; i < n; ++i) out *= Poly{Rational(-static_cast<long>(i)), Rational(1)};
  return out;
}

// x(x+1)...(x+n-1)
inline Poly rising_factorial(unsigned n) {
  Poly out(Rational(1));
  for (unsigned i = 0; i < n; ++i) out *= Poly{Rational(static_cast<long>(i)), Rational(1)};
  return out;
}

}  // namespace setumbral
