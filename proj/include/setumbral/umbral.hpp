#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/rational.hpp"

namespace setumbral {

/// A linear functional on polynomials of degree <= D, stored as its moments
/// L x^0, L x^1, ..., L x^D.
class Functional {
 public:
  explicit Functional(std::vector<Rational> moments) : moments_(std::move(moments)) {
    detail::require(!moments_.empty(), "Functional: need at least one moment");
  }

  /// q ↦ q(at)
  static Functional evaluation(const Rational& at, int degree_bound) {
    std::vector<Rational> m;
    Rational p(1);
    for (int n = 0; n <= degree_bound; ++n) {
      m.push_back(p);
      p *= at;
    }
    return Functional(std::move(m));
  }

  /// q ↦ q'(at)
  static Functional derivative(const Rational& at, int degree_bound) {
    std::vector<Rational> m{Rational(0)};
    Rational p(1);  // at^{n-1}
    for (int n = 1; n <= degree_bound; ++n) {
      m.push_back(p * n);
      p *= at;
    }
    return Functional(std::move(m));
  }

  /// q ↦ q(to) − q(from)
  static Functional difference(const Rational& to, const Rational& from, int degree_bound) {
    Functional a = evaluation(to, degree_bound);
    Functional b = evaluation(from, degree_bound);
    for (std::size_t n = 0; n < a.moments_.size(); ++n) a.moments_[n] -= b.moments_[n];
    return a;
  }

  int degree_bound() const { return static_cast<int>(moments_.size()) - 1; }
  std::span<const Rational> moments() const { return moments_; }

  bool is_delta() const { return moments_.size() >= 2 && moments_[0] == 0 && moments_[1] != 0; }

  Rational operator()(const Poly& f) const {
    if (f.degree() > degree_bound()) {
      throw precondition_error("Functional: polynomial degree " + std::to_string(f.degree()) +
                               " exceeds functional degree bound " + std::to_string(degree_bound()));
    }
    Rational acc(0);
    auto c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * moments_[k];
    return acc;
  }

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  std::vector<Rational> moments_;
};

inline Rational functional_apply(const Functional& L, const Poly& f) { return L(f); }

/// LM x^n = Σ_k C(n,k) L x^k · M x^{n-k}
inline Functional umbral_product(const Functional& L, const Functional& M) {
  detail::require(L.degree_bound() == M.degree_bound(), "umbral_product: degree bounds differ");
  auto l = L.moments();
  auto m = M.moments();
  std::vector<Rational> out(l.size());
  for (std::size_t n = 0; n < l.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out[n] += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * l[k] * m[n - k];
    }
  }
  return Functional(std::move(out));
}

/// k-fold umbral power; A^0 is evaluation at 0.
inline Functional functional_power(const Functional& A, unsigned k) {
  Functional out = Functional::evaluation(Rational(0), A.degree_bound());
  for (unsigned i = 0; i < k; ++i) out = umbral_product(out, A);
  return out;
}

}  // namespace setumbral
