#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "setumbral/error.hpp"
#include "setumbral/poly.hpp"
#include "setumbral/rational.hpp"
#include "setumbral/umbral.hpp"

namespace setumbral {

/// A polynomial sequence of binomial type together with its delta functional.
///
///   monomial        x^n                          A q = q'(0)
///   falling:a       (x/a)_n, a != 0              A q = q(a) − q(0)
///   rising          x(x+1)...(x+n−1)             A q = q(0) − q(−1)
///   abel:a          x(x − a n)^{n−1}             A q = q'(a)
///   logfamily       Σ_{σ⊢[n]} (x)_{ℓ(σ)} Π_T (−1)^{|T|−1}(|T|−1)!
///                                                A (x)_n = δ_{n>0}
class BinomialFamily {
 public:
  enum class Kind { monomial, falling_factorial, rising_factorial, abel, log_family };

  static BinomialFamily monomial() { return BinomialFamily(Kind::monomial, Rational(0)); }
  static BinomialFamily falling(const Rational& a) {
    detail::require(a != 0, "falling factorial family needs a != 0");
    return BinomialFamily(Kind::falling_factorial, a);
  }
  static BinomialFamily rising() { return BinomialFamily(Kind::rising_factorial, Rational(0)); }
  static BinomialFamily abel(const Rational& a) { return BinomialFamily(Kind::abel, a); }
  static BinomialFamily log_family() { return BinomialFamily(Kind::log_family, Rational(0)); }

  /// Parses monomial | falling:a | rising | abel:a | logfamily.
  static BinomialFamily parse(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    bool has_arg = colon != std::string_view::npos;
    auto no_arg = [&](BinomialFamily f) {
      if (has_arg) throw parse_error("family '" + std::string(head) + "' takes no parameter");
      return f;
    };
    auto arg = [&] {
      if (!has_arg) throw parse_error("family '" + std::string(head) + "' needs a parameter, e.g. " +
                                      std::string(head) + ":1");
      return parse_rational(spec.substr(colon + 1));
    };
    if (head == "monomial") return no_arg(monomial());
    if (head == "rising") return no_arg(rising());
    if (head == "logfamily") return no_arg(log_family());
    if (head == "abel") return abel(arg());
    if (head == "falling") {
      Rational a = arg();
      if (a == 0) throw parse_error("falling:a needs a != 0");
      return falling(a);
    }
    throw parse_error("unknown family '" + std::string(spec) +
                      "' (expected monomial, falling:a, rising, abel:a or logfamily)");
  }

  Kind kind() const { return kind_; }
  const Rational& parameter() const { return param_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::monomial: return "monomial";
      case Kind::falling_factorial: return "falling:" + setumbral::to_string(param_);
      case Kind::rising_factorial: return "rising";
      case Kind::abel: return "abel:" + setumbral::to_string(param_);
      case Kind::log_family: return "logfamily";
    }
    return {};
  }

  /// a_n(x)
  Poly poly(int n) const {
    detail::require(n >= 0, "family polynomial index must be >= 0");
    const auto un = static_cast<unsigned>(n);
    switch (kind_) {
      case Kind::monomial: return Poly::monomial(un);
      case Kind::falling_factorial: {
        Poly out(Rational(1));
        Rational inv = 1 / param_;
        for (unsigned i = 0; i < un; ++i) out *= Poly{Rational(-static_cast<long>(i)), inv};
        return out;
      }
      case Kind::rising_factorial: return rising_factorial(un);
      case Kind::abel: {
        if (n == 0) return Poly(Rational(1));
        Poly shifted{Rational(-param_ * static_cast<long>(n)), Rational(1)};
        return Poly::x() * shifted.pow(un - 1);
      }
      case Kind::log_family: {
        // Σ_k s(n,k) (x)_k, s the signed Stirling numbers of the first kind.
        std::vector<Rational> s{Rational(1)};
        for (unsigned m = 0; m < un; ++m) {
          std::vector<Rational> next(s.size() + 1);
          for (std::size_t k = 0; k < s.size(); ++k) {
            next[k + 1] += s[k];
            next[k] -= s[k] * static_cast<unsigned long>(m);
          }
          s = std::move(next);
        }
        Poly out;
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (s[k] != 0) out += falling_factorial(static_cast<unsigned>(k)) * s[k];
        }
        return out;
      }
    }
    return Poly();
  }

  /// The associated delta functional, with moments up to x^degree_bound.
  Functional delta(int degree_bound) const;

  friend bool operator==(const BinomialFamily&, const BinomialFamily&) = default;

 private:
  BinomialFamily(Kind kind, Rational param) : kind_(kind), param_(std::move(param)) {}

  Kind kind_;
  Rational param_;
};

inline Poly family_poly(const BinomialFamily& fam, int n) { return fam.poly(n); }

/// Coefficients c_k with f = Σ_k c_k a_k(x), by back substitution on the triangular basis.
inline std::vector<Rational> to_family_basis(const Poly& f, const BinomialFamily& fam) {
  if (f.is_zero()) return {};
  const int d = f.degree();
  std::vector<Poly> basis;
  for (int k = 0; k <= d; ++k) basis.push_back(fam.poly(k));
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  Poly rest = f;
  for (int k = d; k >= 0; --k) {
    Rational ck = rest.coefficient(k) / basis[static_cast<std::size_t>(k)].leading_coefficient();
    if (ck != 0) rest -= basis[static_cast<std::size_t>(k)] * ck;
    c[static_cast<std::size_t>(k)] = ck;
  }
  return c;
}

inline Poly from_family_basis(std::span<const Rational> c, const BinomialFamily& fam) {
  Poly out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out += fam.poly(static_cast<int>(k)) * c[k];
  }
  return out;
}

inline Functional BinomialFamily::delta(int degree_bound) const {
  detail::require(degree_bound >= 1, "delta functional needs degree bound >= 1");
  switch (kind_) {
    case Kind::monomial: return Functional::derivative(Rational(0), degree_bound);
    case Kind::abel: return Functional::derivative(param_, degree_bound);
    case Kind::falling_factorial: return Functional::difference(param_, Rational(0), degree_bound);
    case Kind::rising_factorial: return Functional::difference(Rational(0), Rational(-1), degree_bound);
    case Kind::log_family: {
      // B (x)_k = δ_{k>0}; on x^m that is the sum of the falling-basis coefficients with k >= 1.
      std::vector<Rational> m{Rational(0)};
      const BinomialFamily falling1 = falling(Rational(1));
      for (int n = 1; n <= degree_bound; ++n) {
        auto c = to_family_basis(Poly::monomial(static_cast<unsigned>(n)), falling1);
        Rational sum(0);
        for (std::size_t k = 1; k < c.size(); ++k) sum += c[k];
        m.push_back(sum);
      }
      return Functional(std::move(m));
    }
  }
  return Functional({Rational(0)});
}

inline Functional family_delta(const BinomialFamily& fam, int degree_bound) { return fam.delta(degree_bound); }

/// a_n(x+y) = Σ_k C(n,k) a_k(x) a_{n−k}(y), checked on the grid {0..n}².
///
/// Both sides have degree <= n in each variable, so agreement on the grid is exact agreement.
inline bool satisfies_binomial_identity(const BinomialFamily& fam, int n) {
  std::vector<Poly> a;
  for (int k = 0; k <= n; ++k) a.push_back(fam.poly(k));
  for (int xi = 0; xi <= n; ++xi) {
    for (int yi = 0; yi <= n; ++yi) {
      Rational x(xi), y(yi);
      Rational rhs(0);
      for (int k = 0; k <= n; ++k) {
        rhs += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * a[static_cast<std::size_t>(k)](x) *
               a[static_cast<std::size_t>(n - k)](y);
      }
      if (a[static_cast<std::size_t>(n)](Rational(x + y)) != rhs) return false;
    }
  }
  return true;
}

}  // namespace setumbral
