#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lrb/error.hpp"
#include "lrb/rational.hpp"

namespace lrb {

// Dense univariate polynomial over the rationals. Coefficient index equals
// degree; trailing zeros are trimmed, so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
  static Polynomial one() { return constant(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int deg) const {
    if (deg < 0 || deg > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(deg)];
  }
  Rational leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.coeffs_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  // Quotient and remainder of this / divisor, divisor nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    Polynomial rem = *this;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
    const Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
      const int shift = rem.degree() - dd;
      const Rational factor = rem.leading() / lead;
      quot[static_cast<std::size_t>(shift)] = factor;
      std::vector<Rational> sub(static_cast<std::size_t>(rem.degree()) + 1, Rational(0));
      for (int i = 0; i <= dd; ++i)
        sub[static_cast<std::size_t>(i + shift)] = factor * divisor.coeff(i);
      rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(quot)), std::move(rem)};
  }

  Polynomial derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational(i) * coeffs_[i];
    return Polynomial(std::move(c));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * *this;
  }

  Rational evaluate(const Rational& z) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// prod_i (z - roots[i]); the empty product is the constant 1.
inline Polynomial product_of_linear_factors(const std::vector<Rational>& roots) {
  Polynomial acc = Polynomial::one();
  for (const auto& r : roots) acc = acc * Polynomial({-r, Rational(1)});
  return acc;
}

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return (a * b).divmod(poly_gcd(a, b)).first.monic();
}

// a divides b exactly (convention: a nonzero).
inline bool poly_divides(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) throw Error("divisibility by the zero polynomial");
  return b.divmod(a).second.is_zero();
}

// gcd(p, p') has degree 0, i.e. no repeated roots over any extension.
inline bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw Error("squarefree check on the zero polynomial");
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace lrb
