#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace xell {

/// Dense univariate real polynomial with coefficients stored in ascending
/// degree. The zero polynomial keeps an empty coefficient vector and reports
/// degree -1, so that the boundary conventions xi_{-1} = 0 and P_{-1} = 0
/// compose through arithmetic without special cases.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(double a) { return Polynomial{{a}}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
  }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }

  // Horner evaluation. Exact (one load) for constants, 0 for the zero poly.
  double operator()(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
  }

  // p(x) -> p(-x): negate odd-degree coefficients.
  Polynomial reflected() const {
    std::vector<double> r = c_;
    for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(double s) {
    for (double& a : c_) a *= s;
    if (s == 0.0) c_.clear();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, double s) {
    a *= s;
    return a;
  }
  friend Polynomial operator*(double s, Polynomial a) {
    a *= s;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<double> prod(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        prod[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(prod));
  }

  // Largest |coefficient|; 0 for the zero polynomial. Used as the natural
  // scale for coefficient-wise comparisons.
  double coeff_scale() const {
    double s = 0.0;
    for (double a : c_) s = std::max(s, std::abs(a));
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }

  std::vector<double> c_;
};

// Coefficient-wise max |a - b|.
inline double max_coeff_diff(const Polynomial& a, const Polynomial& b) {
  const int d = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

}  // namespace xell
