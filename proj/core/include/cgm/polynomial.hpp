#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cgm {

/// Dense univariate polynomial, coefficients in ascending degree.
/// Instantiated with double and with Rational.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  /// (a + b t)^k
  static Polynomial binomial_power(const T& a, const T& b, unsigned k) {
    Polynomial result = constant(T(1));
    const Polynomial base({a, b});
    for (unsigned i = 0; i < k; ++i) {
      result = result * base;
    }
    return result;
  }

  const std::vector<T>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of t^k (zero beyond the stored length).
  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  /// Degree after ignoring trailing zero coefficients; -1 for the zero polynomial.
  int degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (coeffs_[k] != T(0)) {
        return static_cast<int>(k);
      }
    }
    return -1;
  }

  template <class X>
  X evaluate(const X& t) const {
    X acc = X(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc = acc * t + X(coeffs_[k]);
    }
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.size(), b.size()), T(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a[k] + b[k];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.size(), b.size()), T(0));
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a[k] - b[k];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
      return Polynomial();
    }
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> out(a.coeffs_);
    for (auto& x : out) {
      x *= s;
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] != b[k]) {
        return false;
      }
    }
    return true;
  }

  /// Drops trailing zeros, keeping at least `min_size` entries.
  Polynomial trimmed(std::size_t min_size = 1) const {
    std::vector<T> out(coeffs_);
    while (out.size() > min_size && out.back() == T(0)) {
      out.pop_back();
    }
    return Polynomial(std::move(out));
  }

  /// True iff every coefficient up to the degree is strictly positive.
  bool all_coefficients_positive() const {
    const int deg = degree();
    if (deg < 0) {
      return false;
    }
    for (int k = 0; k <= deg; ++k) {
      if (!(coeffs_[static_cast<std::size_t>(k)] > T(0))) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<T> coeffs_;
};

}  // namespace cgm
