#pragma once

#include <hyperdelta/error.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace hyperdelta {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed so degree() is exact; the zero
/// polynomial has degree -1.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(T constant) : c_{std::move(constant)} { trim(); }  // NOLINT

  /// x^k.
  static Polynomial monomial(std::size_t k, T coefficient = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& leading() const { return c_.back(); }

  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  /// Horner evaluation; U may be any ring that T embeds into.
  template <typename U>
  U operator()(const U& x) const {
    U acc = U(T(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial antiderivative() const {
    std::vector<T> a(c_.size() + 1, T(0));
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / T(static_cast<long>(k + 1));
    return Polynomial(std::move(a));
  }

  /// Coefficients of p(x0 + t) in powers of t, i.e. p^{(k)}(x0)/k!.
  Polynomial taylor_shift(const T& x0) const {
    std::vector<T> c = c_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += x0 * c[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division over a field: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
    std::vector<T> r = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<T> q(r.size() - b.c_.size() + 1, T(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      T factor = r[k + b.c_.size() - 1] / b.leading();
      q[k] = factor;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= factor * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  /// Monic greatest common divisor (exact fields only).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(T(1) / a.leading());
  }

  Polynomial scaled(const T& s) const {
    std::vector<T> c = c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace hyperdelta
