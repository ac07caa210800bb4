#include "szq/polynomial.hpp"

#include <algorithm>
#include <string>

#include "szq/error.hpp"

namespace szq {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
}

ComplexPolynomial ComplexPolynomial::monomial(std::size_t k) {
  std::vector<Complex> c(k + 1, Complex{0.0});
  c[k] = 1.0;
  return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::eval(Complex z) const noexcept {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> ComplexPolynomial::eval_with_derivative(Complex z) const noexcept {
  Complex p{0.0};
  Complex dp{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

ComplexPolynomial ComplexPolynomial::shifted(std::size_t k) const {
  std::vector<Complex> c(k, Complex{0.0});
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::padded(std::size_t n) const {
  if (n <= degree()) return *this;
  std::vector<Complex> c = coeffs_;
  c.resize(n + 1, Complex{0.0});
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = a[k] + b[k];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Complex> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = a[k] - b[k];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{0.0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
  std::vector<Complex> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial reversed(const ComplexPolynomial& p, std::size_t n) {
  // Trailing zeros above n are harmless; anything nonzero there is not.
  for (std::size_t k = n + 1; k <= p.degree(); ++k) {
    if (p[k] != Complex{0.0}) {
      throw Error(ErrorCode::InvalidDegree, "reversed: polynomial degree " +
                                                std::to_string(p.degree()) +
                                                " exceeds " + std::to_string(n));
    }
  }
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = std::conj(p[n - k]);
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex{1.0}};
  for (const Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex{0.0});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return ComplexPolynomial(std::move(c));
}

double max_coeff_diff(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const std::size_t len = std::max(a.degree(), b.degree()) + 1;
  double worst = 0.0;
  for (std::size_t k = 0; k < len; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

std::vector<Complex> series_divide(const ComplexPolynomial& num, const ComplexPolynomial& den,
                                   std::size_t order) {
  const Complex d0 = den[0];
  if (std::abs(d0) < 1e-14) {
    throw Error(ErrorCode::DegenerateSpec, "series division: denominator vanishes at z = 0");
  }
  std::vector<Complex> q(order + 1, Complex{0.0});
  for (std::size_t k = 0; k <= order; ++k) {
    Complex acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / d0;
  }
  return q;
}

}  // namespace szq
