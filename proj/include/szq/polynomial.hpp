#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace szq {

using Complex = std::complex<double>;

/// Angle on the unit circle in radians.
using Angle = double;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Dense polynomial with complex coefficients stored in ascending degree.
/// The stored length fixes the nominal degree; trailing zeros are kept so that
/// reversal with respect to the nominal degree stays well defined.
class ComplexPolynomial {
 public:
  ComplexPolynomial() : coeffs_{Complex{0.0}} {}
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  static ComplexPolynomial constant(Complex c) { return ComplexPolynomial({c}); }
  static ComplexPolynomial monomial(std::size_t k);

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Complex operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{0.0};
  }
  [[nodiscard]] Complex leading() const noexcept { return coeffs_.back(); }

  [[nodiscard]] Complex eval(Complex z) const noexcept;
  /// Value and first derivative by a single Horner sweep.
  [[nodiscard]] std::pair<Complex, Complex> eval_with_derivative(Complex z) const noexcept;

  /// Multiplication by z^k.
  [[nodiscard]] ComplexPolynomial shifted(std::size_t k) const;
  /// Pads (never truncates) to nominal degree n.
  [[nodiscard]] ComplexPolynomial padded(std::size_t n) const;

  friend ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);

 private:
  std::vector<Complex> coeffs_;
};

/// p*(z) = z^n conj(p(1/conj z)); coefficient k of the result is conj(p_{n-k}).
/// Throws InvalidDegree when the nominal degree of p exceeds n.
[[nodiscard]] ComplexPolynomial reversed(const ComplexPolynomial& p, std::size_t n);

/// Monic polynomial with the given zeros.
[[nodiscard]] ComplexPolynomial from_roots(std::span<const Complex> roots);

/// max_k |a_k - b_k| over the union of both supports.
[[nodiscard]] double max_coeff_diff(const ComplexPolynomial& a, const ComplexPolynomial& b);

/// Truncated power-series quotient num/den through z^order.
/// Throws DegenerateSpec when den(0) vanishes.
[[nodiscard]] std::vector<Complex> series_divide(const ComplexPolynomial& num,
                                                 const ComplexPolynomial& den,
                                                 std::size_t order);

}  // namespace szq
