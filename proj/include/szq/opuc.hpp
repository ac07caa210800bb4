#pragma once

// Szegő recurrence kernel for monic orthogonal polynomials on the unit circle.
//
// Convention throughout the library:
//   Phi_n(z)  = z Phi_{n-1}(z) - a_{n-1} Phi*_{n-1}(z)
//   Phi*_n(z) = Phi*_{n-1}(z) - conj(a_{n-1}) z Phi_{n-1}(z)
//   Psi_n     = same recurrence with a_j replaced by -a_j
// with moments c_k = (1/2pi) int e^{-ik phi} dsigma, so that a_0 = conj(c_1).

#include <cstddef>
#include <span>
#include <vector>

#include "szq/polynomial.hpp"

namespace szq {

/// Margin used for every strict |a| < 1 test.
inline constexpr double kUnitMargin = 1e-14;

/// Recurrence coefficients a_0, ..., a_{N-1}, each strictly inside the unit disk.
class VerblunskySequence {
 public:
  VerblunskySequence() = default;
  /// Throws InvalidCoefficients if some |a_j| >= 1 - margin.
  explicit VerblunskySequence(std::vector<Complex> coeffs, double margin = kUnitMargin);

  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] bool empty() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Complex operator[](std::size_t j) const { return coeffs_[j]; }
  [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// First `count` coefficients.
  [[nodiscard]] VerblunskySequence prefix(std::size_t count) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Trigonometric moments c_0..c_N of a measure normalized to c_0 = 1.
class MomentSequence {
 public:
  MomentSequence() : c_{Complex{1.0}} {}
  /// Rescales so that c_0 = 1. Throws InvalidMeasure when c_0 is not a
  /// positive real number.
  explicit MomentSequence(std::vector<Complex> raw);

  [[nodiscard]] std::size_t max_order() const noexcept { return c_.size() - 1; }
  [[nodiscard]] Complex operator[](std::size_t k) const { return c_[k]; }
  /// c_k for any integer k, using c_{-k} = conj(c_k).
  [[nodiscard]] Complex at(long k) const;
  [[nodiscard]] std::span<const Complex> values() const noexcept { return c_; }

 private:
  std::vector<Complex> c_;
};

/// Pointwise values of Phi_n, Phi*_n, Psi_n, Psi*_n and z-derivatives of the
/// first pair. Derivatives are zero unless requested.
struct EvalBundle {
  Complex phi{1.0};
  Complex phi_star{1.0};
  Complex psi{1.0};
  Complex psi_star{1.0};
  Complex dphi{0.0};
  Complex dphi_star{0.0};
};

/// O(n) evaluation straight from the recurrence; derivatives come from the
/// differentiated recurrence.
[[nodiscard]] EvalBundle szego_eval(const VerblunskySequence& alphas, Complex z,
                                    bool with_derivatives = false);

struct SzegoPolynomials {
  ComplexPolynomial phi;
  ComplexPolynomial phi_star;
  ComplexPolynomial psi;
  ComplexPolynomial psi_star;
};

/// Coefficient vectors of Phi_n, Phi*_n, Psi_n, Psi*_n.
[[nodiscard]] SzegoPolynomials szego_coeffs(const VerblunskySequence& alphas);

/// K_N = 2 prod (1 - |a_j|^2), in (0, 2].
[[nodiscard]] double szego_constant(const VerblunskySequence& alphas);

/// |Phi_n Psi*_n + Psi_n Phi*_n - K_n z^n| at z.
[[nodiscard]] double wronskian_residual(const VerblunskySequence& alphas, Complex z);

/// Schur parameters of a monic polynomial by the downward recurrence.
/// Succeeds exactly when every zero of p lies in the open unit disk; otherwise
/// throws ZerosNotInDisk (the Schur–Cohn test outcome, not a malfunction).
[[nodiscard]] VerblunskySequence inverse_szego(const ComplexPolynomial& p);

/// Levinson-type extraction of a_0..a_{n-1} from c_0..c_n.
/// Throws NotPositiveDefinite when a Toeplitz pivot collapses.
[[nodiscard]] VerblunskySequence verblunsky_from_moments(const MomentSequence& c, std::size_t n);

/// Inverse map: moments c_0..c_n of any measure whose first n recurrence
/// coefficients are `alphas` (missing coefficients are taken as zero).
[[nodiscard]] MomentSequence moments_from_verblunsky(const VerblunskySequence& alphas,
                                                     std::size_t n);

/// Toeplitz pivots prod_{j<k}(1-|a_j|^2) for k = 0..n, computed from moments.
/// Returns fewer entries if a pivot becomes nonpositive.
[[nodiscard]] std::vector<double> toeplitz_pivots(const MomentSequence& c, std::size_t n);

}  // namespace szq
