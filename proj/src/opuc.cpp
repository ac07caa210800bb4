#include "szq/opuc.hpp"

#include <cmath>
#include <string>

#include "szq/error.hpp"

namespace szq {

VerblunskySequence::VerblunskySequence(std::vector<Complex> coeffs, double margin)
    : coeffs_(std::move(coeffs)) {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double r = std::abs(coeffs_[j]);
    if (!(r < 1.0 - margin)) {
      throw Error(ErrorCode::InvalidCoefficients,
                  "recurrence coefficient a_" + std::to_string(j) + " has modulus " +
                      std::to_string(r) + ", must lie strictly inside the unit disk");
    }
  }
}

VerblunskySequence VerblunskySequence::prefix(std::size_t count) const {
  if (count > coeffs_.size()) {
    throw Error(ErrorCode::ArityMismatch, "prefix longer than sequence");
  }
  return VerblunskySequence(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + count));
}

MomentSequence::MomentSequence(std::vector<Complex> raw) : c_(std::move(raw)) {
  if (c_.empty()) throw Error(ErrorCode::InvalidMeasure, "empty moment sequence");
  const Complex c0 = c_[0];
  if (!(c0.real() > 0.0) || std::abs(c0.imag()) > 1e-12 * c0.real()) {
    throw Error(ErrorCode::InvalidMeasure, "moment c_0 must be a positive real (nonzero mass)");
  }
  for (auto& c : c_) c /= c0.real();
  c_[0] = 1.0;
}

Complex MomentSequence::at(long k) const {
  const auto idx = static_cast<std::size_t>(k < 0 ? -k : k);
  if (idx >= c_.size()) {
    throw Error(ErrorCode::InsufficientMoments,
                "moment c_" + std::to_string(k) + " not available (have up to " +
                    std::to_string(max_order()) + ")");
  }
  return k < 0 ? std::conj(c_[idx]) : c_[idx];
}

EvalBundle szego_eval(const VerblunskySequence& alphas, Complex z, bool with_derivatives) {
  EvalBundle b;
  for (const Complex a : alphas.coeffs()) {
    const Complex ac = std::conj(a);
    const Complex phi = z * b.phi - a * b.phi_star;
    const Complex phi_star = b.phi_star - ac * z * b.phi;
    const Complex psi = z * b.psi + a * b.psi_star;
    const Complex psi_star = b.psi_star + ac * z * b.psi;
    if (with_derivatives) {
      const Complex dphi = b.phi + z * b.dphi - a * b.dphi_star;
      const Complex dphi_star = b.dphi_star - ac * (b.phi + z * b.dphi);
      b.dphi = dphi;
      b.dphi_star = dphi_star;
    }
    b.phi = phi;
    b.phi_star = phi_star;
    b.psi = psi;
    b.psi_star = psi_star;
  }
  return b;
}

SzegoPolynomials szego_coeffs(const VerblunskySequence& alphas) {
  SzegoPolynomials s{ComplexPolynomial::constant(1.0), ComplexPolynomial::constant(1.0),
                     ComplexPolynomial::constant(1.0), ComplexPolynomial::constant(1.0)};
  for (const Complex a : alphas.coeffs()) {
    const Complex ac = std::conj(a);
    const ComplexPolynomial zphi = s.phi.shifted(1);
    const ComplexPolynomial zpsi = s.psi.shifted(1);
    ComplexPolynomial phi = zphi - a * s.phi_star;
    ComplexPolynomial phi_star = s.phi_star - ac * zphi;
    ComplexPolynomial psi = zpsi + a * s.psi_star;
    ComplexPolynomial psi_star = s.psi_star + ac * zpsi;
    s = {std::move(phi), std::move(phi_star), std::move(psi), std::move(psi_star)};
  }
  return s;
}

double szego_constant(const VerblunskySequence& alphas) {
  double k = 2.0;
  for (const Complex a : alphas.coeffs()) k *= 1.0 - std::norm(a);
  return k;
}

double wronskian_residual(const VerblunskySequence& alphas, Complex z) {
  const EvalBundle b = szego_eval(alphas, z);
  const Complex zn = std::pow(z, static_cast<int>(alphas.size()));
  return std::abs(b.phi * b.psi_star + b.psi * b.phi_star - szego_constant(alphas) * zn);
}

VerblunskySequence inverse_szego(const ComplexPolynomial& p) {
  const std::size_t n = p.degree();
  if (std::abs(p.leading() - Complex{1.0}) > 1e-13) {
    throw Error(ErrorCode::InvalidArgument, "inverse_szego: polynomial must be monic");
  }
  std::vector<Complex> out(n);
  ComplexPolynomial current = p;
  for (std::size_t k = n; k >= 1; --k) {
    const Complex a = -current[0];
    if (!(std::abs(a) < 1.0 - kUnitMargin)) {
      throw Error(ErrorCode::ZerosNotInDisk,
                  "Schur parameter b_" + std::to_string(k - 1) + " has modulus " +
                      std::to_string(std::abs(a)) + ": not all zeros lie in the open unit disk");
    }
    out[k - 1] = a;
    // (P_k + a P_k*) / (1 - |a|^2) = z Phi_{k-1}
    const ComplexPolynomial lifted =
        (1.0 / (1.0 - std::norm(a))) * (current + a * reversed(current, k));
    std::vector<Complex> c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = lifted[j + 1];
    c[k - 1] = 1.0;
    current = ComplexPolynomial(std::move(c));
  }
  return VerblunskySequence(std::move(out));
}

namespace {

// L(p) = (1/2pi) int p(e^{i phi}) dsigma = sum_j p_j conj(c_j).
Complex moment_functional(const ComplexPolynomial& p, const MomentSequence& c) {
  Complex acc{0.0};
  for (std::size_t j = 0; j <= p.degree(); ++j) acc += p[j] * std::conj(c[j]);
  return acc;
}

constexpr double kPivotFloor = 1e-12;

}  // namespace

VerblunskySequence verblunsky_from_moments(const MomentSequence& c, std::size_t n) {
  if (c.max_order() < n) {
    throw Error(ErrorCode::InsufficientMoments, "need moments c_0..c_" + std::to_string(n));
  }
  std::vector<Complex> out;
  out.reserve(n);
  ComplexPolynomial phi = ComplexPolynomial::constant(1.0);
  ComplexPolynomial phi_star = ComplexPolynomial::constant(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = moment_functional(phi_star, c).real();
    if (!(pivot > kPivotFloor)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "Toeplitz pivot " + std::to_string(k) + " = " + std::to_string(pivot) +
                      ": moment data not positive definite (degenerate measure)");
    }
    const ComplexPolynomial zphi = phi.shifted(1);
    const Complex a = moment_functional(zphi, c) / pivot;
    if (!(std::abs(a) < 1.0 - kUnitMargin)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "extracted a_" + std::to_string(k) + " outside the unit disk");
    }
    out.push_back(a);
    ComplexPolynomial next = zphi - a * phi_star;
    phi_star = phi_star - std::conj(a) * zphi;
    phi = std::move(next);
  }
  return VerblunskySequence(std::move(out));
}

MomentSequence moments_from_verblunsky(const VerblunskySequence& alphas, std::size_t n) {
  std::vector<Complex> c(n + 1, Complex{0.0});
  c[0] = 1.0;
  ComplexPolynomial phi = ComplexPolynomial::constant(1.0);
  ComplexPolynomial phi_star = ComplexPolynomial::constant(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = k < alphas.size() ? alphas[k] : Complex{0.0};
    const ComplexPolynomial zphi = phi.shifted(1);
    ComplexPolynomial next = zphi - a * phi_star;
    phi_star = phi_star - std::conj(a) * zphi;
    phi = std::move(next);
    // <Phi_{k+1}, 1> = 0 fixes the one unknown moment.
    Complex acc{0.0};
    for (std::size_t j = 0; j <= k; ++j) acc += phi[j] * std::conj(c[j]);
    c[k + 1] = std::conj(-acc);
  }
  return MomentSequence(std::move(c));
}

std::vector<double> toeplitz_pivots(const MomentSequence& c, std::size_t n) {
  std::vector<double> pivots;
  ComplexPolynomial phi = ComplexPolynomial::constant(1.0);
  ComplexPolynomial phi_star = ComplexPolynomial::constant(1.0);
  for (std::size_t k = 0; k <= n && k <= c.max_order(); ++k) {
    const double pivot = moment_functional(phi_star, c).real();
    pivots.push_back(pivot);
    if (!(pivot > kPivotFloor) || k == n || k == c.max_order()) break;
    const ComplexPolynomial zphi = phi.shifted(1);
    const Complex a = moment_functional(zphi, c) / pivot;
    ComplexPolynomial next = zphi - a * phi_star;
    phi_star = phi_star - std::conj(a) * zphi;
    phi = std::move(next);
  }
  return pivots;
}

}  // namespace szq
