#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "szq/opuc.hpp"
#include "szq/polynomial.hpp"

namespace szq {

struct Lebesgue {};

/// Density prod(1-|a_j|^2) / |P*(e^{i phi})|^2 with P(z) = prod (z - b_j);
/// for one root this is (1-|b|^2)/|1 - conj(b) e^{i phi}|^2.
struct BernsteinSzego {
  std::vector<Complex> roots;
};

/// Constant recurrence coefficients a_j = a.
struct Geronimus {
  Complex a;
};

/// Finitely many recurrence coefficients, continued by zeros.
struct ExplicitVerblunsky {
  VerblunskySequence alphas;
};

struct ExplicitMoments {
  MomentSequence moments;
};

/// Uniform samples f(2 pi j / N), j = 0..N-1, of a nonnegative density.
struct DensitySamples {
  std::vector<double> samples;
};

/// A normalized positive measure on the circle. Factories validate the
/// parameters; normalization to unit mass happens at construction.
class MeasureSpec {
 public:
  using Variant = std::variant<Lebesgue, BernsteinSzego, Geronimus, ExplicitVerblunsky,
                               ExplicitMoments, DensitySamples>;

  static MeasureSpec lebesgue();
  static MeasureSpec bernstein_szego(std::vector<Complex> roots);
  static MeasureSpec geronimus(Complex a);
  static MeasureSpec explicit_verblunsky(VerblunskySequence alphas);
  static MeasureSpec explicit_moments(std::vector<Complex> raw);
  static MeasureSpec density_samples(std::vector<double> samples);

  [[nodiscard]] const Variant& variant() const noexcept { return v_; }
  /// Short provenance token, e.g. "bernstein-szego:0.5".
  [[nodiscard]] const std::string& id() const noexcept { return id_; }

 private:
  MeasureSpec(Variant v, std::string id) : v_(std::move(v)), id_(std::move(id)) {}
  Variant v_;
  std::string id_;
};

/// Normalized moments c_0..c_n.
[[nodiscard]] MomentSequence moments(const MeasureSpec& spec, std::size_t n);

/// Recurrence coefficients a_0..a_{count-1}. Closed-form variants are read off
/// directly; moment-based variants go through verblunsky_from_moments.
[[nodiscard]] VerblunskySequence verblunsky(const MeasureSpec& spec, std::size_t count);

[[nodiscard]] bool has_density(const MeasureSpec& spec);

/// f(phi) with (1/2pi) int f dphi = 1. Throws UnsupportedVariant for measures
/// without an absolutely continuous density.
[[nodiscard]] double density_eval(const MeasureSpec& spec, Angle phi);

/// F(z) = 1 + 2 sum c_k z^k truncated at z^order.
[[nodiscard]] ComplexPolynomial caratheodory_series(const MeasureSpec& spec, std::size_t order);

}  // namespace szq
