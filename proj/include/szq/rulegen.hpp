#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "szq/measures.hpp"
#include "szq/opuc.hpp"
#include "szq/polynomial.hpp"

namespace szq {

/// Tail coefficients closer than this to the unit circle are rejected.
inline constexpr double kTailMargin = 1e-8;
/// Minimum separation between distinct nodes.
inline constexpr double kNodeSeparation = 1e-10;

/// Data of the nodes polynomial z Phi~_{n-1} + eta Phi~*_{n-1}, where Phi~ is
/// generated by the measure's first n-m-1 coefficients followed by m free tail
/// coefficients.
class ParaOrthogonalSpec {
 public:
  /// Throws ArityMismatch ("tail length must equal m") or InvalidArgument on
  /// bad n, m, eta; InvalidCoefficients for tails too close to the circle.
  ParaOrthogonalSpec(VerblunskySequence base, VerblunskySequence tail, Complex eta,
                     std::size_t n, std::size_t m);

  [[nodiscard]] const VerblunskySequence& base() const noexcept { return base_; }
  [[nodiscard]] const VerblunskySequence& tail() const noexcept { return tail_; }
  [[nodiscard]] Complex eta() const noexcept { return eta_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }

 private:
  VerblunskySequence base_;
  VerblunskySequence tail_;
  Complex eta_;
  std::size_t n_;
  std::size_t m_;
};

/// Spec whose base is the measure's a_0..a_{n-m-2}.
[[nodiscard]] ParaOrthogonalSpec make_spec(const MeasureSpec& measure, std::size_t n,
                                           std::size_t m, const VerblunskySequence& tail,
                                           Complex eta);

/// a_0..a_{n-m-2} followed by the tail: the coefficients of Phi~_{n-1}.
[[nodiscard]] VerblunskySequence build_modified_sequence(const ParaOrthogonalSpec& spec);

/// Schur parameters of q_m: the j-th step uses eta * conj(tail[m-j]).
[[nodiscard]] VerblunskySequence qm_sequence(const VerblunskySequence& tail, Complex eta);

/// Monic q_m from q_j = z q_{j-1} - eta conj(a~_{n-1-j}) q*_{j-1}, q_0 = 1.
[[nodiscard]] ComplexPolynomial build_qm(const VerblunskySequence& tail, Complex eta);

/// z Phi~_{n-1} + eta Phi~*_{n-1}; monic of degree n with all zeros on the circle.
[[nodiscard]] ComplexPolynomial nodes_polynomial(const ParaOrthogonalSpec& spec);

/// Coefficientwise residual of
///   z Phi~_{n-1} + eta Phi~*_{n-1} = z q_m Phi_{n-m-1} + eta q*_m Phi*_{n-m-1}.
[[nodiscard]] double factorization_residual(const ParaOrthogonalSpec& spec);

/// theta(phi) = arg(q_m/q*_m)(e^{i phi}) + arg(z Phi_{n-m-1}/Phi*_{n-m-1})(e^{i phi}),
/// lifted continuously. Each factor is a Blaschke product of the form
/// z M_a(w) with M_a a disk automorphism, so the lift is carried through the
/// recurrence exactly instead of unwrapping sampled values.
class PhaseFunction {
 public:
  explicit PhaseFunction(const ParaOrthogonalSpec& spec);
  [[nodiscard]] double operator()(Angle phi) const;
  [[nodiscard]] std::size_t winding() const noexcept { return n_; }

 private:
  std::vector<Complex> base_;
  std::vector<Complex> q_;
  std::size_t n_;
};

/// The n zeros of the nodes polynomial as sorted angles in [0, 2pi).
/// Monotone bisection on the phase over 8n seed intervals, then one Newton
/// step on Re{eta^{-1/2} e^{-in phi/2} T(e^{i phi})}.
[[nodiscard]] std::vector<Angle> find_nodes(const ParaOrthogonalSpec& spec);

/// |nodes_polynomial(e^{i phi})| evaluated through the recurrence.
[[nodiscard]] double nodes_residual(const ParaOrthogonalSpec& spec, Angle phi);

/// mu_s = (z Psi~ - eta Psi~*)(z_s) / (2 z_s T'(z_s)).
[[nodiscard]] std::vector<double> weights_second_kind(const ParaOrthogonalSpec& spec,
                                                      std::span<const Angle> nodes);

/// mu_s = -eta K z_s^{n-1} |q_m(z_s)|^2 / [(z Phi q_m - eta Phi* q*_m)(z_s) T'(z_s)]
/// with Phi = Phi_{n-m-1} and K its Szegő constant. Uses no second-kind data.
[[nodiscard]] std::vector<double> weights_qm_formula(const ParaOrthogonalSpec& spec,
                                                     std::span<const Angle> nodes);

struct OracleWeights {
  std::vector<double> weights;
  double residual = 0.0;   ///< max |sum mu_s e^{-ik phi_s} - c_k|
  double condition = 0.0;  ///< 2-norm condition number of the moment system
  bool ill_conditioned = false;
};

/// Least-squares solve of sum_s mu_s e^{-ik phi_s} = c_k, k = 0..k_max, over
/// real mu. Independent of the recurrence machinery.
[[nodiscard]] OracleWeights weights_vandermonde_oracle(std::span<const Angle> nodes,
                                                       const MomentSequence& c,
                                                       std::size_t k_max);

struct QuadratureRule {
  std::vector<Angle> nodes;
  std::vector<double> weights;
  std::size_t n = 0;
  std::size_t m = 0;
  Complex eta{1.0};
  std::string measure_id;
  VerblunskySequence tail;
};

/// Positive rule exact for Laurent polynomials of degree <= n-1-m.
[[nodiscard]] QuadratureRule generate_rule(const MeasureSpec& measure, std::size_t n,
                                           std::size_t m, const VerblunskySequence& tail,
                                           Complex eta);

/// eta that forces a node at phi0: -e^{i phi0} Phi~(e^{i phi0}) / Phi~*(e^{i phi0}).
[[nodiscard]] Complex eta_for_node(const MeasureSpec& measure, std::size_t n, std::size_t m,
                                   const VerblunskySequence& tail, Angle phi0);

/// Wraps externally supplied nodes and weights (e.g. a rule file). Checks the
/// node ordering only; eta is recovered as prod(-e^{i phi_s}).
[[nodiscard]] QuadratureRule make_rule(std::vector<Angle> nodes, std::vector<double> weights,
                                       std::size_t m, std::string measure_id = {});

}  // namespace szq
