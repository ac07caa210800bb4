#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "szq/measures.hpp"
#include "szq/opuc.hpp"
#include "szq/rulegen.hpp"

namespace szq {

// ---- exactness --------------------------------------------------------------

struct ExactnessReport {
  std::vector<double> errors;  ///< e_k = |sum mu_s e^{-ik phi_s} - c_k|, k = 0..k_probe
  long precise_degree = -1;    ///< -1 when even e_0 exceeds the tolerance
  double tolerance = 0.0;
};

/// 1e-10 * n * max_k |c_k|.
[[nodiscard]] double default_exactness_tolerance(std::size_t n, const MomentSequence& c);

/// Scans k = 0..k_probe; tol <= 0 selects the default tolerance.
[[nodiscard]] ExactnessReport check_exactness(const QuadratureRule& rule, const MomentSequence& c,
                                              std::size_t k_probe, double tol = 0.0);

// ---- Carathéodory series ----------------------------------------------------

struct CaratheodoryReport {
  double max_error = 0.0;    ///< through order n-m-1
  std::size_t order = 0;
  bool zeros_in_disk = false;  ///< p_{n-1} passes the Schur-Cohn test
  std::string disk_message;    ///< failure reason when zeros_in_disk is false
};

/// From the rule: sum mu_s (z_s + z)/(z_s - z) = (eta p* - z p)/(eta p* + z p).
[[nodiscard]] CaratheodoryReport caratheodory_match(const QuadratureRule& rule,
                                                    const MomentSequence& c);
/// From the spec: z p = (z (Phi~ + Psi~) + eta (Phi~* - Psi~*)) / 2.
[[nodiscard]] CaratheodoryReport caratheodory_match(const ParaOrthogonalSpec& spec,
                                                    const MomentSequence& c);

// ---- S-function -------------------------------------------------------------

struct SFunctionTrace {
  std::vector<Angle> samples;
  std::vector<bool> skipped;  ///< sample within 1e-8 of a node
  std::vector<double> s_values;
  std::vector<double> r_values;
  std::vector<double> t_values;
  std::vector<Complex> tau_values;    ///< e^{i n psi/2} T(psi)
  std::vector<Complex> omega_values;  ///< i e^{i n psi/2} S(psi)
  double max_s_minus_r = 0.0;
  double max_weight_recovery = 0.0;  ///< max_s |mu_s + S(phi_s)/(2 T'(phi_s))|
  double division_remainder = 0.0;   ///< odd n: remainder of S~/q (0 when exact)
  std::vector<Angle> s_zeros;
  std::size_t separation_violations = 0;
  bool node_first = false;  ///< sgn(ST)(0+) > 0: phi_1 precedes theta_1
};

/// T(phi) = prod sin((phi - phi_s)/2). S is obtained from finitely many moments
/// of the measure; R from the partial-fraction form built from the weights.
/// Needs n >= 2 and m <= floor(n/2) - 1.
[[nodiscard]] SFunctionTrace s_function(const QuadratureRule& rule, const MomentSequence& c,
                                        std::span<const Angle> samples);

/// 8n equispaced samples offset by half a step.
[[nodiscard]] std::vector<Angle> default_s_samples(std::size_t n);

// ---- orthogonality ----------------------------------------------------------

struct OrthogonalityReport {
  double max_violation = 0.0;
  std::size_t conditions = 0;  ///< number of exponentials e^{i nu phi} probed
};

/// Moments of N(phi) = Re-form of the nodes polynomial against e^{+-i(k+gamma)phi},
/// k = 0..floor(n/2)-1-m, n = 2(floor(n/2)+gamma).
[[nodiscard]] OrthogonalityReport check_orthogonality(const QuadratureRule& rule,
                                                      const MomentSequence& c);
[[nodiscard]] OrthogonalityReport check_orthogonality(const ParaOrthogonalSpec& spec,
                                                      const MomentSequence& c);
/// Same node function against the normalized d phi / |q*_m Phi*_{n-1-m}|^2
/// for k up to floor(n/2)-1; exact moments of that measure come from the
/// Schur parameters of q_m Phi_{n-1-m}.
[[nodiscard]] OrthogonalityReport check_weighted_orthogonality(const ParaOrthogonalSpec& spec);

// ---- interlacing ------------------------------------------------------------

struct InterlacingReport {
  std::vector<Angle> reference_zeros;  ///< zeros of z Phi_{n-1-l} + kappa Phi*_{n-1-l}
  std::vector<std::size_t> nodes_per_arc;
  std::size_t violations = 0;  ///< arcs without a rule node
};

/// Needs rule.m <= l <= n-1 and |kappa| = 1.
[[nodiscard]] InterlacingReport check_interlacing(const QuadratureRule& rule,
                                                  const MeasureSpec& measure, std::size_t l,
                                                  Complex kappa);

/// Zeros of Re and Im of eta^{-1/2} e^{-in phi/2} z Phi~_{n-1}(z) must alternate
/// around the circle. Returns the number of adjacent equal-type pairs plus any
/// shortfall from n zeros of each type.
[[nodiscard]] std::size_t sign_interlacing_violations(const ParaOrthogonalSpec& spec);

// ---- asymptotics ------------------------------------------------------------

struct AsymptoticRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Angle> nodes;
  std::vector<double> inv_n_mu;  ///< 1/(n mu_s)
  std::vector<double> density;   ///< f(phi_s)
  std::vector<double> g;         ///< 1 - (2/n) Re{e^{i phi} q*'/q*}
  double max_asym_dev = 0.0;     ///< max over the window of |1/(n mu) - g/f|
  long precise_degree = -1;
};

struct AsymptoticWindow {
  Angle lo = 0.0;
  Angle hi = kTwoPi;
  double margin = 0.0;  ///< only nodes in [lo + margin, hi - margin] count
};

using TailPolicy = std::function<VerblunskySequence(std::size_t n, std::size_t m)>;

/// Tail of length m whose entries are all `value`.
[[nodiscard]] TailPolicy constant_tail(Complex value);

/// One row per n. m_of_n maps n to the reduction (clamped to n-1).
[[nodiscard]] std::vector<AsymptoticRow> asymptotic_report(
    const MeasureSpec& measure, std::span<const std::size_t> n_list,
    const std::function<std::size_t(std::size_t)>& m_of_n, const TailPolicy& tail,
    Complex eta = Complex{1.0}, AsymptoticWindow window = {});

enum class Trend { Decreasing, Nonincreasing, Zero, NotMonotone };

[[nodiscard]] Trend deviation_trend(std::span<const AsymptoticRow> rows);
[[nodiscard]] const char* to_string(Trend t) noexcept;

// ---- Szegő function ---------------------------------------------------------

/// exp(l_0/2 + sum_{k>=1} l_k z^k) with l_k the Fourier coefficients of log f
/// on a grid; |D(e^{i phi})|^2 = f(phi) and D(0)^2 = exp(mean log f).
class SzegoFunction {
 public:
  explicit SzegoFunction(const MeasureSpec& measure, std::size_t grid = 1024);
  [[nodiscard]] Complex operator()(Complex z) const;
  /// exp(mean log f): the limit of K_n / 2.
  [[nodiscard]] double geometric_mean() const noexcept { return std::exp(log_coeffs_[0].real()); }

 private:
  std::vector<Complex> log_coeffs_;  ///< l_0, l_1, ..., l_{grid/2}
};

}  // namespace szq
