#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "szq/measures.hpp"
#include "szq/opuc.hpp"
#include "szq/rulegen.hpp"

namespace szq {

inline constexpr double kEndpointTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-10;

struct IntervalRule {
  std::vector<double> x;       ///< strictly decreasing in [-1, 1]
  std::vector<double> lambda;  ///< positive, summing to 1
  std::size_t degree = 0;      ///< algebraic exactness carried over from the circle rule
  bool has_plus_one = false;
  bool has_minus_one = false;
};

/// Chebyshev moments c_k = int T_k(x) dpsi(x) of an interval measure given by
/// its power moments int x^k dpsi, k = 0..N. Normalizes by the mass; throws
/// InvalidMeasure when the result is not positive semidefinite.
[[nodiscard]] MomentSequence symmetrize(std::span<const double> power_moments);

/// Circle measure with the symmetrized moments.
[[nodiscard]] MeasureSpec interval_measure(std::span<const double> power_moments);

/// Rule whose nodes are symmetric under phi -> 2pi - phi. Needs a real tail
/// and eta = +1 or -1; the measure's coefficients must be real as well.
[[nodiscard]] QuadratureRule generate_symmetric_rule(const MeasureSpec& measure, std::size_t n,
                                                     std::size_t m,
                                                     std::span<const double> tail, int eta_sign);

/// Pairs phi with 2pi - phi. Nodes at 0 and pi become the endpoints +1 and -1
/// with lambda = mu; paired interior nodes get lambda = mu + mu'. Throws
/// SymmetryViolation naming the worst pair.
[[nodiscard]] IntervalRule circle_to_interval(const QuadratureRule& rule);

/// max_k |sum lambda_s x_s^k - m_k / m_0| for k <= degree.
[[nodiscard]] double check_algebraic_exactness(const IntervalRule& ir,
                                               std::span<const double> power_moments,
                                               std::size_t degree);

}  // namespace szq
