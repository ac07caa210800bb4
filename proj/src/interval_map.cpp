#include "szq/interval_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "szq/error.hpp"

namespace szq {

MomentSequence symmetrize(std::span<const double> power_moments) {
  if (power_moments.empty()) throw Error(ErrorCode::InvalidMeasure, "no interval moments given");
  const double mass = power_moments[0];
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw Error(ErrorCode::InvalidMeasure, "interval measure must have positive mass");
  }
  const std::size_t n = power_moments.size() - 1;
  std::vector<Complex> c(n + 1);
  // Chebyshev coefficients in the monomial basis: T_{k+1} = 2x T_k - T_{k-1}.
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(n + 1, 0.0);
  cur[0] = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += cur[j] * power_moments[j];
    c[k] = acc / mass;
    std::vector<double> next(n + 1, 0.0);
    for (std::size_t j = 0; j + 1 <= n; ++j) next[j + 1] = (k == 0 ? 1.0 : 2.0) * cur[j];
    for (std::size_t j = 0; j <= n; ++j) next[j] -= k == 0 ? 0.0 : prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  MomentSequence out(std::move(c));
  const std::vector<double> piv = toeplitz_pivots(out, n);
  if (!piv.empty() && piv.back() < -1e-10) {
    throw Error(ErrorCode::InvalidMeasure,
                "interval moments are not those of a positive measure (Toeplitz pivot " +
                    std::to_string(piv.back()) + ")");
  }
  return out;
}

MeasureSpec interval_measure(std::span<const double> power_moments) {
  const MomentSequence c = symmetrize(power_moments);
  return MeasureSpec::explicit_moments(std::vector<Complex>(c.values().begin(), c.values().end()));
}

QuadratureRule generate_symmetric_rule(const MeasureSpec& measure, std::size_t n, std::size_t m,
                                       std::span<const double> tail, int eta_sign) {
  if (eta_sign != 1 && eta_sign != -1) {
    throw Error(ErrorCode::InvalidArgument,
                "symmetric rules need eta = +1 or -1; other values break the phi -> -phi symmetry");
  }
  if (n < 1 || m > n - 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and m <= n-1");
  const VerblunskySequence base = verblunsky(measure, n - m - 1);
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (std::abs(base[j].imag()) > 1e-12) {
      throw Error(ErrorCode::SymmetryViolation,
                  "measure is not symmetric: coefficient a_" + std::to_string(j) + " is not real");
    }
  }
  std::vector<Complex> t(tail.begin(), tail.end());
  return generate_rule(measure, n, m, VerblunskySequence(std::move(t)),
                       Complex{static_cast<double>(eta_sign)});
}

IntervalRule circle_to_interval(const QuadratureRule& rule) {
  IntervalRule ir;
  ir.degree = rule.n - 1 - rule.m;
  std::vector<std::pair<double, double>> upper;  // (phi, mu) with phi in (0, pi)
  std::vector<std::pair<double, double>> lower;  // (2pi - phi, mu) with phi in (pi, 2pi)
  double plus_one = 0.0;
  double minus_one = 0.0;
  for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
    const double phi = rule.nodes[s];
    const double mu = rule.weights[s];
    if (phi < kEndpointTolerance || kTwoPi - phi < kEndpointTolerance) {
      ir.has_plus_one = true;
      plus_one += mu;
    } else if (std::abs(phi - kPi) < kEndpointTolerance) {
      ir.has_minus_one = true;
      minus_one += mu;
    } else if (phi < kPi) {
      upper.emplace_back(phi, mu);
    } else {
      lower.emplace_back(kTwoPi - phi, mu);
    }
  }
  std::sort(lower.begin(), lower.end());
  auto violation = [](const char* what, double a, double b, double gap) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "node set is not symmetric under phi -> 2pi - phi: %s (worst pair %.17g vs "
                  "%.17g, mismatch %.3g)",
                  what, a, b, gap);
    return Error(ErrorCode::SymmetryViolation, buf);
  };
  if (upper.size() != lower.size()) {
    const double a = upper.empty() ? 0.0 : upper.front().first;
    const double b = lower.empty() ? 0.0 : kTwoPi - lower.front().first;
    throw violation("unequal counts in the two half circles", a, b,
                    static_cast<double>(upper.size()) - static_cast<double>(lower.size()));
  }
  double worst = 0.0;
  std::size_t worst_idx = 0;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const double gap = std::abs(upper[i].first - lower[i].first);
    if (gap > worst) {
      worst = gap;
      worst_idx = i;
    }
  }
  if (worst > kSymmetryTolerance) {
    throw violation("unpaired node", upper[worst_idx].first, kTwoPi - lower[worst_idx].first,
                    worst);
  }
  if (ir.has_plus_one) {
    ir.x.push_back(1.0);
    ir.lambda.push_back(plus_one);
  }
  for (std::size_t i = 0; i < upper.size(); ++i) {
    ir.x.push_back(std::cos(0.5 * (upper[i].first + lower[i].first)));
    ir.lambda.push_back(upper[i].second + lower[i].second);
  }
  if (ir.has_minus_one) {
    ir.x.push_back(-1.0);
    ir.lambda.push_back(minus_one);
  }
  return ir;
}

double check_algebraic_exactness(const IntervalRule& ir, std::span<const double> power_moments,
                                 std::size_t degree) {
  if (power_moments.size() < degree + 1) {
    throw Error(ErrorCode::InsufficientMoments,
                "need interval moments through degree " + std::to_string(degree));
  }
  const double mass = power_moments[0];
  if (!(mass > 0.0)) throw Error(ErrorCode::InvalidMeasure, "interval measure has no mass");
  std::vector<double> pw(ir.x.size(), 1.0);
  double worst = 0.0;
  for (std::size_t k = 0; k <= degree; ++k) {
    double acc = 0.0;
    for (std::size_t s = 0; s < ir.x.size(); ++s) acc += ir.lambda[s] * pw[s];
    worst = std::max(worst, std::abs(acc - power_moments[k] / mass));
    for (std::size_t s = 0; s < ir.x.size(); ++s) pw[s] *= ir.x[s];
  }
  return worst;
}

}  // namespace szq
