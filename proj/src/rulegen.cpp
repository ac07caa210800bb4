#include "szq/rulegen.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "szq/error.hpp"

namespace szq {

ParaOrthogonalSpec::ParaOrthogonalSpec(VerblunskySequence base, VerblunskySequence tail,
                                       Complex eta, std::size_t n, std::size_t m)
    : base_(std::move(base)), tail_(std::move(tail)), eta_(eta), n_(n), m_(m) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (m_ > n_ - 1) {
    throw Error(ErrorCode::InvalidArgument, "m must satisfy 0 <= m <= n-1");
  }
  if (tail_.size() != m_) throw Error(ErrorCode::ArityMismatch, "tail length must equal m");
  if (base_.size() != n_ - m_ - 1) {
    throw Error(ErrorCode::ArityMismatch, "base length must equal n-m-1");
  }
  if (std::abs(std::abs(eta_) - 1.0) > 1e-14) {
    throw Error(ErrorCode::InvalidArgument, "eta must lie on the unit circle");
  }
  for (std::size_t j = 0; j < tail_.size(); ++j) {
    if (std::abs(tail_[j]) > 1.0 - kTailMargin) {
      throw Error(ErrorCode::InvalidCoefficients,
                  "tail coefficient " + std::to_string(j) + " is within 1e-8 of the unit circle");
    }
  }
}

ParaOrthogonalSpec make_spec(const MeasureSpec& measure, std::size_t n, std::size_t m,
                             const VerblunskySequence& tail, Complex eta) {
  if (n < 1 || m > n - 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and m <= n-1");
  return ParaOrthogonalSpec(verblunsky(measure, n - m - 1), tail, eta, n, m);
}

VerblunskySequence build_modified_sequence(const ParaOrthogonalSpec& spec) {
  std::vector<Complex> c(spec.base().coeffs().begin(), spec.base().coeffs().end());
  c.insert(c.end(), spec.tail().coeffs().begin(), spec.tail().coeffs().end());
  return VerblunskySequence(std::move(c));
}

VerblunskySequence qm_sequence(const VerblunskySequence& tail, Complex eta) {
  const std::size_t m = tail.size();
  std::vector<Complex> c(m);
  for (std::size_t j = 1; j <= m; ++j) c[j - 1] = eta * std::conj(tail[m - j]);
  return VerblunskySequence(std::move(c));
}

ComplexPolynomial build_qm(const VerblunskySequence& tail, Complex eta) {
  return szego_coeffs(qm_sequence(tail, eta)).phi;
}

ComplexPolynomial nodes_polynomial(const ParaOrthogonalSpec& spec) {
  const SzegoPolynomials p = szego_coeffs(build_modified_sequence(spec));
  return p.phi.shifted(1) + spec.eta() * p.phi_star.padded(spec.n());
}

double factorization_residual(const ParaOrthogonalSpec& spec) {
  const ComplexPolynomial lhs = nodes_polynomial(spec);
  const SzegoPolynomials base = szego_coeffs(spec.base());
  const ComplexPolynomial q = build_qm(spec.tail(), spec.eta());
  const ComplexPolynomial q_star = reversed(q, spec.m());
  const ComplexPolynomial rhs =
      (q * base.phi).shifted(1) + spec.eta() * (q_star * base.phi_star).padded(spec.n());
  return max_coeff_diff(lhs, rhs);
}

PhaseFunction::PhaseFunction(const ParaOrthogonalSpec& spec)
    : base_(spec.base().coeffs().begin(), spec.base().coeffs().end()), n_(spec.n()) {
  const VerblunskySequence q = qm_sequence(spec.tail(), spec.eta());
  q_.assign(q.coeffs().begin(), q.coeffs().end());
}

double PhaseFunction::operator()(Angle phi) const {
  // arg M_a(e^{i w}) = w - 2 arg(1 - conj(a) e^{i w}); the second term never
  // leaves (-pi/2, pi/2), so the principal value is already the lift.
  double beta = phi;
  for (const Complex a : base_) {
    beta = phi + beta - 2.0 * std::arg(1.0 - std::conj(a) * std::polar(1.0, beta));
  }
  double rho = 0.0;
  for (const Complex c : q_) {
    const double w = phi + rho;
    rho = w - 2.0 * std::arg(1.0 - std::conj(c) * std::polar(1.0, w));
  }
  return rho + beta;
}

namespace {

struct NodesValue {
  Complex t;
  Complex dt;
};

NodesValue eval_nodes_poly(const VerblunskySequence& modified, Complex eta, Complex z) {
  const EvalBundle b = szego_eval(modified, z, true);
  return {z * b.phi + eta * b.phi_star, b.phi + z * b.dphi + eta * b.dphi_star};
}

// Re{eta^{-1/2} e^{-i n phi/2} T(e^{i phi})} and its phi-derivative.
std::pair<double, double> real_form(const VerblunskySequence& modified, Complex eta,
                                    std::size_t n, Angle phi) {
  const Complex z = std::polar(1.0, phi);
  const NodesValue v = eval_nodes_poly(modified, eta, z);
  const Complex rot = std::polar(1.0, -0.5 * std::arg(eta) - 0.5 * static_cast<double>(n) * phi);
  const Complex i{0.0, 1.0};
  const Complex g = rot * v.t;
  const Complex dg = rot * (-0.5 * static_cast<double>(n) * i * v.t + i * z * v.dt);
  return {g.real(), dg.real()};
}

Angle wrap_angle(Angle phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

}  // namespace

std::vector<Angle> find_nodes(const ParaOrthogonalSpec& spec) {
  const std::size_t n = spec.n();
  const PhaseFunction theta(spec);
  const VerblunskySequence modified = build_modified_sequence(spec);

  const std::size_t grid = 8 * n;
  std::vector<double> phis(grid + 1);
  std::vector<double> th(grid + 1);
  for (std::size_t i = 0; i <= grid; ++i) {
    phis[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
    th[i] = theta(phis[i]);
  }
  for (std::size_t i = 0; i < grid; ++i) {
    if (!(th[i + 1] > th[i])) {
      throw Error(ErrorCode::InternalConsistency,
                  "phase is not increasing on the seed grid; a coefficient is outside the disk");
    }
  }
  const double total = th[grid] - th[0];
  if (std::abs(total - kTwoPi * static_cast<double>(n)) > 1e-6) {
    throw Error(ErrorCode::InternalConsistency, "phase winding differs from 2 pi n");
  }

  // Zeros solve theta = arg(-eta) + 2 pi k.
  const double t0 = std::arg(-spec.eta());
  const double first = std::ceil((th[0] - t0) / kTwoPi);
  std::vector<Angle> nodes;
  nodes.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double target = t0 + kTwoPi * (first + static_cast<double>(k));
    auto it = std::upper_bound(th.begin(), th.end(), target);
    std::size_t i = it == th.begin() ? 0 : static_cast<std::size_t>(it - th.begin()) - 1;
    if (i >= grid) i = grid - 1;
    double lo = phis[i];
    double hi = phis[i + 1];
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      if (theta(mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    double phi = 0.5 * (lo + hi);
    // One Newton polish, kept only if it stays in the bracket and helps.
    const auto [g, dg] = real_form(modified, spec.eta(), n, phi);
    if (dg != 0.0) {
      const double cand = phi - g / dg;
      if (cand >= phis[i] && cand <= phis[i + 1] &&
          std::abs(eval_nodes_poly(modified, spec.eta(), std::polar(1.0, cand)).t) <=
              std::abs(eval_nodes_poly(modified, spec.eta(), std::polar(1.0, phi)).t)) {
        phi = cand;
      }
    }
    nodes.push_back(wrap_angle(phi));
  }
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t s = 0; s + 1 < n; ++s) {
    if (!(nodes[s + 1] - nodes[s] > kNodeSeparation)) {
      throw Error(ErrorCode::NodeCount, "nodes coalesce: fewer than n distinct zeros found");
    }
  }
  if (n > 1 && !(nodes[0] + kTwoPi - nodes[n - 1] > kNodeSeparation)) {
    throw Error(ErrorCode::NodeCount, "nodes coalesce across phi = 0");
  }
  return nodes;
}

double nodes_residual(const ParaOrthogonalSpec& spec, Angle phi) {
  return std::abs(
      eval_nodes_poly(build_modified_sequence(spec), spec.eta(), std::polar(1.0, phi)).t);
}

namespace {

// cond: cancellation factor of the expression that produced mu.
double checked_weight(Complex mu, std::size_t s, double cond = 1.0) {
  if (!(mu.real() > 0.0) || std::abs(mu.imag()) > 1e-12 + 1e-10 * cond * std::abs(mu)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "weight %zu = (%.6g, %.3g) is not real and positive", s, mu.real(),
                  mu.imag());
    throw Error(ErrorCode::PositivityViolation, buf);
  }
  return mu.real();
}

}  // namespace

std::vector<double> weights_second_kind(const ParaOrthogonalSpec& spec,
                                        std::span<const Angle> nodes) {
  const VerblunskySequence modified = build_modified_sequence(spec);
  const Complex eta = spec.eta();
  std::vector<double> w;
  w.reserve(nodes.size());
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const Complex z = std::polar(1.0, nodes[s]);
    const EvalBundle b = szego_eval(modified, z, true);
    const Complex dt = b.phi + z * b.dphi + eta * b.dphi_star;
    const Complex num = z * b.psi - eta * b.psi_star;
    w.push_back(checked_weight(num / (2.0 * z * dt), s));
  }
  return w;
}

std::vector<double> weights_qm_formula(const ParaOrthogonalSpec& spec,
                                       std::span<const Angle> nodes) {
  const VerblunskySequence qseq = qm_sequence(spec.tail(), spec.eta());
  const Complex eta = spec.eta();
  const double k = szego_constant(spec.base());
  const int n = static_cast<int>(spec.n());
  // Forward-recursion rounding scales with prod(1 + |a_j|) relative to |phi_n|.
  double growth = 1.0;
  for (std::size_t j = 0; j < spec.base().size(); ++j) growth *= 1.0 + std::abs(spec.base()[j]);
  for (std::size_t j = 0; j < qseq.size(); ++j) growth *= 1.0 + std::abs(qseq[j]);
  std::vector<double> w;
  w.reserve(nodes.size());
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const Complex z = std::polar(1.0, nodes[s]);
    const EvalBundle p = szego_eval(spec.base(), z, true);
    const EvalBundle q = szego_eval(qseq, z, true);
    const Complex a = z * p.phi * q.phi;
    const Complex b = eta * p.phi_star * q.phi_star;
    const Complex t0 = p.phi * q.phi;
    const Complex t1 = z * p.dphi * q.phi;
    const Complex t2 = z * p.phi * q.dphi;
    const Complex t3 = eta * (p.dphi_star * q.phi_star + p.phi_star * q.dphi_star);
    const Complex dt = t0 + t1 + t2 + t3;
    const Complex num = -eta * k * std::pow(z, n - 1) * std::norm(q.phi);
    const double cond = growth / std::abs(t0) * (std::abs(a) + std::abs(b)) / std::abs(a - b) *
                        (std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3)) / std::abs(dt);
    w.push_back(checked_weight(num / ((a - b) * dt), s, cond));
  }
  return w;
}

OracleWeights weights_vandermonde_oracle(std::span<const Angle> nodes, const MomentSequence& c,
                                         std::size_t k_max) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "oracle needs at least one node");
  if (k_max + 1 > nodes.size()) {
    throw Error(ErrorCode::InvalidArgument, "oracle requires k_max <= n-1");
  }
  if (c.max_order() < k_max) {
    throw Error(ErrorCode::InsufficientMoments, "oracle needs moments through k_max");
  }
  const auto rows = static_cast<Eigen::Index>(1 + 2 * k_max);
  Eigen::MatrixXd a(rows, n);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index s = 0; s < n; ++s) a(0, s) = 1.0;
  rhs(0) = c[0].real();
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto r = static_cast<Eigen::Index>(2 * k - 1);
    for (Eigen::Index s = 0; s < n; ++s) {
      const double arg = static_cast<double>(k) * nodes[static_cast<std::size_t>(s)];
      a(r, s) = std::cos(arg);
      a(r + 1, s) = -std::sin(arg);
    }
    rhs(r) = c[k].real();
    rhs(r + 1) = c[k].imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd x = svd.solve(rhs);

  OracleWeights out;
  out.weights.assign(x.data(), x.data() + n);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  out.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  out.ill_conditioned = rows < n || out.condition > 1e10;
  double worst = 0.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    Complex acc{0.0};
    for (std::size_t s = 0; s < nodes.size(); ++s) {
      acc += out.weights[s] * std::polar(1.0, -static_cast<double>(k) * nodes[s]);
    }
    worst = std::max(worst, std::abs(acc - c[k]));
  }
  out.residual = worst;
  return out;
}

QuadratureRule generate_rule(const MeasureSpec& measure, std::size_t n, std::size_t m,
                             const VerblunskySequence& tail, Complex eta) {
  const ParaOrthogonalSpec spec = make_spec(measure, n, m, tail, eta);
  QuadratureRule rule;
  rule.nodes = find_nodes(spec);
  rule.weights = weights_second_kind(spec, rule.nodes);
  const double mass = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
  if (std::abs(mass - 1.0) > 1e-10) {
    throw Error(ErrorCode::InternalConsistency,
                "weights sum to " + std::to_string(mass) + " instead of 1");
  }
  rule.n = n;
  rule.m = m;
  rule.eta = eta;
  rule.measure_id = measure.id();
  rule.tail = tail;
  return rule;
}

Complex eta_for_node(const MeasureSpec& measure, std::size_t n, std::size_t m,
                     const VerblunskySequence& tail, Angle phi0) {
  const ParaOrthogonalSpec spec = make_spec(measure, n, m, tail, Complex{1.0});
  const Complex z = std::polar(1.0, phi0);
  const EvalBundle b = szego_eval(build_modified_sequence(spec), z);
  const Complex eta = -z * b.phi / b.phi_star;
  return eta / std::abs(eta);
}

QuadratureRule make_rule(std::vector<Angle> nodes, std::vector<double> weights, std::size_t m,
                         std::string measure_id) {
  if (nodes.empty() || nodes.size() != weights.size()) {
    throw Error(ErrorCode::ArityMismatch, "rule needs equally many nodes and weights (>= 1)");
  }
  const std::size_t n = nodes.size();
  if (m > n - 1) throw Error(ErrorCode::InvalidArgument, "m must satisfy m <= n-1");
  for (std::size_t s = 0; s < n; ++s) {
    if (!std::isfinite(nodes[s]) || !std::isfinite(weights[s]) || nodes[s] < 0.0 ||
        nodes[s] >= kTwoPi) {
      throw Error(ErrorCode::InvalidArgument, "nodes must be finite angles in [0, 2pi)");
    }
    if (s + 1 < n && !(nodes[s + 1] - nodes[s] > kNodeSeparation)) {
      throw Error(ErrorCode::InvalidArgument, "nodes must be strictly increasing");
    }
  }
  QuadratureRule rule;
  Complex eta{1.0};
  for (const Angle phi : nodes) eta *= -std::polar(1.0, phi);
  rule.eta = eta / std::abs(eta);
  rule.nodes = std::move(nodes);
  rule.weights = std::move(weights);
  rule.n = n;
  rule.m = m;
  rule.measure_id = std::move(measure_id);
  return rule;
}

}  // namespace szq
