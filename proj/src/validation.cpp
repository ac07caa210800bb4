#include "szq/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "szq/error.hpp"

namespace szq {

namespace {

std::vector<Complex> unit_points(std::span<const Angle> nodes) {
  std::vector<Complex> z(nodes.size());
  for (std::size_t s = 0; s < nodes.size(); ++s) z[s] = std::polar(1.0, nodes[s]);
  return z;
}

// p / (z - root), dropping the remainder.
ComplexPolynomial deflate(const ComplexPolynomial& p, Complex root, Complex* remainder = nullptr) {
  const std::size_t d = p.degree();
  if (d == 0) {
    if (remainder != nullptr) *remainder = p[0];
    return ComplexPolynomial::constant(0.0);
  }
  std::vector<Complex> q(d);
  Complex acc = p[d];
  for (std::size_t k = d; k-- > 0;) {
    q[k] = acc;
    acc = p[k] + acc * root;
  }
  if (remainder != nullptr) *remainder = acc;
  return ComplexPolynomial(std::move(q));
}

double circular_distance(Angle a, Angle b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

Angle wrap(Angle phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi -= kTwoPi;
  return phi;
}

// Zeros of a continuous real function on [lo, hi) by sign scan and bisection.
template <class F>
std::vector<double> scan_zeros(const F& f, double lo, double hi, std::size_t grid) {
  std::vector<double> zeros;
  double a = lo;
  double fa = f(a);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double b = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
    const double fb = f(b);
    if (fa == 0.0) {
      zeros.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      double x0 = a;
      double x1 = b;
      double f0 = fa;
      for (int it = 0; it < 200 && x1 - x0 > 1e-15; ++it) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = f(mid);
        if (fm == 0.0) {
          x0 = x1 = mid;
          break;
        }
        if ((fm < 0.0) == (f0 < 0.0)) {
          x0 = mid;
          f0 = fm;
        } else {
          x1 = mid;
        }
      }
      zeros.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

// Moment of e^{i r phi}: (1/2pi) int e^{i r phi} dsigma.
Complex mom(const MomentSequence& c, long r) {
  return r >= 0 ? std::conj(c[static_cast<std::size_t>(r)]) : c[static_cast<std::size_t>(-r)];
}

}  // namespace

// ---- exactness --------------------------------------------------------------

double default_exactness_tolerance(std::size_t n, const MomentSequence& c) {
  double cmax = 0.0;
  for (const Complex v : c.values()) cmax = std::max(cmax, std::abs(v));
  return 1e-10 * static_cast<double>(std::max<std::size_t>(n, 1)) * cmax;
}

ExactnessReport check_exactness(const QuadratureRule& rule, const MomentSequence& c,
                                std::size_t k_probe, double tol) {
  if (c.max_order() < k_probe) {
    throw Error(ErrorCode::InsufficientMoments,
                "exactness probe needs moments through order " + std::to_string(k_probe));
  }
  ExactnessReport rep;
  rep.tolerance = tol > 0.0 ? tol : default_exactness_tolerance(rule.n, c);
  rep.errors.resize(k_probe + 1);
  bool ok = true;
  for (std::size_t k = 0; k <= k_probe; ++k) {
    Complex acc{0.0};
    for (std::size_t s = 0; s < rule.nodes.size(); ++s) {
      acc += rule.weights[s] * std::polar(1.0, -static_cast<double>(k) * rule.nodes[s]);
    }
    rep.errors[k] = std::abs(acc - c[k]);
    if (ok && rep.errors[k] <= rep.tolerance) {
      rep.precise_degree = static_cast<long>(k);
    } else {
      ok = false;
    }
  }
  return rep;
}

// ---- Carathéodory -----------------------------------------------------------

namespace {

CaratheodoryReport compare_series(const ComplexPolynomial& num, const ComplexPolynomial& den,
                                  const ComplexPolynomial& p, std::size_t order,
                                  const MomentSequence& c) {
  if (c.max_order() < order) {
    throw Error(ErrorCode::InsufficientMoments,
                "series comparison needs moments through order " + std::to_string(order));
  }
  CaratheodoryReport rep;
  rep.order = order;
  const std::vector<Complex> series = series_divide(num, den, order);
  for (std::size_t k = 0; k <= order; ++k) {
    const Complex expected = k == 0 ? c[0] : 2.0 * c[k];
    rep.max_error = std::max(rep.max_error, std::abs(series[k] - expected));
  }
  try {
    const Complex lead = p.leading();
    if (std::abs(lead) == 0.0) throw Error(ErrorCode::DegenerateSpec, "p has zero leading term");
    (void)inverse_szego((1.0 / lead) * p);
    rep.zeros_in_disk = true;
  } catch (const Error& e) {
    rep.zeros_in_disk = false;
    rep.disk_message = e.what();
  }
  return rep;
}

}  // namespace

CaratheodoryReport caratheodory_match(const QuadratureRule& rule, const MomentSequence& c) {
  const std::size_t n = rule.nodes.size();
  const std::vector<Complex> zs = unit_points(rule.nodes);
  const ComplexPolynomial t = from_roots(zs);
  // N(z) = -sum mu_s (z + z_s) prod_{r != s} (z - z_r)
  ComplexPolynomial num = ComplexPolynomial::constant(0.0);
  for (std::size_t s = 0; s < n; ++s) {
    const ComplexPolynomial others = deflate(t, zs[s]);
    num = num + (-rule.weights[s]) * (ComplexPolynomial({zs[s], 1.0}) * others);
  }
  // z p = (T - N)/2
  std::vector<Complex> pc(n);
  for (std::size_t j = 0; j < n; ++j) pc[j] = 0.5 * (t[j + 1] - num[j + 1]);
  return compare_series(num, t, ComplexPolynomial(std::move(pc)), n - rule.m - 1, c);
}

CaratheodoryReport caratheodory_match(const ParaOrthogonalSpec& spec, const MomentSequence& c) {
  const std::size_t n = spec.n();
  // The rule's Carathéodory numerator is eta Psi~* - z Psi~, so
  // z p = (T - N)/2 = z (Phi~ + Psi~)/2 + eta (Phi~* - Psi~*)/2.
  const SzegoPolynomials s = szego_coeffs(build_modified_sequence(spec));
  const Complex eta = spec.eta();
  const ComplexPolynomial zp =
      0.5 * ((s.phi + s.psi).shifted(1) + eta * (s.phi_star - s.psi_star).padded(n));
  std::vector<Complex> pc(n);
  for (std::size_t j = 0; j < n; ++j) pc[j] = zp[j + 1];
  const ComplexPolynomial p(std::move(pc));
  const ComplexPolynomial ps = eta * reversed(p, n - 1).padded(n);
  const ComplexPolynomial zpn = p.shifted(1);
  return compare_series(ps - zpn, ps + zpn, p, n - spec.m() - 1, c);
}

// ---- S-function -------------------------------------------------------------

std::vector<Angle> default_s_samples(std::size_t n) {
  const std::size_t count = 8 * std::max<std::size_t>(n, 1);
  std::vector<Angle> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
  }
  return out;
}

namespace {

// S(psi) = scale * e^{-i n psi/2} poly(e^{i psi}); real up to rounding.
struct SPoly {
  Complex scale;
  ComplexPolynomial poly;
  std::size_t n;
  [[nodiscard]] double operator()(Angle psi) const {
    const Complex v = std::polar(1.0, psi);
    return (scale * std::polar(1.0, -0.5 * static_cast<double>(n) * psi) * poly.eval(v)).real();
  }
};

// Coefficients (exponents -h..h) of sum_k u_k K_k(psi), K_k the cotangent
// kernel applied to e^{ik phi}.
std::vector<Complex> kernel_transform(std::span<const Complex> u, long h, const MomentSequence& c) {
  std::vector<Complex> s(static_cast<std::size_t>(2 * h + 1), Complex{0.0});
  auto at = [&](long e) -> Complex& { return s[static_cast<std::size_t>(e + h)]; };
  const Complex i{0.0, 1.0};
  for (long k = -h; k <= h; ++k) {
    const Complex uk = u[static_cast<std::size_t>(k + h)];
    if (k == 0 || uk == Complex{0.0}) continue;
    if (k > 0) {
      for (long j = 0; j < k; ++j) {
        at(k - 1 - j) += -i * uk * std::conj(c[static_cast<std::size_t>(j + 1)]);
        at(k - j) += -i * uk * std::conj(c[static_cast<std::size_t>(j)]);
      }
    } else {
      const long p = -k;
      for (long j = 0; j < p; ++j) {
        at(-1 - j) += i * uk * c[static_cast<std::size_t>(p - j - 1)];
        at(-j) += i * uk * c[static_cast<std::size_t>(p - j)];
      }
    }
  }
  return s;
}

}  // namespace

SFunctionTrace s_function(const QuadratureRule& rule, const MomentSequence& c,
                          std::span<const Angle> samples) {
  const std::size_t n = rule.nodes.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "S-function needs n >= 2");
  if (rule.m + 1 > n / 2) {
    throw Error(ErrorCode::InvalidArgument,
                "S-function identity needs m <= floor(n/2) - 1 (exactness at least ceil(n/2))");
  }
  const bool odd = n % 2 == 1;
  const long h = static_cast<long>((n + 1) / 2);
  if (c.max_order() < static_cast<std::size_t>(h)) {
    throw Error(ErrorCode::InsufficientMoments,
                "S-function needs moments through order " + std::to_string(h));
  }
  const std::vector<Angle>& nodes = rule.nodes;
  const std::vector<Complex> zs = unit_points(nodes);
  const ComplexPolynomial p = from_roots(zs);

  // T(phi) = prod 2 sin((phi - phi_s)/2) = C e^{-in phi/2} P(e^{i phi}).
  const double phase_sum = std::accumulate(nodes.begin(), nodes.end(), 0.0);
  const Complex c_t = std::polar(1.0, -0.5 * phase_sum) * std::pow(Complex{0.0, -1.0}, static_cast<int>(n));

  SFunctionTrace tr;
  Angle phi_c = 0.0;
  ComplexPolynomial u_poly = p;
  Complex u_scale = c_t;
  if (odd) {
    // Multiply by q(phi) = 2 sin((phi - phi_c)/2) = -i e^{-i phi_c/2} e^{-i phi/2} (z - z_c),
    // with phi_c the midpoint of the widest node gap.
    double best = -1.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double next = s + 1 < n ? nodes[s + 1] : nodes[0] + kTwoPi;
      if (next - nodes[s] > best) {
        best = next - nodes[s];
        phi_c = wrap(0.5 * (nodes[s] + next));
      }
    }
    u_poly = p * ComplexPolynomial({-std::polar(1.0, phi_c), 1.0});
    u_scale = c_t * Complex{0.0, -1.0} * std::polar(1.0, -0.5 * phi_c);
  }
  std::vector<Complex> u(static_cast<std::size_t>(2 * h + 1));
  for (long k = -h; k <= h; ++k) {
    u[static_cast<std::size_t>(k + h)] = u_scale * u_poly[static_cast<std::size_t>(k + h)];
  }
  const std::vector<Complex> s_coeffs = kernel_transform(u, h, c);
  SPoly sfun{Complex{1.0}, ComplexPolynomial(s_coeffs), n};
  if (odd) {
    // S~(psi) = e^{-ih psi} Q(v); S = S~/q = i e^{i phi_c/2} e^{-in psi/2} Q(v)/(v - z_c).
    Complex rem{0.0};
    const ComplexPolynomial quot = deflate(sfun.poly, std::polar(1.0, phi_c), &rem);
    double qmax = 0.0;
    for (const Complex v : s_coeffs) qmax = std::max(qmax, std::abs(v));
    tr.division_remainder = qmax > 0.0 ? std::abs(rem) / qmax : std::abs(rem);
    sfun = SPoly{Complex{0.0, 1.0} * std::polar(1.0, 0.5 * phi_c), quot, n};
  }

  auto t_at = [&](Angle psi) {
    double acc = 1.0;
    for (const Angle phi : nodes) acc *= 2.0 * std::sin(0.5 * (psi - phi));
    return acc;
  };
  auto r_at = [&](Angle psi) {
    double acc = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      double term = 2.0 * std::cos(0.5 * (psi - nodes[s]));
      for (std::size_t r = 0; r < n; ++r) {
        if (r != s) term *= 2.0 * std::sin(0.5 * (psi - nodes[r]));
      }
      acc -= rule.weights[s] * term;
    }
    return acc;
  };

  const Complex i{0.0, 1.0};
  for (const Angle psi : samples) {
    tr.samples.push_back(psi);
    bool near = false;
    for (const Angle phi : nodes) near = near || circular_distance(psi, phi) < 1e-8;
    tr.skipped.push_back(near);
    const double sv = sfun(psi);
    const double rv = r_at(psi);
    const double tv = t_at(psi);
    const Complex half = std::polar(1.0, 0.5 * static_cast<double>(n) * psi);
    tr.s_values.push_back(sv);
    tr.r_values.push_back(rv);
    tr.t_values.push_back(tv);
    tr.tau_values.push_back(half * tv);
    tr.omega_values.push_back(i * half * sv);
    if (!near) tr.max_s_minus_r = std::max(tr.max_s_minus_r, std::abs(sv - rv));
  }

  // T'(phi_s) = prod_{r != s} 2 sin((phi_s - phi_r)/2)
  for (std::size_t s = 0; s < n; ++s) {
    double dt = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != s) dt *= 2.0 * std::sin(0.5 * (nodes[s] - nodes[r]));
    }
    tr.max_weight_recovery =
        std::max(tr.max_weight_recovery, std::abs(rule.weights[s] + sfun(nodes[s]) / (2.0 * dt)));
  }

  // One zero of S per arc between consecutive nodes (arcs taken on the real
  // line, so the antiperiodic odd case needs no special handling).
  constexpr std::size_t kArcGrid = 32;
  for (std::size_t s = 0; s < n; ++s) {
    const double lo = nodes[s];
    const double hi = s + 1 < n ? nodes[s + 1] : nodes[0] + kTwoPi;
    std::vector<double> z = scan_zeros(sfun, lo, hi, kArcGrid);
    // a zero exactly at the left node would coincide with a node
    z.erase(std::remove_if(z.begin(), z.end(), [&](double x) { return x - lo < 1e-12; }),
            z.end());
    if (z.size() != 1) ++tr.separation_violations;
    for (const double x : z) tr.s_zeros.push_back(wrap(x));
  }
  std::sort(tr.s_zeros.begin(), tr.s_zeros.end());

  // Case split at 0+: elements within 1e-12 of 0 count as 2 pi.
  auto lifted = [](Angle a) { return a < 1e-12 ? a + kTwoPi : a; };
  double first_node = kTwoPi * 2;
  for (const Angle phi : nodes) first_node = std::min(first_node, lifted(phi));
  double first_zero = kTwoPi * 2;
  for (const Angle th : tr.s_zeros) first_zero = std::min(first_zero, lifted(th));
  const double eps = 0.5 * std::min(first_node, first_zero);
  tr.node_first = sfun(eps) * t_at(eps) > 0.0;
  if (!tr.s_zeros.empty() && tr.node_first != (first_node < first_zero)) {
    ++tr.separation_violations;
  }
  return tr;
}

// ---- orthogonality ----------------------------------------------------------

namespace {

// Moments of eta^{-1/2} e^{-in phi/2} P(e^{i phi}) against e^{i nu phi},
// nu = +-(k + gamma), k = 0..k_max.
OrthogonalityReport orthogonality_of(const ComplexPolynomial& p, std::size_t n, long k_max,
                                     const MomentSequence& c) {
  OrthogonalityReport rep;
  if (k_max < 0) return rep;
  const long gamma2 = static_cast<long>(n % 2);
  const long need = static_cast<long>(n) / 2 + k_max + (gamma2 == 1 ? 1 : 0);
  if (static_cast<long>(c.max_order()) < need) {
    throw Error(ErrorCode::InsufficientMoments,
                "orthogonality check needs moments through order " + std::to_string(need));
  }
  const Complex rot = std::polar(1.0, -0.5 * std::arg(p[0]));
  for (long k = 0; k <= k_max; ++k) {
    for (const long sign : {1L, -1L}) {
      const long nu2 = sign * (2 * k + gamma2);
      if (nu2 == 0 && sign < 0) continue;
      Complex acc{0.0};
      for (std::size_t j = 0; j <= n; ++j) {
        const long r2 = nu2 + 2 * static_cast<long>(j) - static_cast<long>(n);
        acc += p[j] * mom(c, r2 / 2);
      }
      rep.max_violation = std::max(rep.max_violation, std::abs(rot * acc));
      ++rep.conditions;
    }
  }
  return rep;
}

}  // namespace

OrthogonalityReport check_orthogonality(const QuadratureRule& rule, const MomentSequence& c) {
  const std::size_t n = rule.nodes.size();
  const long k_max = static_cast<long>(n / 2) - 1 - static_cast<long>(rule.m);
  return orthogonality_of(from_roots(unit_points(rule.nodes)), n, k_max, c);
}

OrthogonalityReport check_orthogonality(const ParaOrthogonalSpec& spec, const MomentSequence& c) {
  const long k_max = static_cast<long>(spec.n() / 2) - 1 - static_cast<long>(spec.m());
  return orthogonality_of(nodes_polynomial(spec), spec.n(), k_max, c);
}

OrthogonalityReport check_weighted_orthogonality(const ParaOrthogonalSpec& spec) {
  const std::size_t n = spec.n();
  const long k_max = static_cast<long>(n / 2) - 1;
  if (k_max < 0) return OrthogonalityReport{};
  // d phi / |P*|^2 with P = q_m Phi_{n-1-m} is, once normalized, the measure
  // whose Verblunsky coefficients are the Schur parameters of P followed by
  // zeros; its moments are therefore exact.
  const ComplexPolynomial p =
      build_qm(spec.tail(), spec.eta()) * szego_coeffs(spec.base()).phi;
  const MomentSequence c = moments_from_verblunsky(inverse_szego(p), n);
  return orthogonality_of(nodes_polynomial(spec), n, k_max, c);
}

// ---- interlacing ------------------------------------------------------------

InterlacingReport check_interlacing(const QuadratureRule& rule, const MeasureSpec& measure,
                                    std::size_t l, Complex kappa) {
  const std::size_t n = rule.nodes.size();
  if (l < rule.m || l + 1 > n) {
    throw Error(ErrorCode::InvalidArgument, "interlacing needs m <= l <= n-1");
  }
  if (std::abs(std::abs(kappa) - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "kappa must lie on the unit circle");
  }
  InterlacingReport rep;
  const ParaOrthogonalSpec ref = make_spec(measure, n - l, 0, VerblunskySequence(), kappa / std::abs(kappa));
  rep.reference_zeros = find_nodes(ref);
  const std::size_t k = rep.reference_zeros.size();
  rep.nodes_per_arc.assign(k, 0);
  for (const Angle phi : rule.nodes) {
    for (std::size_t a = 0; a < k; ++a) {
      const double lo = rep.reference_zeros[a];
      const double hi = a + 1 < k ? rep.reference_zeros[a + 1] : rep.reference_zeros[0] + kTwoPi;
      double x = phi;
      if (x < lo) x += kTwoPi;
      if (x - lo > kNodeSeparation && hi - x > kNodeSeparation) {
        ++rep.nodes_per_arc[a];
        break;
      }
    }
  }
  for (const std::size_t count : rep.nodes_per_arc) {
    if (count == 0) ++rep.violations;
  }
  return rep;
}

std::size_t sign_interlacing_violations(const ParaOrthogonalSpec& spec) {
  const std::size_t n = spec.n();
  const VerblunskySequence modified = build_modified_sequence(spec);
  const Complex rot = std::polar(1.0, -0.5 * std::arg(spec.eta()));
  auto g = [&](double phi) {
    const Complex z = std::polar(1.0, phi);
    return rot * std::polar(1.0, -0.5 * static_cast<double>(n) * phi) * z *
           szego_eval(modified, z).phi;
  };
  const std::size_t grid = 64 * n;
  std::vector<double> re = scan_zeros([&](double x) { return g(x).real(); }, 0.0, kTwoPi, grid);
  std::vector<double> im = scan_zeros([&](double x) { return g(x).imag(); }, 0.0, kTwoPi, grid);
  std::size_t violations = 0;
  violations += re.size() > n ? re.size() - n : n - re.size();
  violations += im.size() > n ? im.size() - n : n - im.size();
  std::vector<std::pair<double, int>> all;
  for (const double x : re) all.emplace_back(wrap(x), 0);
  for (const double x : im) all.emplace_back(wrap(x), 1);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& next = all[(i + 1) % all.size()];
    if (all.size() > 1 && all[i].second == next.second) ++violations;
  }
  return violations;
}

// ---- asymptotics ------------------------------------------------------------

TailPolicy constant_tail(Complex value) {
  return [value](std::size_t, std::size_t m) {
    return VerblunskySequence(std::vector<Complex>(m, value));
  };
}

std::vector<AsymptoticRow> asymptotic_report(const MeasureSpec& measure,
                                             std::span<const std::size_t> n_list,
                                             const std::function<std::size_t(std::size_t)>& m_of_n,
                                             const TailPolicy& tail, Complex eta,
                                             AsymptoticWindow window) {
  if (!has_density(measure)) {
    throw Error(ErrorCode::UnsupportedVariant,
                "asymptotic report needs a measure with a density");
  }
  std::vector<AsymptoticRow> rows;
  rows.reserve(n_list.size());
  for (const std::size_t n : n_list) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    AsymptoticRow row;
    row.n = n;
    row.m = std::min(m_of_n(n), n - 1);
    const VerblunskySequence t = tail(n, row.m);
    const QuadratureRule rule = generate_rule(measure, n, row.m, t, eta);
    const ComplexPolynomial q_star = reversed(build_qm(t, eta), row.m);
    row.nodes = rule.nodes;
    for (std::size_t s = 0; s < n; ++s) {
      const Angle phi = rule.nodes[s];
      const Complex z = std::polar(1.0, phi);
      const auto [qv, dq] = q_star.eval_with_derivative(z);
      const double g = 1.0 - (2.0 / static_cast<double>(n)) * (z * dq / qv).real();
      const double f = density_eval(measure, phi);
      const double inv = 1.0 / (static_cast<double>(n) * rule.weights[s]);
      row.inv_n_mu.push_back(inv);
      row.density.push_back(f);
      row.g.push_back(g);
      if (phi >= window.lo + window.margin && phi <= window.hi - window.margin) {
        row.max_asym_dev = std::max(row.max_asym_dev, std::abs(inv - g / f));
      }
    }
    const MomentSequence c = moments(measure, n);
    row.precise_degree = check_exactness(rule, c, n).precise_degree;
    rows.push_back(std::move(row));
  }
  return rows;
}

Trend deviation_trend(std::span<const AsymptoticRow> rows) {
  bool zero = true;
  bool strict = true;
  bool weak = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    zero = zero && rows[i].max_asym_dev <= 1e-12;
    if (i > 0) {
      strict = strict && rows[i].max_asym_dev < rows[i - 1].max_asym_dev;
      weak = weak && rows[i].max_asym_dev <= rows[i - 1].max_asym_dev + 1e-12;
    }
  }
  if (zero) return Trend::Zero;
  if (strict) return Trend::Decreasing;
  if (weak) return Trend::Nonincreasing;
  return Trend::NotMonotone;
}

const char* to_string(Trend t) noexcept {
  switch (t) {
    case Trend::Decreasing: return "decreasing";
    case Trend::Nonincreasing: return "nonincreasing";
    case Trend::Zero: return "zero";
    case Trend::NotMonotone: return "not-monotone";
  }
  return "unknown";
}

// ---- Szegő function ---------------------------------------------------------

SzegoFunction::SzegoFunction(const MeasureSpec& measure, std::size_t grid) {
  if (!has_density(measure)) {
    throw Error(ErrorCode::UnsupportedVariant, "Szego function needs a density");
  }
  if (grid < 4 || grid % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "Szego function grid must be even and >= 4");
  }
  std::vector<double> logf(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const double f = density_eval(measure, kTwoPi * static_cast<double>(j) / static_cast<double>(grid));
    if (!(f > 0.0)) {
      throw Error(ErrorCode::LogSingularity, "density vanishes on the grid; log f is singular");
    }
    logf[j] = std::log(f);
  }
  const std::size_t half = grid / 2;
  log_coeffs_.assign(half + 1, Complex{0.0});
  for (std::size_t k = 0; k <= half; ++k) {
    Complex acc{0.0};
    for (std::size_t j = 0; j < grid; ++j) {
      const std::size_t idx = (k * j) % grid;
      acc += logf[j] * std::polar(1.0, -kTwoPi * static_cast<double>(idx) / static_cast<double>(grid));
    }
    log_coeffs_[k] = acc / static_cast<double>(grid);
  }
  log_coeffs_[half] *= 0.5;  // Nyquist term is shared with -half
}

Complex SzegoFunction::operator()(Complex z) const {
  Complex acc = 0.5 * log_coeffs_[0];
  Complex zk{1.0};
  for (std::size_t k = 1; k < log_coeffs_.size(); ++k) {
    zk *= z;
    acc += log_coeffs_[k] * zk;
  }
  return std::exp(acc);
}

}  // namespace szq
