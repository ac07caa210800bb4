#include "szq/measures.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "szq/error.hpp"

namespace szq {

namespace {

std::string format_complex(Complex c) {
  char buf[64];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.real(), c.imag());
  }
  return buf;
}

void require_in_disk(Complex c, const char* what) {
  if (!(std::abs(c) < 1.0 - kUnitMargin)) {
    throw Error(ErrorCode::InvalidMeasure,
                std::string(what) + " must lie strictly inside the unit disk");
  }
}

// Geronimus measures with |conj(a) + 1/2| > 1/2 carry a point mass.
bool geronimus_has_point_mass(Complex a) { return std::abs(std::conj(a) + 0.5) > 0.5; }

// Density prod(1-|a_j|^2) / |Phi*_N(e^{i phi})|^2 of a finite recurrence.
double bernstein_szego_density(const VerblunskySequence& alphas, Angle phi) {
  const EvalBundle b = szego_eval(alphas, std::polar(1.0, phi));
  return 0.5 * szego_constant(alphas) / std::norm(b.phi_star);
}

// Boundary value of Re F for constant Schur parameters. The Schur function is
// a fixed point of one Schur step: z a f^2 - (z - 1) f - conj(a) = 0.
double geronimus_density(Complex a, Angle phi) {
  if (a == Complex{0.0}) return 1.0;
  const Complex z = std::polar(1.0, phi);
  const Complex disc = std::sqrt((z - 1.0) * (z - 1.0) + 4.0 * std::norm(a) * z);
  const Complex f1 = ((z - 1.0) + disc) / (2.0 * z * a);
  const Complex f2 = ((z - 1.0) - disc) / (2.0 * z * a);
  const Complex f = std::abs(f1) < std::abs(f2) ? f1 : f2;
  const double r2 = std::norm(f);
  if (r2 >= 1.0 - 1e-12) return 0.0;
  return (1.0 - r2) / std::norm(1.0 - z * f);
}

VerblunskySequence bernstein_szego_alphas(const BernsteinSzego& bs) {
  return inverse_szego(from_roots(bs.roots));
}

VerblunskySequence padded(const VerblunskySequence& s, std::size_t count) {
  std::vector<Complex> c(count, Complex{0.0});
  for (std::size_t j = 0; j < count && j < s.size(); ++j) c[j] = s[j];
  return VerblunskySequence(std::move(c));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

MeasureSpec MeasureSpec::lebesgue() { return MeasureSpec(Lebesgue{}, "lebesgue"); }

MeasureSpec MeasureSpec::bernstein_szego(std::vector<Complex> roots) {
  if (roots.empty()) throw Error(ErrorCode::InvalidMeasure, "bernstein-szego needs a root");
  std::string id = "bernstein-szego:";
  for (std::size_t j = 0; j < roots.size(); ++j) {
    require_in_disk(roots[j], "bernstein-szego root");
    if (j) id += ';';
    id += format_complex(roots[j]);
  }
  return MeasureSpec(BernsteinSzego{std::move(roots)}, std::move(id));
}

MeasureSpec MeasureSpec::geronimus(Complex a) {
  require_in_disk(a, "geronimus parameter");
  return MeasureSpec(Geronimus{a}, "geronimus:" + format_complex(a));
}

MeasureSpec MeasureSpec::explicit_verblunsky(VerblunskySequence alphas) {
  std::string id = "verblunsky:";
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (j) id += ';';
    id += format_complex(alphas[j]);
  }
  return MeasureSpec(ExplicitVerblunsky{std::move(alphas)}, std::move(id));
}

MeasureSpec MeasureSpec::explicit_moments(std::vector<Complex> raw) {
  const std::size_t count = raw.size();
  return MeasureSpec(ExplicitMoments{MomentSequence(std::move(raw))},
                     "moments[" + std::to_string(count) + "]");
}

MeasureSpec MeasureSpec::density_samples(std::vector<double> samples) {
  if (samples.empty()) throw Error(ErrorCode::InvalidMeasure, "empty density grid");
  for (const double f : samples) {
    if (!(f >= 0.0) || !std::isfinite(f)) {
      throw Error(ErrorCode::InvalidMeasure, "density samples must be finite and nonnegative");
    }
  }
  const double mean =
      std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  if (!(mean > 0.0)) throw Error(ErrorCode::InvalidMeasure, "density has zero mass");
  for (auto& f : samples) f /= mean;
  const std::size_t count = samples.size();
  return MeasureSpec(DensitySamples{std::move(samples)},
                     "density[" + std::to_string(count) + "]");
}

MomentSequence moments(const MeasureSpec& spec, std::size_t n) {
  return std::visit(
      Overloaded{
          [n](const Lebesgue&) {
            std::vector<Complex> c(n + 1, 0.0);
            c[0] = 1.0;
            return MomentSequence(std::move(c));
          },
          [n](const BernsteinSzego& bs) {
            if (bs.roots.size() == 1) {
              // Geometric series of the Poisson-type kernel: c_k = conj(b)^k.
              std::vector<Complex> c(n + 1);
              const Complex q = std::conj(bs.roots[0]);
              Complex p{1.0};
              for (std::size_t k = 0; k <= n; ++k, p *= q) c[k] = p;
              return MomentSequence(std::move(c));
            }
            return moments_from_verblunsky(bernstein_szego_alphas(bs), n);
          },
          [n](const Geronimus& g) {
            return moments_from_verblunsky(VerblunskySequence(std::vector<Complex>(n, g.a)), n);
          },
          [n](const ExplicitVerblunsky& ev) { return moments_from_verblunsky(ev.alphas, n); },
          [n](const ExplicitMoments& em) {
            if (em.moments.max_order() < n) {
              throw Error(ErrorCode::InsufficientMoments,
                          "requested moments through c_" + std::to_string(n) + " but only " +
                              std::to_string(em.moments.max_order() + 1) + " supplied");
            }
            auto v = em.moments.values();
            return MomentSequence(std::vector<Complex>(v.begin(), v.begin() + n + 1));
          },
          [n](const DensitySamples& ds) {
            const std::size_t grid = ds.samples.size();
            if (grid < 4 * n) {
              throw Error(ErrorCode::InsufficientResolution,
                          "density grid of " + std::to_string(grid) +
                              " points cannot resolve moments through c_" + std::to_string(n) +
                              " (need at least " + std::to_string(4 * n) + ")");
            }
            std::vector<Complex> c(n + 1, Complex{0.0});
            for (std::size_t k = 0; k <= n; ++k) {
              Complex acc{0.0};
              for (std::size_t j = 0; j < grid; ++j) {
                // Reduce k*j mod grid to keep the phase argument small.
                const auto r = static_cast<double>((k * j) % grid);
                acc += ds.samples[j] * std::polar(1.0, -kTwoPi * r / static_cast<double>(grid));
              }
              c[k] = acc / static_cast<double>(grid);
            }
            return MomentSequence(std::move(c));
          },
      },
      spec.variant());
}

VerblunskySequence verblunsky(const MeasureSpec& spec, std::size_t count) {
  return std::visit(
      Overloaded{
          [count](const Lebesgue&) {
            return VerblunskySequence(std::vector<Complex>(count, 0.0));
          },
          [count](const BernsteinSzego& bs) { return padded(bernstein_szego_alphas(bs), count); },
          [count](const Geronimus& g) {
            return VerblunskySequence(std::vector<Complex>(count, g.a));
          },
          [count](const ExplicitVerblunsky& ev) { return padded(ev.alphas, count); },
          [&spec, count](const ExplicitMoments&) {
            return verblunsky_from_moments(moments(spec, count), count);
          },
          [&spec, count](const DensitySamples&) {
            return verblunsky_from_moments(moments(spec, count), count);
          },
      },
      spec.variant());
}

bool has_density(const MeasureSpec& spec) {
  return std::visit(Overloaded{
                        [](const Geronimus& g) { return !geronimus_has_point_mass(g.a); },
                        [](const ExplicitMoments&) { return false; },
                        [](const auto&) { return true; },
                    },
                    spec.variant());
}

double density_eval(const MeasureSpec& spec, Angle phi) {
  return std::visit(
      Overloaded{
          [](const Lebesgue&) { return 1.0; },
          [phi](const BernsteinSzego& bs) {
            return bernstein_szego_density(bernstein_szego_alphas(bs), phi);
          },
          [phi](const Geronimus& g) {
            if (geronimus_has_point_mass(g.a)) {
              throw Error(ErrorCode::UnsupportedVariant,
                          "geronimus measure with this parameter has a singular part");
            }
            return geronimus_density(g.a, phi);
          },
          [phi](const ExplicitVerblunsky& ev) { return bernstein_szego_density(ev.alphas, phi); },
          [](const ExplicitMoments&) -> double {
            throw Error(ErrorCode::UnsupportedVariant, "explicit moments carry no density");
          },
          [phi](const DensitySamples& ds) {
            const auto grid = static_cast<double>(ds.samples.size());
            double t = std::fmod(phi, kTwoPi);
            if (t < 0.0) t += kTwoPi;
            const double pos = t / kTwoPi * grid;
            const auto j = static_cast<std::size_t>(std::floor(pos)) % ds.samples.size();
            const double frac = pos - std::floor(pos);
            const double f0 = ds.samples[j];
            const double f1 = ds.samples[(j + 1) % ds.samples.size()];
            return (1.0 - frac) * f0 + frac * f1;
          },
      },
      spec.variant());
}

ComplexPolynomial caratheodory_series(const MeasureSpec& spec, std::size_t order) {
  const MomentSequence c = moments(spec, order);
  std::vector<Complex> f(order + 1);
  f[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) f[k] = 2.0 * c[k];
  return ComplexPolynomial(std::move(f));
}

}  // namespace szq
