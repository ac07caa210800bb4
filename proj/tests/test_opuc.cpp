#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "szq/error.hpp"
#include "szq/opuc.hpp"
#include "szq/polynomial.hpp"

using namespace szq;
using oracle::Random;

namespace {

const Complex I{0.0, 1.0};

VerblunskySequence random_alphas(Random& rng, std::size_t n, double radius = 0.9) {
  return VerblunskySequence(rng.disk_vector(n, radius));
}

// int e^{i r phi} dsigma / 2pi from c_k = int e^{-ik phi}.
Complex mom(const std::vector<Complex>& c, long r) {
  return r >= 0 ? std::conj(c[static_cast<std::size_t>(r)]) : c[static_cast<std::size_t>(-r)];
}

// <p, z^j> = (1/2pi) int p(e^{i phi}) e^{-ij phi} dsigma.
Complex inner_with_monomial(const ComplexPolynomial& p, const std::vector<Complex>& c, long j) {
  Complex s = 0.0;
  for (std::size_t i = 0; i <= p.degree(); ++i) s += p[i] * mom(c, static_cast<long>(i) - j);
  return s;
}

void expect_near(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

}  // namespace

TEST(SzegoEval, EmptySequenceGivesOnes) {
  const EvalBundle b = szego_eval(VerblunskySequence(), Complex{0.3, -2.0});
  expect_near(b.phi, 1.0, 0.0);
  expect_near(b.phi_star, 1.0, 0.0);
  expect_near(b.psi, 1.0, 0.0);
  expect_near(b.psi_star, 1.0, 0.0);
}

TEST(SzegoEval, ZeroCoefficientsGivePowers) {
  const EvalBundle b = szego_eval(VerblunskySequence({0.0, 0.0, 0.0}), I);
  expect_near(b.phi, -I, 1e-15);
  expect_near(b.phi_star, 1.0, 1e-15);
  expect_near(b.psi, -I, 1e-15);
  expect_near(b.psi_star, 1.0, 1e-15);
}

TEST(SzegoEval, OneStepAtOne) {
  const EvalBundle b = szego_eval(VerblunskySequence({0.5}), 1.0);
  expect_near(b.phi, 0.5, 1e-15);
  expect_near(b.phi_star, 0.5, 1e-15);
  expect_near(b.psi, 1.5, 1e-15);
  expect_near(b.psi_star, 1.5, 1e-15);
}

TEST(SzegoEval, RejectsCoefficientOnCircle) {
  try {
    (void)VerblunskySequence({0.2, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCoefficients);
  }
}

TEST(SzegoEval, DerivativesMatchCoefficientForm) {
  Random rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const VerblunskySequence a = random_alphas(rng, 1 + rng.index(0, 15));
    const SzegoPolynomials p = szego_coeffs(a);
    const Complex z = rng.disk(1.3);
    const EvalBundle b = szego_eval(a, z, true);
    const auto [v, d] = p.phi.eval_with_derivative(z);
    const auto [vs, ds] = p.phi_star.eval_with_derivative(z);
    EXPECT_LT(std::abs(b.dphi - d), 1e-11 * (1.0 + std::abs(d)));
    EXPECT_LT(std::abs(b.dphi_star - ds), 1e-11 * (1.0 + std::abs(ds)));
    EXPECT_LT(std::abs(b.phi - v), 1e-12 * (1.0 + std::abs(v)));
    EXPECT_LT(std::abs(b.phi_star - vs), 1e-12 * (1.0 + std::abs(vs)));
  }
}

TEST(SzegoCoeffs, SmallCases) {
  const SzegoPolynomials p0 = szego_coeffs(VerblunskySequence());
  EXPECT_EQ(p0.phi.degree(), 0u);
  expect_near(p0.phi[0], 1.0, 0.0);

  const Complex a{0.3, -0.4};
  const SzegoPolynomials p1 = szego_coeffs(VerblunskySequence({a}));
  expect_near(p1.phi[0], -a, 1e-16);
  expect_near(p1.phi[1], 1.0, 1e-16);
  expect_near(p1.phi_star[0], 1.0, 1e-16);
  expect_near(p1.phi_star[1], -std::conj(a), 1e-16);

  const SzegoPolynomials pz = szego_coeffs(VerblunskySequence(std::vector<Complex>(5, 0.0)));
  EXPECT_LT(max_coeff_diff(pz.phi, ComplexPolynomial::monomial(5)), 1e-16);
  EXPECT_LT(max_coeff_diff(pz.psi, ComplexPolynomial::monomial(5)), 1e-16);
}

// Property: coefficient form agrees with the pointwise recurrence.
TEST(SzegoCoeffs, AgreesWithEvalUpToFifty) {
  Random rng(7);
  for (std::size_t n = 0; n <= 50; n += 5) {
    const VerblunskySequence a = random_alphas(rng, n);
    const SzegoPolynomials p = szego_coeffs(a);
    for (int k = 0; k < 20; ++k) {
      const Complex z = rng.disk(1.0);
      const EvalBundle b = szego_eval(a, z);
      const auto rel = [](Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
      const double tol = 1e-13 * static_cast<double>(n + 1);
      EXPECT_LT(rel(p.phi.eval(z), b.phi), tol) << n;
      EXPECT_LT(rel(p.phi_star.eval(z), b.phi_star), tol) << n;
      EXPECT_LT(rel(p.psi.eval(z), b.psi), tol) << n;
      EXPECT_LT(rel(p.psi_star.eval(z), b.psi_star), tol) << n;
    }
    // The reversed monic polynomial has constant term 1.
    expect_near(p.phi_star[0], 1.0, 0.0);
    EXPECT_LT(std::abs(p.phi.leading() - 1.0), 1e-13);
  }
}

TEST(Reversed, Examples) {
  EXPECT_LT(max_coeff_diff(reversed(ComplexPolynomial::constant(1.0), 2), ComplexPolynomial::monomial(2)), 0.0 + 1e-300);
  const Complex a{0.25, 0.5};
  const ComplexPolynomial p({-a, 1.0});
  const ComplexPolynomial r = reversed(p, 1);
  expect_near(r[0], 1.0, 0.0);
  expect_near(r[1], -std::conj(a), 0.0);
}

TEST(Reversed, Involution) {
  Random rng(3);
  const ComplexPolynomial p(rng.disk_vector(6, 2.0));
  EXPECT_EQ(max_coeff_diff(reversed(reversed(p, 5), 5), p), 0.0);
  EXPECT_EQ(max_coeff_diff(reversed(reversed(p, 8), 8), p.padded(8)), 0.0);
}

TEST(Reversed, DegreeTooLarge) {
  try {
    (void)reversed(ComplexPolynomial({1.0, 2.0, 3.0}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDegree);
  }
}

TEST(SzegoConstant, Arithmetic) {
  EXPECT_DOUBLE_EQ(szego_constant(VerblunskySequence()), 2.0);
  EXPECT_NEAR(szego_constant(VerblunskySequence({0.5})), 1.5, 1e-15);
  EXPECT_NEAR(szego_constant(VerblunskySequence({0.3, 0.4 * I})), 1.5288, 1e-15);
}

TEST(Wronskian, Examples) {
  EXPECT_EQ(wronskian_residual(VerblunskySequence(), I), 0.0);
  EXPECT_LT(wronskian_residual(VerblunskySequence({0.5}), 1.0), 1e-15);
}

// Oracle: the identity at coefficient level through explicit polynomial products.
TEST(Wronskian, CoefficientIdentity) {
  Random rng(5);
  const VerblunskySequence a = random_alphas(rng, 12);
  const SzegoPolynomials p = szego_coeffs(a);
  const auto prod1 = oracle::multiply(p.phi.coeffs(), p.psi_star.coeffs());
  const auto prod2 = oracle::multiply(p.psi.coeffs(), p.phi_star.coeffs());
  const double k = szego_constant(a);
  for (std::size_t i = 0; i < prod1.size(); ++i) {
    const Complex expected = i == 12 ? Complex{k} : Complex{0.0};
    EXPECT_LT(std::abs(prod1[i] + prod2[i] - expected), 1e-12) << i;
  }
  for (int rep = 0; rep < 100; ++rep) EXPECT_LT(wronskian_residual(a, rng.unit()), 1e-11);
}

TEST(Wronskian, UpToFiftyOnCircle) {
  Random rng(9);
  for (std::size_t n = 1; n <= 50; n += 7) {
    const VerblunskySequence a = random_alphas(rng, n);
    for (int rep = 0; rep < 20; ++rep) EXPECT_LT(wronskian_residual(a, rng.unit()), 1e-11) << n;
  }
}

TEST(InverseSzego, Examples) {
  const VerblunskySequence z3 = inverse_szego(ComplexPolynomial::monomial(3));
  ASSERT_EQ(z3.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(std::abs(z3[j]), 0.0);

  const VerblunskySequence half = inverse_szego(ComplexPolynomial({-0.5, 1.0}));
  ASSERT_EQ(half.size(), 1u);
  expect_near(half[0], 0.5, 1e-16);

  const std::vector<Complex> roots{0.5, 0.3 * I};
  const ComplexPolynomial p = from_roots(roots);
  const VerblunskySequence b = inverse_szego(p);
  EXPECT_LT(max_coeff_diff(szego_coeffs(b).phi, p), 1e-12);
}

TEST(InverseSzego, RoundTripAndRejection) {
  Random rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    // Backward recursion amplifies error by 1/(1-|a|^2) per step; keep that bounded.
    const VerblunskySequence a = random_alphas(rng, 1 + rng.index(0, 20), 0.5);
    const ComplexPolynomial phi = szego_coeffs(a).phi;
    const VerblunskySequence back = inverse_szego(phi);
    ASSERT_EQ(back.size(), a.size());
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_LT(std::abs(back[j] - a[j]), 1e-10);
  }
  const std::vector<Complex> outside{0.5, 1.2};
  try {
    (void)inverse_szego(from_roots(outside));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZerosNotInDisk);
  }
}

TEST(VerblunskyFromMoments, Lebesgue) {
  const VerblunskySequence a = verblunsky_from_moments(MomentSequence({1.0, 0.0, 0.0, 0.0}), 3);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_LT(std::abs(a[j]), 1e-16);
}

TEST(VerblunskyFromMoments, BernsteinSzegoAgainstGrid) {
  const auto c = oracle::grid_moments([](double phi) { return oracle::bernstein_szego_density(0.5, phi); }, 4);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_LT(std::abs(c[k] - std::pow(0.5, k)), 1e-10);
  const VerblunskySequence a = verblunsky_from_moments(MomentSequence(c), 4);
  expect_near(a[0], 0.5, 1e-10);
  for (std::size_t j = 1; j < 4; ++j) EXPECT_LT(std::abs(a[j]), 1e-10);
}

// Orthogonality under the Toeplitz functional, and the atom round trip.
TEST(VerblunskyFromMoments, DiscreteMeasureRoundTrip) {
  Random rng(4);
  std::vector<double> angles(6);
  std::vector<double> w(6);
  for (std::size_t s = 0; s < 6; ++s) {
    angles[s] = oracle::kTwoPi * (static_cast<double>(s) + rng.uniform(0.1, 0.9)) / 6.0;
    w[s] = rng.uniform(0.2, 1.0);
  }
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  const auto c = oracle::atom_moments(angles, w, 5);
  const VerblunskySequence a = verblunsky_from_moments(MomentSequence(c), 5);
  for (std::size_t k = 1; k <= 5; ++k) {
    const ComplexPolynomial phi = szego_coeffs(a.prefix(k)).phi;
    for (long j = 0; j < static_cast<long>(k); ++j) EXPECT_LT(std::abs(inner_with_monomial(phi, c, j)), 1e-10);
  }
  const MomentSequence back = moments_from_verblunsky(a, 5);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_LT(std::abs(back[k] - c[k]), 1e-11);
}

TEST(VerblunskyFromMoments, DegenerateMeasure) {
  // Two atoms cannot carry three independent moments.
  const auto c = oracle::atom_moments({0.5, 2.0}, {0.5, 0.5}, 4);
  try {
    (void)verblunsky_from_moments(MomentSequence(c), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
  }
}

TEST(MomentSequence, NormalizesAndRejectsZeroMass) {
  const MomentSequence c({2.0, Complex{1.0, 1.0}});
  expect_near(c[0], 1.0, 0.0);
  expect_near(c.at(-1), Complex(0.5, -0.5), 1e-16);
  EXPECT_THROW((void)MomentSequence({0.0, 0.1}), Error);
}

TEST(Polynomial, SeriesDivideAndRoots) {
  // (1 - z^4)/(1 + z^4) = 1 - 2 z^4 + ...
  const ComplexPolynomial num({1.0, 0.0, 0.0, 0.0, -1.0});
  const ComplexPolynomial den({1.0, 0.0, 0.0, 0.0, 1.0});
  const auto s = series_divide(num, den, 5);
  expect_near(s[0], 1.0, 1e-16);
  expect_near(s[4], -2.0, 1e-16);
  for (std::size_t k : {1u, 2u, 3u, 5u}) expect_near(s[k], 0.0, 1e-16);
  EXPECT_THROW((void)series_divide(num, ComplexPolynomial({0.0, 1.0}), 3), Error);

  Random rng(2);
  const auto roots = rng.disk_vector(5, 1.5);
  const ComplexPolynomial p = from_roots(roots);
  for (const Complex& r : roots) EXPECT_LT(std::abs(p.eval(r)), 1e-12);
  const auto eig = oracle::companion_roots(p.coeffs());
  for (const Complex& r : roots) {
    double best = 1e9;
    for (const Complex& e : eig) best = std::min(best, std::abs(e - r));
    EXPECT_LT(best, 1e-10);
  }
}
