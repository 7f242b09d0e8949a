#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3/algebra.hpp"

using namespace su3;

TEST_CASE("generator basis normalization and structure") {
  const auto& l = gellmann_basis();
  Mat3 l3 = Mat3::Zero();
  l3(0, 0) = 1;
  l3(1, 1) = -1;
  CHECK(max_abs_diff(l[2], l3) == 0.0);

  Mat3 l8 = Mat3::Zero();
  l8(0, 0) = 1 / kSqrt3;
  l8(1, 1) = 1 / kSqrt3;
  l8(2, 2) = -2 / kSqrt3;
  CHECK(max_abs_diff(l[7], l8) < 1e-16);

  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(l[i].trace()) < 1e-15);
    CHECK(max_abs_diff(l[i], l[i].adjoint()) == 0.0);
    for (int j = 0; j < 8; ++j) {
      cplx tr = (l[i] * l[j]).trace();
      CHECK(std::abs(tr - (i == j ? 2.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("commutators of the basis") {
  const auto& l = gellmann_basis();
  CHECK(max_abs_diff(commutator(l[0], l[1]), MatX(2.0 * kI * l[2])) < 1e-15);
  CHECK(max_abs_diff(commutator(l[2], l[2]), MatX(Mat3::Zero())) == 0.0);

  // Direct matrix arithmetic for [l4, l5].
  Mat3 expected = kI * (l[2] + kSqrt3 * l[7]);
  CHECK(max_abs_diff(commutator(l[3], l[4]), MatX(expected)) < 1e-15);

  MatX a = MatX::Identity(3, 3), b = MatX::Identity(2, 2);
  CHECK_THROWS_AS(commutator(a, b), std::invalid_argument);
}

TEST_CASE("structure constants from the trace formula") {
  const auto& l = gellmann_basis();
  StructureConstants f = structure_constants(l);

  // Independent evaluation of the same trace expression.
  auto oracle = [&](int i, int j, int k) {
    Mat3 comm = l[i - 1] * l[j - 1] - l[j - 1] * l[i - 1];
    return ((comm * l[k - 1]).trace() / (4.0 * kI)).real();
  };
  CHECK(f(1, 2, 3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(f(1, 2, 4)) < 1e-14);
  CHECK(f(4, 5, 8) == doctest::Approx(kSqrt3 / 2).epsilon(1e-14));
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(f(i, j, k) - oracle(i, j, k)) < 1e-14);
        // total antisymmetry
        CHECK(std::abs(f(i, j, k) + f(j, i, k)) < 1e-14);
        CHECK(std::abs(f(i, j, k) + f(i, k, j)) < 1e-14);
      }
    }
  }
}

TEST_CASE("commutator reconstruction from structure constants") {
  const auto& l = gellmann_basis();
  StructureConstants f = structure_constants(l);
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      Mat3 rhs = Mat3::Zero();
      for (int k = 1; k <= 8; ++k) rhs += f(i, j, k) * l[k - 1];
      CHECK(max_abs_diff(commutator(l[i - 1], l[j - 1]), MatX(2.0 * kI * rhs)) < 1e-12);
    }
  }
}

TEST_CASE("unitary_exp basics") {
  const auto& l = gellmann_basis();
  CHECK(max_abs_diff(unitary_exp(Mat3::Zero(), 1.0), Mat3::Identity()) < 1e-15);

  // Diagonal generator: the exponential is known entry by entry.
  Mat3 expect = Mat3::Zero();
  double a = kPi / 3;
  expect(0, 0) = std::exp(-kI * a);
  expect(1, 1) = std::exp(kI * a);
  expect(2, 2) = 1.0;
  CHECK(max_abs_diff(unitary_exp(l[2], -a), expect) < 1e-15);

  // Series-summation oracle for a rotation generator.
  double b = kPi / 4;
  Mat3 series = Mat3::Identity();
  Mat3 term = Mat3::Identity();
  for (int k = 1; k < 40; ++k) {
    term = term * (kI * b * l[1]) / static_cast<double>(k);
    series += term;
  }
  Mat3 got = unitary_exp(l[1], b);
  CHECK(max_abs_diff(got, series) < 1e-14);
  CHECK(got(2, 2) == cplx(1, 0));
  CHECK(std::abs(got(0, 0).imag()) < 1e-15);  // real rotation block
  CHECK(got(0, 1).real() == doctest::Approx(std::sin(b)));

  Mat3 nonherm = Mat3::Zero();
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(unitary_exp(nonherm, 0.5), std::domain_error);
}

TEST_CASE("unitary_exp properties over random draws") {
  const auto& l = gellmann_basis();
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Mat3 g = Mat3::Zero();
    for (int i = 0; i < 8; ++i) g += coeff(rng) * l[i];
    double s = angle(rng), t = angle(rng);
    Mat3 x = unitary_exp(g, s);
    CHECK(max_abs_diff(x.adjoint() * x, Mat3::Identity()) < 1e-12);
    CHECK(std::abs(x.determinant() - cplx(1, 0)) < 1e-12);
    CHECK(max_abs_diff(unitary_exp(g, s) * unitary_exp(g, t), unitary_exp(g, s + t)) <
          1e-11);
  }
}
