#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3/adjoint.hpp"
#include "su3/fundamental.hpp"

using namespace su3;

TEST_CASE("closed form reduces to the identity at zero angles") {
  EulerAngles zero{};
  CHECK(max_abs_diff(closed_rep(zero, FundamentalRep::Three), Mat3::Identity()) < 1e-15);
  CHECK(max_abs_diff(closed_rep(zero, FundamentalRep::ThreeStar), Mat3::Identity()) < 1e-15);
  CHECK(max_abs_diff(product_rep(zero, FundamentalRep::Three), Mat3::Identity()) < 1e-15);
}

TEST_CASE("closed-form point values") {
  // (3,3) entry carries exp(2 i eta) cos(theta).
  EulerAngles x{};
  x.theta = kPi / 2;
  CHECK(std::abs(closed_rep(x, FundamentalRep::Three)(2, 2)) < 1e-15);
  CHECK(std::abs(product_rep(x, FundamentalRep::Three)(2, 2)) < 1e-15);

  // (1,3) entry at phi = sqrt(3) pi / 4: phase exp(2 i eta) = i.
  EulerAngles y{};
  y.theta = kPi / 6;
  y.phi = kSqrt3 * kPi / 4;
  cplx v = closed_rep(y, FundamentalRep::Three)(0, 2);
  CHECK(std::abs(v - cplx(0, 0.5)) < 1e-15);

  // Conjugate-table (3,3) entry at theta = pi/3, phi = 0.
  EulerAngles z{};
  z.theta = kPi / 3;
  CHECK(std::abs(closed_rep(z, FundamentalRep::ThreeStar)(2, 2) - cplx(0.5, 0)) < 1e-15);
}

TEST_CASE("product and closed forms agree for both representations") {
  std::mt19937_64 rng(2024);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    EulerAngles x = random_angles(rng);
    worst = std::max(worst, max_abs_diff(product_rep(x, FundamentalRep::Three),
                                         closed_rep(x, FundamentalRep::Three)));
    worst = std::max(worst, max_abs_diff(product_rep(x, FundamentalRep::ThreeStar),
                                         closed_rep(x, FundamentalRep::ThreeStar)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("closed form is special unitary at any angles") {
  std::mt19937_64 rng(11);
  // Periodicity: evaluation accepts values outside the canonical box.
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int k = 0; k < 50; ++k) {
    EulerAngles x{wide(rng), wide(rng), wide(rng), wide(rng),
                  wide(rng), wide(rng), wide(rng), wide(rng)};
    Mat3 u = closed_rep(x, FundamentalRep::Three);
    CHECK(max_abs_diff(u.adjoint() * u, Mat3::Identity()) < 1e-12);
    CHECK(std::abs(u.determinant() - cplx(1, 0)) < 1e-12);
  }
}

TEST_CASE("generator substitution reproduces the conjugate representation") {
  // The outer-automorphism substitution {l1,-l2,-l3,l4,-l5,l6,-l7,-l8}
  // applied to the Three product pattern equals the ThreeStar table
  // directly (no complex conjugation on top).
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    EulerAngles x = random_angles(rng);
    Mat3 sub = product_rep_substituted(x);
    Mat3 star = closed_rep(x, FundamentalRep::ThreeStar);
    CHECK(max_abs_diff(sub, star) < 1e-13);
  }
  // and the two tables are related entrywise by conj with the sign pattern
  // s_r s_c, s = (1,-1,-1)
  EulerAngles x = random_angles(rng);
  Mat3 three = closed_rep(x, FundamentalRep::Three);
  Mat3 star = closed_rep(x, FundamentalRep::ThreeStar);
  const double s[3] = {1, -1, -1};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(std::conj(three(r, c)) - s[r] * s[c] * star(r, c)) < 1e-13);
    }
  }
}

TEST_CASE("row and column labels") {
  CHECK(fundamental_row_label(FundamentalRep::Three, 1) == WeightLabel{1, 1});
  CHECK(fundamental_row_label(FundamentalRep::Three, 3) == WeightLabel{0, -2});
  CHECK(fundamental_row_label(FundamentalRep::ThreeStar, 3) == WeightLabel{0, 2});
  const SymbolInfo& s = symbol_info(symbol_id(FundamentalRep::Three, 1, 3));
  CHECK(s.row_w == WeightLabel{1, 1});
  CHECK(s.col_w == WeightLabel{0, -2});
}

TEST_CASE("adjoint matrix at distinguished points") {
  EulerAngles zero{};
  CHECK((adjoint_closed(zero) - Mat8r::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  EulerAngles x{};
  x.theta = kPi / 2;
  Mat8r r = adjoint_closed(x);
  CHECK(r(7, 7) == doctest::Approx(-0.5));
  Mat8r rc = adjoint_from_conjugation(x);
  for (int j = 0; j < 8; ++j) CHECK(std::abs(r(7, j) - rc(7, j)) < 1e-14);
}

TEST_CASE("adjoint closed form against the conjugation map") {
  std::mt19937_64 rng(99);
  double worst = 0, orth = 0, det = 0;
  for (int k = 0; k < 100; ++k) {
    EulerAngles x = random_angles(rng);
    Mat8r rc = adjoint_closed(x);
    Mat8r ro = adjoint_from_conjugation(x);
    worst = std::max(worst, (rc - ro).cwiseAbs().maxCoeff());
    orth = std::max(orth, (rc.transpose() * rc - Mat8r::Identity()).cwiseAbs().maxCoeff());
    det = std::max(det, std::abs(rc.determinant() - 1.0));
  }
  CHECK(worst < 1e-10);
  CHECK(orth < 1e-10);
  CHECK(det < 1e-10);
}

TEST_CASE("adjoint is a homomorphism under composed conjugations") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    Mat3 u1 = product_rep(random_angles(rng), FundamentalRep::Three);
    Mat3 u2 = product_rep(random_angles(rng), FundamentalRep::Three);
    Mat8r lhs = adjoint_of_matrix(u1 * u2);
    Mat8r rhs = adjoint_of_matrix(u2) * adjoint_of_matrix(u1);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("adjoint image of the conjugate representation") {
  // The conjugate fundamental induces the same rotation only up to the
  // basis sign map C = diag(-1,1,1,-1,1,1,-1,1); pinned here.
  std::mt19937_64 rng(23);
  Mat8r c = Mat8r::Zero();
  const double cd[8] = {-1, 1, 1, -1, 1, 1, -1, 1};
  for (int i = 0; i < 8; ++i) c(i, i) = cd[i];
  for (int k = 0; k < 20; ++k) {
    EulerAngles x = random_angles(rng);
    Mat8r r3 = adjoint_of_matrix(product_rep(x, FundamentalRep::Three));
    Mat8r r3s = adjoint_of_matrix(product_rep(x, FundamentalRep::ThreeStar));
    CHECK((r3s - c * r3 * c).cwiseAbs().maxCoeff() < 1e-13);
  }
}
