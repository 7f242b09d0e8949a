#include "su3/algebra.hpp"

#include <stdexcept>

namespace su3 {

const std::array<Mat3, 8>& gellmann_basis() {
  static const std::array<Mat3, 8> basis = [] {
    std::array<Mat3, 8> l;
    for (auto& m : l) m.setZero();
    l[0](0, 1) = 1;
    l[0](1, 0) = 1;
    l[1](0, 1) = cplx(0, -1);
    l[1](1, 0) = cplx(0, 1);
    l[2](0, 0) = 1;
    l[2](1, 1) = -1;
    l[3](0, 2) = 1;
    l[3](2, 0) = 1;
    l[4](0, 2) = cplx(0, -1);
    l[4](2, 0) = cplx(0, 1);
    l[5](1, 2) = 1;
    l[5](2, 1) = 1;
    l[6](1, 2) = cplx(0, -1);
    l[6](2, 1) = cplx(0, 1);
    l[7](0, 0) = 1.0 / kSqrt3;
    l[7](1, 1) = 1.0 / kSqrt3;
    l[7](2, 2) = -2.0 / kSqrt3;
    return l;
  }();
  return basis;
}

MatX commutator(const MatX& A, const MatX& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
    throw std::invalid_argument("commutator: dimension mismatch");
  }
  return A * B - B * A;
}

StructureConstants structure_constants(const std::array<Mat3, 8>& basis) {
  StructureConstants f;
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      Mat3 comm = basis[i - 1] * basis[j - 1] - basis[j - 1] * basis[i - 1];
      for (int k = 1; k <= 8; ++k) {
        cplx tr = (comm * basis[k - 1]).trace();
        f.at(i, j, k) = (tr / (4.0 * kI)).real();
      }
    }
  }
  return f;
}

Mat3 unitary_exp(const Mat3& generator, double angle, double herm_tol) {
  double scale = generator.cwiseAbs().maxCoeff();
  double herm_residual = (generator - generator.adjoint()).cwiseAbs().maxCoeff();
  if (herm_residual > herm_tol * std::max(1.0, scale)) {
    throw std::domain_error("unitary_exp: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(generator);
  Mat3 phases = Mat3::Zero();
  for (int k = 0; k < 3; ++k) {
    phases(k, k) = std::exp(kI * angle * es.eigenvalues()(k));
  }
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

double max_abs_diff(const MatX& A, const MatX& B) {
  return (A - B).cwiseAbs().maxCoeff();
}

bool approx_equal(const MatX& A, const MatX& B, double tol) {
  return A.rows() == B.rows() && A.cols() == B.cols() && max_abs_diff(A, B) < tol;
}

}  // namespace su3
