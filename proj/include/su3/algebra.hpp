#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "su3/angles.hpp"

namespace su3 {

using cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using MatX = Eigen::MatrixXcd;
using Mat8r = Eigen::Matrix<double, 8, 8>;

inline constexpr cplx kI{0.0, 1.0};

// The eight standard traceless Hermitian generators, normalized so that
// tr(l_i l_j) = 2 delta_ij.
const std::array<Mat3, 8>& gellmann_basis();

// AB - BA.  Throws std::invalid_argument on a dimension mismatch.
MatX commutator(const MatX& A, const MatX& B);

// Totally antisymmetric structure constants with f_123 = 1, computed from the
// trace formula f_ijk = tr([l_i, l_j] l_k) / (4i).  Indices 1..8.
class StructureConstants {
 public:
  double operator()(int i, int j, int k) const { return f_[idx(i, j, k)]; }
  double& at(int i, int j, int k) { return f_[idx(i, j, k)]; }

 private:
  static size_t idx(int i, int j, int k) {
    return static_cast<size_t>((i - 1) * 64 + (j - 1) * 8 + (k - 1));
  }
  std::array<double, 512> f_{};
};

StructureConstants structure_constants(const std::array<Mat3, 8>& basis);

// exp(i * angle * G) for Hermitian G, via the spectral decomposition of G
// (exact for this fixed small size, unitary to machine precision).
// Throws std::domain_error if G fails the Hermiticity check.
Mat3 unitary_exp(const Mat3& generator, double angle, double herm_tol = 1e-10);

// Max-abs entrywise distance; the only matrix comparison used anywhere.
double max_abs_diff(const MatX& A, const MatX& B);
bool approx_equal(const MatX& A, const MatX& B, double tol = 1e-10);

}  // namespace su3
