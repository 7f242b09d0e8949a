#pragma once

#include <cstdint>
#include <vector>

#include "su3/polystate.hpp"

namespace su3 {

// Invariant density over the compact trig axes; independent of the five
// phase angles.
double haar_density(const EulerAngles& x);

struct QuadratureSpec {
  enum class Mode { Separable, MonteCarlo };
  Mode mode = Mode::Separable;
  int gauss_order = 24;      // per trig axis
  long mc_samples = 100000;  // Monte Carlo draws
  uint64_t seed = 12345;
};

// Total invariant volume V0; the separable route returns sqrt(3)/2 * pi^5 to
// machine precision.
double group_volume(const QuadratureSpec& spec = {});
inline double group_volume_exact() {
  return 0.5 * kSqrt3 * kPi * kPi * kPi * kPi * kPi;
}

// <f, g> = integral of conj(f) * g against the invariant measure.
//
// Separable mode: the five phase integrals collapse to exact Kronecker
// deltas on the accumulated integer exponents (phases tracked in eta units),
// leaving per-pair Gauss-Legendre integrals over (beta, b, theta).
cplx inner_product(const PolyState& f, const PolyState& g,
                   const QuadratureSpec& spec = {});

// Monte Carlo estimate with its standard error (valid for opaque fields).
struct McEstimate {
  cplx value;
  double stderr_abs;
};
McEstimate inner_product_mc(const ScalarField& f, const ScalarField& g,
                            const QuadratureSpec& spec);
McEstimate group_volume_mc(const QuadratureSpec& spec);

// Throws std::invalid_argument in Separable mode (opaque fields carry no
// phase exponents).
cplx inner_product(const ScalarField& f, const ScalarField& g,
                   const QuadratureSpec& spec);

// Gram-matrix scan over a family of states against the V0/d normalization.
struct GramPair {
  int i, j;
  cplx value;
  double expected;  // V0/d on the diagonal, 0 off it
  double abs_err;
};
struct OrthReport {
  double v0 = 0;
  double gram_max_offdiag = 0;   // |value| / V0, worst off-diagonal
  double gram_max_diag_err = 0;  // relative error against V0/d
  std::vector<GramPair> worst_pairs;
  std::vector<GramPair> diagonal;
};
OrthReport orthogonality_scan(const std::vector<std::pair<PolyState, int>>& states_with_dim,
                              const QuadratureSpec& spec = {});

// Seeded sample of the normalized invariant measure (inverse-CDF on the trig
// axes, uniform phases over the exact-cover phase ranges).
EulerAngles sample_haar(std::mt19937_64& rng);

}  // namespace su3
