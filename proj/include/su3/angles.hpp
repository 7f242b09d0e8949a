#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace su3 {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;

// Coordinates on the group manifold, in the argument order
//   alpha, beta, gamma, theta, a, b, c, phi
// of the exponential product that defines the fundamental matrices.
// eta = phi/sqrt(3) appears in most closed forms and is derived on demand.
//
// Evaluation routines accept any real values (everything is entire in the
// angles); only the quadrature module cares about canonical ranges.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double phi = 0.0;

  double eta() const { return phi / kSqrt3; }

  // Partial-derivative axes 1..8 are alpha, beta, gamma, theta, a, b, c, phi.
  double axis(int i) const {
    switch (i) {
      case 1: return alpha;
      case 2: return beta;
      case 3: return gamma;
      case 4: return theta;
      case 5: return a;
      case 6: return b;
      case 7: return c;
      case 8: return phi;
    }
    return 0.0;
  }

  EulerAngles shifted(int axis_index, double delta) const {
    EulerAngles out = *this;
    switch (axis_index) {
      case 1: out.alpha += delta; break;
      case 2: out.beta += delta; break;
      case 3: out.gamma += delta; break;
      case 4: out.theta += delta; break;
      case 5: out.a += delta; break;
      case 6: out.b += delta; break;
      case 7: out.c += delta; break;
      case 8: out.phi += delta; break;
    }
    return out;
  }
};

// Upper bounds of the canonical coordinate box, axis order as above.
// alpha, gamma, a, c in [0, pi); beta, b, theta in [0, pi/2]; phi in [0, sqrt(3) pi).
inline std::array<double, 8> canonical_upper_bounds() {
  return {kPi, kPi / 2, kPi, kPi / 2, kPi, kPi / 2, kPi, kSqrt3 * kPi};
}

inline bool in_canonical_box(const EulerAngles& x) {
  auto hi = canonical_upper_bounds();
  for (int i = 1; i <= 8; ++i) {
    if (x.axis(i) < 0.0 || x.axis(i) > hi[static_cast<size_t>(i - 1)]) return false;
  }
  return true;
}

// Uniform draw over the canonical box, keeping `margin` radians away from the
// box faces.  Probe sets for the differential-operator suites use margin 0.2.
inline EulerAngles random_angles(std::mt19937_64& rng, double margin = 0.0) {
  auto hi = canonical_upper_bounds();
  std::array<double, 8> v{};
  for (size_t i = 0; i < 8; ++i) {
    std::uniform_real_distribution<double> dist(margin, hi[i] - margin);
    v[i] = dist(rng);
  }
  return EulerAngles{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

}  // namespace su3
