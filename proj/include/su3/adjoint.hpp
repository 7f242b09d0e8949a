#pragma once

#include "su3/algebra.hpp"
#include "su3/angles.hpp"
#include "su3/fundamental.hpp"

namespace su3 {

// The 8x8 rotation induced on the generator basis, assembled from the
// closed-form entry table.  Orthogonal with unit determinant.
Mat8r adjoint_closed(const EulerAngles& x);

namespace adjoint_detail {

// The closed forms are stored as data: every entry is a list of signed
// products of primitive trig factors, exposed so the tests can check the
// table term by term against the conjugation identity.
enum Factor : uint8_t {
  C2A, S2A, CB, SB, C2B, S2B, CBB, SBB, C2BB, S2BB, C2C, S2C,
  CT, ST, C2T, S2T, ST2, Q,
  C2AG, S2AG, CAG, SAG, CAMG, SAMG, CM2A, SM2A, CP2A, SP2A,
  CU1, SU1, CU2, SU2, CU3, SU3F, CU4, SU4,
  CV1, SV1, CV2, SV2, CV3, SV3, CV4, SV4,
  kFactorCount
};

struct Vals {
  std::array<double, kFactorCount> f;
};
Vals vals_of(const EulerAngles& x);

struct Term {
  double coeff;
  std::vector<Factor> factors;
};
using EntryTable = std::array<std::array<std::vector<Term>, 8>, 8>;
const EntryTable& entry_table();
double eval_term(const Term& t, const Vals& v);

}  // namespace adjoint_detail

// R_ij = tr(U l_i U^dag l_j) / 2 for any 3x3 unitary U.
Mat8r adjoint_of_matrix(const Mat3& u);

// Same map evaluated through the product-form Three matrix at x.
Mat8r adjoint_from_conjugation(const EulerAngles& x);

}  // namespace su3
