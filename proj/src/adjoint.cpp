#include "su3/adjoint.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace su3 {

namespace adjoint_detail {

Vals vals_of(const EulerAngles& x) {
  Vals v;
  const double e3 = 3.0 * x.eta();
  v.f[C2A] = std::cos(2 * x.alpha);
  v.f[S2A] = std::sin(2 * x.alpha);
  v.f[CB] = std::cos(x.beta);
  v.f[SB] = std::sin(x.beta);
  v.f[C2B] = std::cos(2 * x.beta);
  v.f[S2B] = std::sin(2 * x.beta);
  v.f[CBB] = std::cos(x.b);
  v.f[SBB] = std::sin(x.b);
  v.f[C2BB] = std::cos(2 * x.b);
  v.f[S2BB] = std::sin(2 * x.b);
  v.f[C2C] = std::cos(2 * x.c);
  v.f[S2C] = std::sin(2 * x.c);
  v.f[CT] = std::cos(x.theta);
  v.f[ST] = std::sin(x.theta);
  v.f[C2T] = std::cos(2 * x.theta);
  v.f[S2T] = std::sin(2 * x.theta);
  v.f[ST2] = v.f[ST] * v.f[ST];
  v.f[Q] = 1.0 - 0.5 * v.f[ST2];
  v.f[C2AG] = std::cos(2 * x.a + 2 * x.gamma);
  v.f[S2AG] = std::sin(2 * x.a + 2 * x.gamma);
  v.f[CAG] = std::cos(x.alpha + x.gamma);
  v.f[SAG] = std::sin(x.alpha + x.gamma);
  v.f[CAMG] = std::cos(x.alpha - x.gamma);
  v.f[SAMG] = std::sin(x.alpha - x.gamma);
  v.f[CM2A] = std::cos(x.alpha - x.gamma - 2 * x.a);
  v.f[SM2A] = std::sin(x.alpha - x.gamma - 2 * x.a);
  v.f[CP2A] = std::cos(x.alpha + x.gamma + 2 * x.a);
  v.f[SP2A] = std::sin(x.alpha + x.gamma + 2 * x.a);
  v.f[CU1] = std::cos(x.a - x.c + 2 * x.gamma - e3);
  v.f[SU1] = std::sin(x.a - x.c + 2 * x.gamma - e3);
  v.f[CU2] = std::cos(x.a + x.c + e3);
  v.f[SU2] = std::sin(x.a + x.c + e3);
  v.f[CU3] = std::cos(x.a + x.gamma - x.alpha - x.c - e3);
  v.f[SU3F] = std::sin(x.a + x.gamma - x.alpha - x.c - e3);
  v.f[CU4] = std::cos(x.a + x.gamma + x.alpha - x.c - e3);
  v.f[SU4] = std::sin(x.a + x.gamma + x.alpha - x.c - e3);
  v.f[CV1] = std::cos(x.a + x.c + 2 * x.gamma - e3);
  v.f[SV1] = std::sin(x.a + x.c + 2 * x.gamma - e3);
  v.f[CV2] = std::cos(x.a - x.c + e3);
  v.f[SV2] = std::sin(x.a - x.c + e3);
  v.f[CV3] = std::cos(x.a + x.c + x.gamma - x.alpha - e3);
  v.f[SV3] = std::sin(x.a + x.c + x.gamma - x.alpha - e3);
  v.f[CV4] = std::cos(x.a + x.c + x.gamma + x.alpha - e3);
  v.f[SV4] = std::sin(x.a + x.c + x.gamma + x.alpha - e3);
  return v;
}

double eval_term(const Term& t, const Vals& v) {
  double r = t.coeff;
  for (Factor f : t.factors) r *= v.f[f];
  return r;
}

namespace {

constexpr double kH = 0.5;
const double kR3H = kSqrt3 / 2.0;

// The 64 closed-form entries as data.  Each line is one product term.  The
// table satisfies the defining conjugation identity entry by entry; where
// the printed source table disagreed with that identity, the entry carries
// the minimal repair (term signs, a swapped trig factor or phase argument,
// and the 1/2 on the sin(2 theta) terms of rows 4-7).
const EntryTable& table() {
  static const EntryTable t = [] {
    EntryTable e;
    auto set = [&](int i, int j, std::vector<Term> terms) {
      e[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = std::move(terms);
    };

    set(1, 1, {{+1, {C2A, C2B, CT, C2AG, C2BB, C2C}},
               {-1, {C2A, C2B, CT, S2AG, S2C}},
               {-1, {S2A, CT, S2AG, C2BB, C2C}},
               {-1, {S2A, CT, C2AG, S2C}},
               {-1, {C2A, S2B, Q, S2BB, C2C}}});
    set(1, 2, {{+1, {S2A, C2B, CT, C2AG, C2BB, C2C}},
               {-1, {S2A, C2B, CT, S2AG, S2C}},
               {+1, {C2A, CT, S2AG, C2BB, C2C}},
               {+1, {C2A, CT, C2AG, S2C}},
               {-1, {S2A, S2B, Q, S2BB, C2C}}});
    set(1, 3, {{+1, {S2B, C2AG, C2BB, C2C, CT}},
               {-1, {S2B, S2AG, S2C, CT}},
               {+1, {C2B, Q, S2BB, C2C}}});
    set(1, 4, {{-kH, {CAG, CB, S2T, S2BB, C2C}},
               {-1, {CM2A, SB, C2BB, C2C, ST}},
               {-1, {SM2A, SB, S2C, ST}}});
    set(1, 5, {{-kH, {SAG, CB, S2T, S2BB, C2C}},
               {-1, {SM2A, SB, C2BB, C2C, ST}},
               {+1, {CM2A, SB, S2C, ST}}});
    set(1, 6, {{+kH, {CAMG, SB, S2T, S2BB, C2C}},
               {-1, {CP2A, CB, C2BB, C2C, ST}},
               {+1, {SP2A, CB, S2C, ST}}});
    set(1, 7, {{-kH, {SAMG, SB, S2T, S2BB, C2C}},
               {+1, {SP2A, CB, C2BB, C2C, ST}},
               {+1, {CP2A, CB, S2C, ST}}});
    set(1, 8, {{-kR3H, {ST2, S2BB, C2C}}});

    set(2, 1, {{-1, {C2A, C2B, CT, S2AG, C2C}},
               {-1, {C2A, C2B, CT, C2AG, C2BB, S2C}},
               {+1, {S2A, CT, S2AG, C2BB, S2C}},
               {-1, {S2A, CT, C2AG, C2C}},
               {+1, {C2A, S2B, Q, S2BB, S2C}}});
    set(2, 2, {{-1, {S2A, C2B, CT, S2AG, C2C}},
               {-1, {S2A, C2B, CT, C2AG, C2BB, S2C}},
               {-1, {C2A, CT, S2AG, C2BB, S2C}},
               {+1, {C2A, CT, C2AG, C2C}},
               {+1, {S2A, S2B, Q, S2BB, S2C}}});
    set(2, 3, {{-1, {S2B, CT, C2AG, C2BB, S2C}},
               {-1, {S2B, CT, S2AG, C2C}},
               {-1, {C2B, Q, S2BB, S2C}}});
    set(2, 4, {{+kH, {CAG, CB, S2T, S2BB, S2C}},
               {-1, {SM2A, SB, ST, C2C}},
               {+1, {CM2A, SB, ST, C2BB, S2C}}});
    set(2, 5, {{+kH, {SAG, CB, S2T, S2BB, S2C}},
               {+1, {CM2A, SB, ST, C2C}},
               {+1, {SM2A, SB, ST, C2BB, S2C}}});
    set(2, 6, {{-kH, {CAMG, SB, S2T, S2BB, S2C}},
               {+1, {SP2A, CB, ST, C2C}},
               {+1, {CP2A, CB, ST, C2BB, S2C}}});
    set(2, 7, {{+kH, {SAMG, SB, S2T, S2BB, S2C}},
               {+1, {CP2A, CB, ST, C2C}},
               {-1, {SP2A, CB, ST, C2BB, S2C}}});
    set(2, 8, {{+kR3H, {ST2, S2BB, S2C}}});

    set(3, 1, {{-1, {C2A, C2B, CT, S2BB, C2AG}},
               {+1, {S2A, CT, S2BB, S2AG}},
               {-1, {C2A, S2B, Q, C2BB}}});
    set(3, 2, {{-1, {S2A, C2B, CT, S2BB, C2AG}},
               {-1, {C2A, CT, S2BB, S2AG}},
               {-1, {S2A, S2B, Q, C2BB}}});
    set(3, 3, {{-1, {S2B, CT, S2BB, C2AG}}, {+1, {C2B, Q, C2BB}}});
    set(3, 4, {{-kH, {CAG, CB, S2T, C2BB}}, {+1, {CM2A, SB, ST, S2BB}}});
    set(3, 5, {{-kH, {SAG, CB, S2T, C2BB}}, {+1, {SM2A, SB, ST, S2BB}}});
    set(3, 6, {{+kH, {CAMG, SB, S2T, C2BB}}, {+1, {CP2A, CB, ST, S2BB}}});
    set(3, 7, {{-kH, {SAMG, SB, S2T, C2BB}}, {-1, {SP2A, CB, ST, S2BB}}});
    set(3, 8, {{-kR3H, {ST2, C2BB}}});

    set(4, 1, {{-1, {C2A, C2B, ST, SBB, CU1}},
               {-kH, {C2A, S2B, S2T, CU2, CBB}},
               {+1, {S2A, ST, SBB, SU1}}});
    set(4, 2, {{-1, {S2A, C2B, ST, SBB, CU1}},
               {-kH, {S2A, S2B, S2T, CU2, CBB}},
               {-1, {C2A, ST, SBB, SU1}}});
    set(4, 3, {{-1, {S2B, ST, SBB, CU1}}, {+kH, {C2B, S2T, CU2, CBB}}});
    set(4, 4, {{+1, {CAG, CB, C2T, CU2, CBB}},
               {-1, {SAG, CB, SU2, CBB}},
               {-1, {SB, CT, SBB, CU3}}});
    set(4, 5, {{+1, {SAG, CB, C2T, CU2, CBB}},
               {+1, {CAG, CB, SU2, CBB}},
               {+1, {SB, CT, SBB, SU3F}}});
    set(4, 6, {{-1, {CAMG, SB, C2T, CU2, CBB}},
               {-1, {SAMG, SB, SU2, CBB}},
               {-1, {CB, CT, SBB, CU4}}});
    set(4, 7, {{+1, {SAMG, SB, C2T, CU2, CBB}},
               {-1, {CAMG, SB, SU2, CBB}},
               {+1, {CB, CT, SBB, SU4}}});
    set(4, 8, {{+kR3H, {S2T, CU2, CBB}}});

    set(5, 1, {{-1, {C2A, C2B, ST, SBB, SU1}},
               {+kH, {C2A, S2B, S2T, SU2, CBB}},
               {-1, {S2A, ST, SBB, CU1}}});
    set(5, 2, {{-1, {S2A, C2B, ST, SBB, SU1}},
               {+kH, {S2A, S2B, S2T, SU2, CBB}},
               {+1, {C2A, ST, SBB, CU1}}});
    set(5, 3, {{-1, {S2B, ST, SBB, SU1}}, {-kH, {C2B, S2T, CBB, SU2}}});
    set(5, 4, {{-1, {CAG, CB, C2T, SU2, CBB}},
               {-1, {SAG, CB, CU2, CBB}},
               {-1, {SB, CT, SBB, SU3F}}});
    set(5, 5, {{-1, {SAG, CB, C2T, SU2, CBB}},
               {+1, {CAG, CB, CU2, CBB}},
               {-1, {SB, CT, SBB, CU3}}});
    set(5, 6, {{+1, {CAMG, SB, C2T, SU2, CBB}},
               {-1, {SAMG, SB, CU2, CBB}},
               {-1, {CB, CT, SBB, SU4}}});
    set(5, 7, {{-1, {SAMG, SB, C2T, SU2, CBB}},
               {-1, {CAMG, SB, CU2, CBB}},
               {-1, {CB, CT, SBB, CU4}}});
    set(5, 8, {{-kR3H, {S2T, SU2, CBB}}});

    set(6, 1, {{+1, {C2A, C2B, ST, CBB, CV1}},
               {-kH, {C2A, S2B, S2T, CV2, SBB}},
               {-1, {S2A, ST, CBB, SV1}}});
    set(6, 2, {{+1, {S2A, C2B, ST, CBB, CV1}},
               {-kH, {S2A, S2B, S2T, CV2, SBB}},
               {+1, {C2A, ST, CBB, SV1}}});
    set(6, 3, {{+1, {S2B, ST, CBB, CV1}}, {+kH, {C2B, S2T, SBB, CV2}}});
    set(6, 4, {{+1, {CAG, CB, C2T, CV2, SBB}},
               {-1, {SAG, CB, SV2, SBB}},
               {+1, {SB, CT, CBB, CV3}}});
    set(6, 5, {{+1, {SAG, CB, C2T, CV2, SBB}},
               {+1, {CAG, CB, SV2, SBB}},
               {-1, {SB, CT, CBB, SV3}}});
    set(6, 6, {{-1, {CAMG, SB, C2T, CV2, SBB}},
               {-1, {SAMG, SB, SV2, SBB}},
               {+1, {CB, CT, CBB, CV4}}});
    set(6, 7, {{+1, {SAMG, SB, C2T, CV2, SBB}},
               {-1, {CAMG, SB, SV2, SBB}},
               {-1, {CB, CT, CBB, SV4}}});
    set(6, 8, {{+kR3H, {S2T, CV2, SBB}}});

    set(7, 1, {{+1, {C2A, C2B, ST, CBB, SV1}},
               {+kH, {C2A, S2B, S2T, SV2, SBB}},
               {+1, {S2A, ST, CBB, CV1}}});
    set(7, 2, {{+1, {S2A, C2B, ST, CBB, SV1}},
               {+kH, {S2A, S2B, S2T, SV2, SBB}},
               {-1, {C2A, ST, CBB, CV1}}});
    set(7, 3, {{+1, {S2B, ST, CBB, SV1}}, {-kH, {C2B, S2T, SBB, SV2}}});
    set(7, 4, {{-1, {CAG, CB, C2T, SV2, SBB}},
               {-1, {SAG, CB, CV2, SBB}},
               {+1, {SB, CT, CBB, SV3}}});
    set(7, 5, {{-1, {SAG, CB, C2T, SV2, SBB}},
               {+1, {CAG, CB, CV2, SBB}},
               {+1, {SB, CT, CBB, CV3}}});
    set(7, 6, {{+1, {CAMG, SB, C2T, SV2, SBB}},
               {-1, {SAMG, SB, CV2, SBB}},
               {+1, {CB, CT, CBB, SV4}}});
    set(7, 7, {{-1, {SAMG, SB, C2T, SV2, SBB}},
               {-1, {CAMG, SB, CV2, SBB}},
               {+1, {CB, CT, CBB, CV4}}});
    set(7, 8, {{-kR3H, {S2T, SV2, SBB}}});

    set(8, 1, {{+kR3H, {C2A, S2B, ST2}}});
    set(8, 2, {{+kR3H, {S2A, S2B, ST2}}});
    set(8, 3, {{-kR3H, {C2B, ST2}}});
    set(8, 4, {{-kR3H, {CAG, CB, S2T}}});
    set(8, 5, {{-kR3H, {SAG, CB, S2T}}});
    set(8, 6, {{+kR3H, {CAMG, SB, S2T}}});
    set(8, 7, {{-kR3H, {SAMG, SB, S2T}}});
    set(8, 8, {{1.0, {}}, {-1.5, {ST2}}});

    return e;
  }();
  return t;
}

}  // namespace

const EntryTable& entry_table() { return table(); }

}  // namespace adjoint_detail

Mat8r adjoint_closed(const EulerAngles& x) {
  const adjoint_detail::Vals v = adjoint_detail::vals_of(x);
  const adjoint_detail::EntryTable& t = adjoint_detail::entry_table();
  Mat8r r;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double sum = 0;
      for (const adjoint_detail::Term& term : t[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        sum += adjoint_detail::eval_term(term, v);
      }
      r(i, j) = sum;
    }
  }
  return r;
}

Mat8r adjoint_of_matrix(const Mat3& u) {
  const auto& l = gellmann_basis();
  Mat8r r;
  for (int i = 0; i < 8; ++i) {
    Mat3 conj = u * l[static_cast<size_t>(i)] * u.adjoint();
    for (int j = 0; j < 8; ++j) {
      r(i, j) = 0.5 * (conj * l[static_cast<size_t>(j)]).trace().real();
    }
  }
  return r;
}

Mat8r adjoint_from_conjugation(const EulerAngles& x) {
  return adjoint_of_matrix(product_rep(x, FundamentalRep::Three));
}

}  // namespace su3
