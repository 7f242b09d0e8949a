#pragma once

#include <string>
#include <vector>

#include "su3/algebra.hpp"
#include "su3/angles.hpp"

namespace su3 {

// The two inequivalent three-dimensional representations.
enum class FundamentalRep { Three, ThreeStar };

// Weight coordinates stored exactly: two_t3 = 2*t3, three_y = 3*y.
struct WeightLabel {
  int two_t3 = 0;
  int three_y = 0;

  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
  WeightLabel operator+(const WeightLabel& o) const {
    return {two_t3 + o.two_t3, three_y + o.three_y};
  }
  double t3() const { return two_t3 / 2.0; }
  double y() const { return three_y / 3.0; }
};

// One closed-form matrix element is a sum of at most two terms of the shape
//   sign * exp(i(ma*alpha + mg*gamma + maa*a + mc*c + ne*eta))
//        * cos(beta)^pcb sin(beta)^psb cos(b)^pcbb sin(b)^psbb
//        * cos(theta)^pct sin(theta)^pst
// with eta = phi/sqrt(3) and integer phase exponents.
struct SymbolTerm {
  double sign;
  int m_alpha, m_gamma, m_a, m_c, n_eta;
  int pcb, psb, pcbb, psbb, pct, pst;
};

struct SymbolInfo {
  FundamentalRep rep;
  int row, col;  // 1..3 in the bracket-table layout
  WeightLabel row_w, col_w;
  std::vector<SymbolTerm> terms;
  std::string name;  // e.g. "3(+1/2,+1/3|0,-2/3)"
};

inline constexpr int kNumSymbols = 18;

// Symbol ids 0..8 are the Three table row-major, 9..17 the ThreeStar table.
int symbol_id(FundamentalRep rep, int row, int col);
const SymbolInfo& symbol_info(int id);
cplx eval_symbol(int id, const EulerAngles& x);

// Row labels of the 3x3 bracket tables, index 1..3.
WeightLabel fundamental_row_label(FundamentalRep rep, int row);

// Entry-by-entry assembly of the closed-form table.
Mat3 closed_rep(const EulerAngles& x, FundamentalRep rep);

// The same matrix built the other way: the ordered product of eight
// exponentials of Gell-Mann generators.
Mat3 product_rep(const EulerAngles& x, FundamentalRep rep);

// Product with the outer-automorphism generator substitution
// {l1, -l2, -l3, l4, -l5, l6, -l7, -l8} applied to the Three-rep pattern.
// Coincides with product_rep(x, ThreeStar); kept separate as a cross-check.
Mat3 product_rep_substituted(const EulerAngles& x);

}  // namespace su3
