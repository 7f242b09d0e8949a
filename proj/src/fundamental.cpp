#include "su3/fundamental.hpp"

#include <cmath>
#include <stdexcept>

namespace su3 {

namespace {

std::string frac_name(int num, int den) {
  if (num == 0) return "0";
  std::string s = num > 0 ? "+" : "-";
  int n = std::abs(num);
  s += std::to_string(n);
  s += "/";
  s += std::to_string(den);
  return s;
}

std::string symbol_name(FundamentalRep rep, const WeightLabel& r, const WeightLabel& c) {
  std::string s = rep == FundamentalRep::Three ? "3(" : "3*(";
  s += frac_name(r.two_t3, 2) + "," + frac_name(r.three_y, 3) + "|";
  s += frac_name(c.two_t3, 2) + "," + frac_name(c.three_y, 3) + ")";
  return s;
}

// Row/column labels of the bracket tables.  The first bracket index labels
// rows, the second labels columns.
const WeightLabel kRows3[3] = {{1, 1}, {-1, 1}, {0, -2}};
const WeightLabel kRows3s[3] = {{-1, -1}, {1, -1}, {0, 2}};

std::vector<SymbolInfo> build_symbols() {
  std::vector<SymbolInfo> out(kNumSymbols);
  auto set = [&](FundamentalRep rep, int row, int col, std::vector<SymbolTerm> terms) {
    int id = symbol_id(rep, row, col);
    const WeightLabel* rows = rep == FundamentalRep::Three ? kRows3 : kRows3s;
    out[static_cast<size_t>(id)] = SymbolInfo{
        rep, row, col, rows[row - 1], rows[col - 1], std::move(terms),
        symbol_name(rep, rows[row - 1], rows[col - 1])};
  };

  using T = SymbolTerm;
  constexpr auto F3 = FundamentalRep::Three;
  constexpr auto F3s = FundamentalRep::ThreeStar;

  // Three.  Term fields: sign, m_alpha, m_gamma, m_a, m_c, n_eta,
  //                      cb, sb, cbb, sbb, ct, st.
  set(F3, 1, 1, {T{+1, -1, -1, -1, -1, -1, 1, 0, 1, 0, 1, 0},
                 T{-1, -1, +1, +1, -1, -1, 0, 1, 0, 1, 0, 0}});
  set(F3, 1, 2, {T{+1, -1, -1, -1, +1, -1, 1, 0, 0, 1, 1, 0},
                 T{+1, -1, +1, +1, +1, -1, 0, 1, 1, 0, 0, 0}});
  set(F3, 1, 3, {T{+1, -1, -1, 0, 0, +2, 1, 0, 0, 0, 0, 1}});
  set(F3, 2, 1, {T{-1, +1, -1, -1, -1, -1, 0, 1, 1, 0, 1, 0},
                 T{-1, +1, +1, +1, -1, -1, 1, 0, 0, 1, 0, 0}});
  set(F3, 2, 2, {T{-1, +1, -1, -1, +1, -1, 0, 1, 0, 1, 1, 0},
                 T{+1, +1, +1, +1, +1, -1, 1, 0, 1, 0, 0, 0}});
  set(F3, 2, 3, {T{-1, +1, -1, 0, 0, +2, 0, 1, 0, 0, 0, 1}});
  set(F3, 3, 1, {T{-1, 0, 0, -1, -1, -1, 0, 0, 1, 0, 0, 1}});
  set(F3, 3, 2, {T{-1, 0, 0, -1, +1, -1, 0, 0, 0, 1, 0, 1}});
  set(F3, 3, 3, {T{+1, 0, 0, 0, 0, +2, 0, 0, 0, 0, 1, 0}});

  // ThreeStar.
  set(F3s, 1, 1, {T{+1, +1, +1, +1, +1, +1, 1, 0, 1, 0, 1, 0},
                  T{-1, +1, -1, -1, +1, +1, 0, 1, 0, 1, 0, 0}});
  set(F3s, 1, 2, {T{-1, +1, +1, +1, -1, +1, 1, 0, 0, 1, 1, 0},
                  T{-1, +1, -1, -1, -1, +1, 0, 1, 1, 0, 0, 0}});
  set(F3s, 1, 3, {T{-1, +1, +1, 0, 0, -2, 1, 0, 0, 0, 0, 1}});
  set(F3s, 2, 1, {T{+1, -1, +1, +1, +1, +1, 0, 1, 1, 0, 1, 0},
                  T{+1, -1, -1, -1, +1, +1, 1, 0, 0, 1, 0, 0}});
  set(F3s, 2, 2, {T{-1, -1, +1, +1, -1, +1, 0, 1, 0, 1, 1, 0},
                  T{+1, -1, -1, -1, -1, +1, 1, 0, 1, 0, 0, 0}});
  set(F3s, 2, 3, {T{-1, -1, +1, 0, 0, -2, 0, 1, 0, 0, 0, 1}});
  set(F3s, 3, 1, {T{+1, 0, 0, +1, +1, +1, 0, 0, 1, 0, 0, 1}});
  set(F3s, 3, 2, {T{-1, 0, 0, +1, -1, +1, 0, 0, 0, 1, 0, 1}});
  set(F3s, 3, 3, {T{+1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1, 0}});

  return out;
}

const std::vector<SymbolInfo>& symbols() {
  static const std::vector<SymbolInfo> s = build_symbols();
  return s;
}

double ipow(double v, int p) {
  double r = 1.0;
  for (int k = 0; k < p; ++k) r *= v;
  return r;
}

}  // namespace

int symbol_id(FundamentalRep rep, int row, int col) {
  return (rep == FundamentalRep::Three ? 0 : 9) + (row - 1) * 3 + (col - 1);
}

const SymbolInfo& symbol_info(int id) {
  return symbols().at(static_cast<size_t>(id));
}

WeightLabel fundamental_row_label(FundamentalRep rep, int row) {
  return rep == FundamentalRep::Three ? kRows3[row - 1] : kRows3s[row - 1];
}

cplx eval_symbol(int id, const EulerAngles& x) {
  const SymbolInfo& s = symbol_info(id);
  const double cb = std::cos(x.beta), sb = std::sin(x.beta);
  const double cbb = std::cos(x.b), sbb = std::sin(x.b);
  const double ct = std::cos(x.theta), st = std::sin(x.theta);
  cplx value = 0;
  for (const SymbolTerm& t : s.terms) {
    double phase = t.m_alpha * x.alpha + t.m_gamma * x.gamma + t.m_a * x.a +
                   t.m_c * x.c + t.n_eta * x.eta();
    double trig = ipow(cb, t.pcb) * ipow(sb, t.psb) * ipow(cbb, t.pcbb) *
                  ipow(sbb, t.psbb) * ipow(ct, t.pct) * ipow(st, t.pst);
    value += t.sign * trig * std::exp(kI * phase);
  }
  return value;
}

Mat3 closed_rep(const EulerAngles& x, FundamentalRep rep) {
  Mat3 m;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      m(r - 1, c - 1) = eval_symbol(symbol_id(rep, r, c), x);
    }
  }
  return m;
}

Mat3 product_rep(const EulerAngles& x, FundamentalRep rep) {
  const auto& l = gellmann_basis();
  // Three:     exp(-i l3 a) exp(+i l2 b) with the sign pattern below;
  // ThreeStar: every exponent sign flipped.
  const double s = rep == FundamentalRep::Three ? 1.0 : -1.0;
  Mat3 u = unitary_exp(l[2], -s * x.alpha);
  u = u * unitary_exp(l[1], s * x.beta);
  u = u * unitary_exp(l[2], -s * x.gamma);
  u = u * unitary_exp(l[4], s * x.theta);
  u = u * unitary_exp(l[2], -s * x.a);
  u = u * unitary_exp(l[1], s * x.b);
  u = u * unitary_exp(l[2], -s * x.c);
  u = u * unitary_exp(l[7], -s * x.phi);
  return u;
}

Mat3 product_rep_substituted(const EulerAngles& x) {
  const auto& l = gellmann_basis();
  const std::array<Mat3, 8> m = {l[0],  -l[1], -l[2], l[3],
                                 -l[4], l[5],  -l[6], -l[7]};
  Mat3 u = unitary_exp(m[2], -x.alpha);
  u = u * unitary_exp(m[1], x.beta);
  u = u * unitary_exp(m[2], -x.gamma);
  u = u * unitary_exp(m[4], x.theta);
  u = u * unitary_exp(m[2], -x.a);
  u = u * unitary_exp(m[1], x.b);
  u = u * unitary_exp(m[2], -x.c);
  u = u * unitary_exp(m[7], -x.phi);
  return u;
}

}  // namespace su3
