// Temporary development probe.

#include <cstdio>

#include "su3/cg.hpp"
#include "su3/irreps.hpp"

using namespace su3;

static void show(const char* tag, const PolyState& p) {
  std::printf("%s:\n", tag);
  for (const auto& [m, c] : p.terms()) {
    std::printf("   (%+.6f%+.6fi)", c.real(), c.imag());
    for (int id : m) std::printf(" %s", symbol_info(id).name.c_str());
    std::printf("\n");
  }
}

int main() {
  QuadratureSpec spec;

  double v0 = group_volume(spec);
  std::printf("V0 = %.17g  (exact %.17g)  rel err %.2e\n", v0, group_volume_exact(),
              std::abs(v0 - group_volume_exact()) / group_volume_exact());

  PolyState e11 = PolyState::monomial({symbol_id(FundamentalRep::Three, 1, 1)});
  PolyState e31 = PolyState::monomial({symbol_id(FundamentalRep::Three, 3, 1)});
  cplx n11 = inner_product(e11, e11, spec);
  cplx x13 = inner_product(e11, e31, spec);
  std::printf("<e11,e11> = %.12g (want %.12g)   <e11,e31> = %.3e\n", n11.real(), v0 / 3,
              std::abs(x13));

  try {
    const ActionTable& t = ActionTable::instance();
    std::printf("action table OK, worst fit residual %.2e\n", t.fit_residual());
  } catch (const std::exception& e) {
    std::printf("ACTION TABLE FAILED: %s\n", e.what());
    return 1;
  }

  PolyState hw = highest_weight({1, 1});
  show("hw(1,1)", hw);
  show("V- hw", ladder_action({LadderName::VMinus, OpSide::Left}, hw));
  show("T- U- hw", ladder_action({LadderName::TMinus, OpSide::Left},
                                 ladder_action({LadderName::UMinus, OpSide::Left}, hw)));

  auto octet = generate_irrep({1, 1}, spec);
  std::printf("octet states: %zu\n", octet.size());
  for (const auto& s : octet) {
    std::printf("  t=%d/2 (t3,y)=(%d/2,%d/3)  terms=%zu\n", s.two_t, s.weight.two_t3,
                s.weight.three_y, s.state.size());
  }
  for (const auto& s : octet) {
    if (s.weight.two_t3 == 0 && s.weight.three_y == 0) {
      show(s.two_t == 2 ? "center triplet" : "center singlet", s.state);
    }
  }

  std::printf("casimir octet hw: %.12g (expect 3)\n", casimir2(octet.front().state, spec));

  const IrrepMatrix& m8 = full_matrix({1, 1}, spec);
  std::printf("octet full matrix: %zu x %zu\n", m8.entry.size(), m8.entry[0].size());

  auto dec = tensor_decompose({1, 0}, {0, 1}, spec);
  std::printf("3 x 3*: ");
  for (auto [l, m] : dec) std::printf(" %d x (%d,%d)[d=%d]", m, l.p, l.q, l.dim());
  std::printf("\n");
  auto dec2 = tensor_decompose({1, 0}, {1, 0}, spec);
  std::printf("3 x 3: ");
  for (auto [l, m] : dec2) std::printf(" %d x (%d,%d)[d=%d]", m, l.p, l.q, l.dim());
  std::printf("\n");

  CouplingTable t8 = wcg_coefficients({1, 0}, {0, 1}, {1, 1}, 0, spec);
  std::printf("wcg 3x3*->8: %zu states\n", t8.states.size());
  for (const auto& st : t8.states) {
    std::printf("  T=%d/2 (%d/2,%d/3): ", st.two_t, st.weight.two_t3, st.weight.three_y);
    for (auto [i, j, c] : st.coeffs) std::printf(" (%d,%d)%+.6f", i, j, c);
    std::printf("\n");
  }
  CouplingTable t1 = wcg_coefficients({1, 0}, {0, 1}, {0, 0}, 0, spec);
  std::printf("wcg 3x3*->1:\n");
  for (const auto& st : t1.states) {
    for (auto [i, j, c] : st.coeffs) std::printf(" (%d,%d)%+.6f", i, j, c);
    std::printf("\n");
  }
  CouplingTable o8 = casimir_oracle_coefficients({1, 0}, {0, 1}, {1, 1}, 0, spec);
  std::printf("haar-vs-oracle (8): %.3e\n", table_distance_up_to_sign(t8, o8));
  CouplingTable o1 = casimir_oracle_coefficients({1, 0}, {0, 1}, {0, 0}, 0, spec);
  std::printf("haar-vs-oracle (1): %.3e\n", table_distance_up_to_sign(t1, o1));

  return 0;
}
