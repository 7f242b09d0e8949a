#pragma once

#include <optional>

#include "su3/haar.hpp"
#include "su3/polystate.hpp"

namespace su3 {

struct IrrepLabel {
  int p = 0, q = 0;

  int dim() const { return (p + 1) * (q + 1) * (p + q + 2) / 2; }
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    return std::tie(a.p, a.q) < std::tie(b.p, b.q);
  }
};

int dimension(const IrrepLabel& label);

// Highest-weight labels: t3 = p/2, y = (2q+p)/3.
WeightLabel highest_weight_label(const IrrepLabel& label);

// The maximum-weight function, as an algebraic state (a signed power of the
// two corner symbols) and as the equivalent closed-form field (binomial sum);
// the two agree pointwise.
PolyState highest_weight(const IrrepLabel& label);
ScalarField highest_weight_field(const IrrepLabel& label);

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct convention_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-symbol action of the sixteen operators, fitted once against the
// finite-difference application over a fixed probe set and snapped to exact
// sixths.  A failed fit (residual above 1e-6) throws convention_error.
class ActionTable {
 public:
  struct Entry {
    int target = -1;     // symbol id, -1 when the operator annihilates it
    double coeff = 0.0;  // exact multiple of 1/6
  };

  // Ladder entries for T/U/V; for T3 and Y the action is diagonal and the
  // eigenvalue is the row (left) or column (right) label component.
  const Entry& entry(const LadderKind& op, int symbol) const;
  double fit_residual() const { return fit_residual_; }

  static const ActionTable& instance();

 private:
  ActionTable();
  static int op_index(const LadderKind& op);
  std::array<std::array<Entry, kNumSymbols>, 16> entries_{};
  double fit_residual_ = 0.0;
};

// Leibniz extension of the per-symbol table over monomials.  Diagonal
// operators (T3, Y, either side) return the state scaled by its exact label.
PolyState ladder_action(const LadderKind& op, const PolyState& state);

// Quadratic Casimir built from the ladder action:
//   T3^2 + (3/4) Y^2 + (TpTm + TmTp + UpUm + UmUp + VpVm + VmVp)/2
// evaluated as <state, C2 state>/<state, state>.
double casimir2(const PolyState& state, const QuadratureSpec& spec = {});

struct IrrepState {
  int two_t = 0;  // total isospin, doubled
  WeightLabel weight;
  PolyState state;  // normalized: <s, s> = V0/dim
};

// Lowering-operator breadth-first generation from the highest weight, with
// Gram-Schmidt inside each weight space, total-isospin resolution, and the
// real-nonnegative-lowering phase convention.  Returns exactly dim states
// (throws generation_error otherwise).
std::vector<IrrepState> generate_irrep(const IrrepLabel& label,
                                       const QuadratureSpec& spec = {},
                                       int pq_bound = 4);

// Total-isospin split of states sharing one (t3, y): combinations
// annihilated by both T+ and T- get t = 0; output sorted by descending t.
std::vector<std::pair<int, PolyState>> isospin_components(
    const std::vector<PolyState>& states, const QuadratureSpec& spec = {});

// Full d x d matrix of representation functions: rows from the left
// generation, columns spread with the right lowering operators.
struct IrrepMatrix {
  IrrepLabel label;
  std::vector<IrrepState> row_states;   // the generated highest-column states
  std::vector<int> col_two_t;
  std::vector<WeightLabel> col_weights;
  std::vector<std::vector<PolyState>> entry;  // [row][col]

  PolyState character() const;
};
const IrrepMatrix& full_matrix(const IrrepLabel& label, const QuadratureSpec& spec = {});

}  // namespace su3
