#pragma once

#include "su3/irreps.hpp"

namespace su3 {

// One coupled target state expanded over product weight pairs.
struct CoupledState {
  int two_t = 0;          // target-state isospin labels
  WeightLabel weight;
  // (factor-1 state index, factor-2 state index) -> real coefficient.
  std::vector<std::tuple<int, int, double>> coeffs;
};

struct CouplingTable {
  IrrepLabel factor1, factor2, target;
  int mult_index = 0;
  std::vector<IrrepState> basis1, basis2;  // the factor state labels
  std::vector<CoupledState> states;        // one per target basis state
};

struct decomposition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Irrep content of a tensor product, found by projecting the product
// character against candidate characters with the invariant integral.
// Throws decomposition_error when the dimension bookkeeping fails.
std::vector<std::pair<IrrepLabel, int>> tensor_decompose(const IrrepLabel& r1,
                                                         const IrrepLabel& r2,
                                                         const QuadratureSpec& spec = {},
                                                         int product_dim_bound = 81);

// Coupling coefficients from invariant-integral projections of product
// functions onto the generated target basis, V0/d normalized, phases fixed
// so the highest-weight coupling is positive real.  Coefficients are real
// under this convention; an imaginary part above 1e-10 aborts.
CouplingTable wcg_coefficients(const IrrepLabel& r1, const IrrepLabel& r2,
                               const IrrepLabel& target, int mult_index = 0,
                               const QuadratureSpec& spec = {});

// Independent algebraic route: raising-operator null spaces on the abstract
// product space, cross-checked against the quadratic Casimir spectrum, then
// lowered to the full coupled basis.  Runs no invariant integrals.
CouplingTable casimir_oracle_coefficients(const IrrepLabel& r1, const IrrepLabel& r2,
                                          const IrrepLabel& target, int mult_index = 0,
                                          const QuadratureSpec& spec = {});

// Shared presentation convention: within every coupled state the first
// nonzero coefficient (factor-state index order) is positive.
void canonicalize_row_phases(CouplingTable& table);

// Largest |difference| between two tables after aligning the per-table
// global sign (tables are real); infinity when shapes differ.
double table_distance_up_to_sign(const CouplingTable& a, const CouplingTable& b);

}  // namespace su3
