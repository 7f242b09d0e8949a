#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su3/algebra.hpp"
#include "su3/angles.hpp"

namespace su3 {

// A complex-valued function on the group with a provenance tag.
struct ScalarField {
  std::function<cplx(const EulerAngles&)> eval;
  std::string descriptor;

  cplx operator()(const EulerAngles& x) const { return eval(x); }
};

enum class LadderName { TPlus, TMinus, UPlus, UMinus, VPlus, VMinus, T3, Y };
enum class OpSide { Left, Right };

struct LadderKind {
  LadderName name;
  OpSide side;
};

std::string ladder_kind_name(const LadderKind& k);

struct singular_point_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct evaluation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CoeffField = std::function<cplx(const EulerAngles&)>;

// A first-order differential operator: sum of coefficient-field times
// partial-derivative terms, an optional zeroth-order part, and a coupling to
// the auxiliary hypercharge operator (the side's Y), kept separate so that
// the identification of that operator stays a one-line choice.
struct DiffOperator {
  struct Term {
    CoeffField coeff;
    int axis;  // 1..8
  };
  std::vector<Term> first_order;
  CoeffField zeroth;       // may be null
  CoeffField y8_coupling;  // may be null; multiplies Y (left ops) or Y^r (right ops)
  OpSide side = OpSide::Left;
  std::string name;
  // Angles whose trigonometric half-grids the coefficients blow up on:
  // any subset of {2 (beta), 6 (b), 4 (theta)}; guarded at apply time.
  std::vector<int> guard_axes;
};

DiffOperator build_operator(const LadderKind& which);

struct FdSpec {
  double step = 1e-3;           // base step of the central stencil
  double guard_factor = 4.0;    // minimum distance to a coefficient pole, in steps
};

// Richardson-extrapolated 4th-order central derivative of f along one axis.
cplx fd_derivative(const ScalarField& f, const EulerAngles& at, int axis,
                   const FdSpec& fd = {});

// Evaluate op acting on f at a point.  Throws singular_point_error when the
// point sits within guard_factor*step of a coefficient pole, and
// evaluation_error on non-finite field values.
cplx apply(const DiffOperator& op, const ScalarField& f, const EulerAngles& at,
           const FdSpec& fd = {});

// op as a field: y -> (op f)(y), for nesting.
ScalarField applied_field(const DiffOperator& op, const ScalarField& f,
                          const FdSpec& fd = {});

// Linear combinations, for expected commutators like 2*T3 or (3/2)Y + T3.
DiffOperator op_scaled(const DiffOperator& op, cplx factor);
DiffOperator op_sum(const DiffOperator& a, const DiffOperator& b);

// max over probes of |([op1,op2] - expected) f| with nested application.
double commutator_residual(const DiffOperator& op1, const DiffOperator& op2,
                           const DiffOperator& expected,
                           const std::vector<std::pair<ScalarField, EulerAngles>>& probes,
                           const FdSpec& fd = {});

}  // namespace su3
