#include "su3/diffops.hpp"

#include <cmath>

namespace su3 {

namespace {

constexpr cplx iu{0.0, 1.0};

double dist_to_half_pi_grid(double v) {
  // Distance to the nearest multiple of pi/2, where cot/csc factors blow up.
  double m = std::fmod(std::abs(v), kPi / 2);
  return std::min(m, kPi / 2 - m);
}

DiffOperator make_t3(OpSide side) {
  DiffOperator op;
  op.side = side;
  int axis = side == OpSide::Left ? 1 : 7;
  op.first_order.push_back({[](const EulerAngles&) { return 0.5 * iu; }, axis});
  return op;
}

DiffOperator make_y(OpSide side) {
  DiffOperator op;
  op.side = side;
  if (side == OpSide::Left) {
    op.first_order.push_back({[](const EulerAngles&) { return iu; }, 3});
    op.first_order.push_back({[](const EulerAngles&) { return -iu; }, 5});
    op.first_order.push_back({[](const EulerAngles&) { return iu / kSqrt3; }, 8});
  } else {
    op.first_order.push_back({[](const EulerAngles&) { return iu / kSqrt3; }, 8});
  }
  return op;
}

DiffOperator make_t_pm(OpSide side, bool plus) {
  DiffOperator op;
  op.side = side;
  if (side == OpSide::Left) {
    const double s = plus ? -1.0 : 1.0;  // phase exp(s*2i*alpha)
    const double d2 = plus ? -1.0 : 1.0;
    op.first_order.push_back(
        {[s](const EulerAngles& x) {
           return 0.5 * iu * std::exp(iu * (2.0 * s * x.alpha)) / std::tan(2 * x.beta);
         },
         1});
    op.first_order.push_back(
        {[s, d2](const EulerAngles& x) {
           return 0.5 * d2 * std::exp(iu * (2.0 * s * x.alpha));
         },
         2});
    op.first_order.push_back(
        {[s](const EulerAngles& x) {
           return -0.5 * iu * std::exp(iu * (2.0 * s * x.alpha)) / std::sin(2 * x.beta);
         },
         3});
    op.guard_axes = {2};
  } else {
    // Right pair: T-^r carries exp(+2ic), T+^r carries exp(-2ic).
    const double s = plus ? -1.0 : 1.0;
    const double d6 = plus ? 1.0 : -1.0;
    op.first_order.push_back(
        {[s](const EulerAngles& x) {
           return -0.5 * iu * std::exp(iu * (2.0 * s * x.c)) / std::tan(2 * x.b);
         },
         7});
    op.first_order.push_back(
        {[s, d6](const EulerAngles& x) {
           return 0.5 * d6 * std::exp(iu * (2.0 * s * x.c));
         },
         6});
    op.first_order.push_back(
        {[s](const EulerAngles& x) {
           return 0.5 * iu * std::exp(iu * (2.0 * s * x.c)) / std::sin(2 * x.b);
         },
         5});
    op.guard_axes = {6};
  }
  return op;
}

// Left V and U.  sv = -1 for V+/U- phase signs as transcribed below.
DiffOperator make_v_left(bool plus) {
  DiffOperator op;
  op.side = OpSide::Left;
  const double s = plus ? -1.0 : 1.0;  // exp(i s (alpha+gamma)), exp(i s (alpha-gamma-2a))
  const double d4 = plus ? -1.0 : 1.0;
  const double d6 = plus ? -1.0 : 1.0;
  auto p = [s](const EulerAngles& x) { return std::exp(iu * (s * (x.alpha + x.gamma))); };
  auto q = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.alpha - x.gamma - 2 * x.a)));
  };
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * std::sin(x.beta) / std::sin(2 * x.beta) /
                std::tan(x.theta);
       },
       1});
  op.first_order.push_back(
      {[p, plus](const EulerAngles& x) {
         return (plus ? 0.5 : -0.5) * p(x) * std::sin(x.beta) / std::tan(x.theta);
       },
       2});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return -0.5 * iu * p(x) * std::sin(x.beta) / std::tan(2 * x.beta) /
                std::tan(x.theta);
       },
       3});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         double st = std::sin(x.theta);
         return 0.5 * iu * p(x) * (2.0 - st * st) / std::sin(2 * x.theta) *
                std::cos(x.beta);
       },
       3});
  op.first_order.push_back(
      {[p, d4](const EulerAngles& x) { return 0.5 * d4 * p(x) * std::cos(x.beta); }, 4});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return -0.5 * iu * p(x) * 2.0 * std::cos(x.beta) / std::sin(2 * x.theta);
       },
       5});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return -0.5 * iu * q(x) * std::sin(x.beta) / std::tan(2 * x.b) /
                std::sin(x.theta);
       },
       5});
  op.first_order.push_back(
      {[q, d6](const EulerAngles& x) {
         return 0.5 * d6 * q(x) * std::sin(x.beta) / std::sin(x.theta);
       },
       6});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return 0.5 * iu * q(x) * std::sin(x.beta) / (std::sin(x.theta) * std::sin(2 * x.b));
       },
       7});
  op.y8_coupling = [p](const EulerAngles& x) {
    return -0.75 * p(x) * std::tan(x.theta) * std::cos(x.beta);
  };
  op.guard_axes = {2, 6, 4};
  return op;
}

DiffOperator make_u_left(bool plus) {
  DiffOperator op;
  op.side = OpSide::Left;
  const double s = plus ? 1.0 : -1.0;  // exp(i s (alpha-gamma)), exp(i s (alpha+gamma+2a))
  const double d4 = plus ? 1.0 : -1.0;
  const double d6 = plus ? -1.0 : 1.0;
  auto p = [s](const EulerAngles& x) { return std::exp(iu * (s * (x.alpha - x.gamma))); };
  auto q = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.alpha + x.gamma + 2 * x.a)));
  };
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * std::cos(x.beta) / std::sin(2 * x.beta) /
                std::tan(x.theta);
       },
       1});
  op.first_order.push_back(
      {[p, plus](const EulerAngles& x) {
         return (plus ? 0.5 : -0.5) * p(x) * std::cos(x.beta) / std::tan(x.theta);
       },
       2});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return -0.5 * iu * p(x) * std::cos(x.beta) / std::tan(2 * x.beta) /
                std::tan(x.theta);
       },
       3});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         double st = std::sin(x.theta);
         return -0.5 * iu * p(x) * (2.0 - st * st) / std::sin(2 * x.theta) *
                std::sin(x.beta);
       },
       3});
  op.first_order.push_back(
      {[p, d4](const EulerAngles& x) { return 0.5 * d4 * p(x) * std::sin(x.beta); }, 4});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * 2.0 * std::sin(x.beta) / std::sin(2 * x.theta);
       },
       5});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return -0.5 * iu * q(x) * std::cos(x.beta) / std::tan(2 * x.b) /
                std::sin(x.theta);
       },
       5});
  op.first_order.push_back(
      {[q, d6](const EulerAngles& x) {
         return 0.5 * d6 * q(x) * std::cos(x.beta) / std::sin(x.theta);
       },
       6});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return 0.5 * iu * q(x) * std::cos(x.beta) / (std::sin(x.theta) * std::sin(2 * x.b));
       },
       7});
  op.y8_coupling = [p](const EulerAngles& x) {
    return 0.75 * p(x) * std::tan(x.theta) * std::sin(x.beta);
  };
  op.guard_axes = {2, 6, 4};
  return op;
}

// Right V and U act through the mirrored coefficient pattern (b and beta,
// c and alpha exchange roles; eta enters the phases).
DiffOperator make_v_right(bool plus) {
  DiffOperator op;
  op.side = OpSide::Right;
  const double s = plus ? -1.0 : 1.0;  // exp(i s (c+a+3eta)), exp(i s (c-a-2gamma+3eta))
  const double d6 = plus ? -1.0 : 1.0;
  const double d4 = plus ? 1.0 : -1.0;
  const double d2 = plus ? 1.0 : -1.0;
  auto p = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.c + x.a + 3 * x.eta())));
  };
  auto q = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.c - x.a - 2 * x.gamma + 3 * x.eta())));
  };
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return -0.5 * iu * p(x) * std::sin(x.b) / std::sin(2 * x.b) / std::tan(x.theta);
       },
       7});
  op.first_order.push_back(
      {[p, d6](const EulerAngles& x) {
         return 0.5 * d6 * p(x) * std::sin(x.b) / std::tan(x.theta);
       },
       6});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * std::sin(x.b) / std::tan(2 * x.b) / std::tan(x.theta);
       },
       5});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         double st = std::sin(x.theta);
         return -0.5 * iu * p(x) * (2.0 - st * st) / std::sin(2 * x.theta) * std::cos(x.b);
       },
       5});
  op.first_order.push_back(
      {[p, d4](const EulerAngles& x) { return 0.5 * d4 * p(x) * std::cos(x.b); }, 4});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * 2.0 * std::cos(x.b) / std::sin(2 * x.theta);
       },
       3});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return 0.5 * iu * q(x) / std::tan(2 * x.beta) * std::sin(x.b) / std::sin(x.theta);
       },
       3});
  op.first_order.push_back(
      {[q, d2](const EulerAngles& x) {
         return 0.5 * d2 * q(x) * std::sin(x.b) / std::sin(x.theta);
       },
       2});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return -0.5 * iu * q(x) * std::sin(x.b) /
                (std::sin(x.theta) * std::sin(2 * x.beta));
       },
       1});
  op.y8_coupling = [p](const EulerAngles& x) {
    return 0.75 * p(x) * std::tan(x.theta) * std::cos(x.b);
  };
  op.guard_axes = {2, 6, 4};
  return op;
}

DiffOperator make_u_right(bool plus) {
  DiffOperator op;
  op.side = OpSide::Right;
  const double s = plus ? 1.0 : -1.0;  // exp(i s (c-a-3eta)), exp(i s (c+a+2gamma-3eta))
  const double d6 = plus ? 1.0 : -1.0;
  const double d4 = plus ? 1.0 : -1.0;
  const double d2 = plus ? -1.0 : 1.0;
  auto p = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.c - x.a - 3 * x.eta())));
  };
  auto q = [s](const EulerAngles& x) {
    return std::exp(iu * (s * (x.c + x.a + 2 * x.gamma - 3 * x.eta())));
  };
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * std::cos(x.b) / std::sin(2 * x.b) / std::tan(x.theta);
       },
       7});
  op.first_order.push_back(
      {[p, d6](const EulerAngles& x) {
         return 0.5 * d6 * p(x) * std::cos(x.b) / std::tan(x.theta);
       },
       6});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return -0.5 * iu * p(x) * std::cos(x.b) / std::tan(2 * x.b) / std::tan(x.theta);
       },
       5});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         double st = std::sin(x.theta);
         return -0.5 * iu * p(x) * (2.0 - st * st) / std::sin(2 * x.theta) * std::sin(x.b);
       },
       5});
  op.first_order.push_back(
      {[p, d4](const EulerAngles& x) { return 0.5 * d4 * p(x) * std::sin(x.b); }, 4});
  op.first_order.push_back(
      {[p](const EulerAngles& x) {
         return 0.5 * iu * p(x) * 2.0 * std::sin(x.b) / std::sin(2 * x.theta);
       },
       3});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return -0.5 * iu * q(x) / std::tan(2 * x.beta) * std::cos(x.b) / std::sin(x.theta);
       },
       3});
  op.first_order.push_back(
      {[q, d2](const EulerAngles& x) {
         return 0.5 * d2 * q(x) * std::cos(x.b) / std::sin(x.theta);
       },
       2});
  op.first_order.push_back(
      {[q](const EulerAngles& x) {
         return 0.5 * iu * q(x) * std::cos(x.b) /
                (std::sin(x.theta) * std::sin(2 * x.beta));
       },
       1});
  op.y8_coupling = [p](const EulerAngles& x) {
    return 0.75 * p(x) * std::tan(x.theta) * std::sin(x.b);
  };
  op.guard_axes = {2, 6, 4};
  return op;
}

}  // namespace

std::string ladder_kind_name(const LadderKind& k) {
  static const char* names[] = {"T+", "T-", "U+", "U-", "V+", "V-", "T3", "Y"};
  std::string s = names[static_cast<int>(k.name)];
  if (k.side == OpSide::Right) s += "^r";
  return s;
}

DiffOperator build_operator(const LadderKind& which) {
  DiffOperator op;
  switch (which.name) {
    case LadderName::T3: op = make_t3(which.side); break;
    case LadderName::Y: op = make_y(which.side); break;
    case LadderName::TPlus: op = make_t_pm(which.side, true); break;
    case LadderName::TMinus: op = make_t_pm(which.side, false); break;
    case LadderName::VPlus:
      op = which.side == OpSide::Left ? make_v_left(true) : make_v_right(true);
      break;
    case LadderName::VMinus:
      op = which.side == OpSide::Left ? make_v_left(false) : make_v_right(false);
      break;
    case LadderName::UPlus:
      op = which.side == OpSide::Left ? make_u_left(true) : make_u_right(true);
      break;
    case LadderName::UMinus:
      op = which.side == OpSide::Left ? make_u_left(false) : make_u_right(false);
      break;
  }
  op.name = ladder_kind_name(which);
  return op;
}

cplx fd_derivative(const ScalarField& f, const EulerAngles& at, int axis,
                   const FdSpec& fd) {
  auto stencil = [&](double h) {
    cplx fm2 = f(at.shifted(axis, -2 * h));
    cplx fm1 = f(at.shifted(axis, -h));
    cplx fp1 = f(at.shifted(axis, h));
    cplx fp2 = f(at.shifted(axis, 2 * h));
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
  };
  cplx dh = stencil(fd.step);
  cplx dh2 = stencil(fd.step / 2);
  // Two levels of a 4th-order formula: error drops to O(h^6).
  return dh2 + (dh2 - dh) / 15.0;
}

static void check_guards(const DiffOperator& op, const EulerAngles& at,
                         const FdSpec& fd) {
  for (int axis : op.guard_axes) {
    if (dist_to_half_pi_grid(at.axis(axis)) < fd.guard_factor * fd.step) {
      throw singular_point_error("apply: point too close to a coefficient pole (axis " +
                                 std::to_string(axis) + ") for " + op.name);
    }
  }
}

cplx apply(const DiffOperator& op, const ScalarField& f, const EulerAngles& at,
           const FdSpec& fd) {
  check_guards(op, at, fd);

  // Group coefficients by axis so each partial is differenced once.
  std::array<cplx, 9> axis_coeff{};
  std::array<bool, 9> axis_used{};
  for (const auto& term : op.first_order) {
    cplx c = term.coeff(at);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw singular_point_error("apply: singular coefficient in " + op.name);
    }
    axis_coeff[static_cast<size_t>(term.axis)] += c;
    axis_used[static_cast<size_t>(term.axis)] = true;
  }

  cplx result = 0;
  for (int axis = 1; axis <= 8; ++axis) {
    if (!axis_used[static_cast<size_t>(axis)]) continue;
    cplx d = fd_derivative(f, at, axis, fd);
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      throw evaluation_error("apply: non-finite field derivative in " + op.name);
    }
    result += axis_coeff[static_cast<size_t>(axis)] * d;
  }
  if (op.zeroth) result += op.zeroth(at) * f(at);
  if (op.y8_coupling) {
    static const DiffOperator y_left = build_operator({LadderName::Y, OpSide::Left});
    static const DiffOperator y_right = build_operator({LadderName::Y, OpSide::Right});
    const DiffOperator& y8 = op.side == OpSide::Left ? y_left : y_right;
    result += op.y8_coupling(at) * apply(y8, f, at, fd);
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw evaluation_error("apply: non-finite result in " + op.name);
  }
  return result;
}

ScalarField applied_field(const DiffOperator& op, const ScalarField& f,
                          const FdSpec& fd) {
  return ScalarField{
      [op, f, fd](const EulerAngles& x) { return apply(op, f, x, fd); },
      op.name + "(" + f.descriptor + ")"};
}

DiffOperator op_scaled(const DiffOperator& op, cplx factor) {
  DiffOperator out = op;
  for (auto& term : out.first_order) {
    auto base = term.coeff;
    term.coeff = [base, factor](const EulerAngles& x) { return factor * base(x); };
  }
  if (out.zeroth) {
    auto base = out.zeroth;
    out.zeroth = [base, factor](const EulerAngles& x) { return factor * base(x); };
  }
  if (out.y8_coupling) {
    auto base = out.y8_coupling;
    out.y8_coupling = [base, factor](const EulerAngles& x) { return factor * base(x); };
  }
  return out;
}

DiffOperator op_sum(const DiffOperator& a, const DiffOperator& b) {
  if (a.side != b.side && a.y8_coupling && b.y8_coupling) {
    throw std::invalid_argument("op_sum: mixed-side hypercharge couplings");
  }
  DiffOperator out = a;
  out.name = a.name + "+" + b.name;
  out.first_order.insert(out.first_order.end(), b.first_order.begin(),
                         b.first_order.end());
  if (b.zeroth) {
    if (!out.zeroth) {
      out.zeroth = b.zeroth;
    } else {
      auto za = out.zeroth, zb = b.zeroth;
      out.zeroth = [za, zb](const EulerAngles& x) { return za(x) + zb(x); };
    }
  }
  if (b.y8_coupling) {
    if (!out.y8_coupling) {
      out.y8_coupling = b.y8_coupling;
      out.side = b.side;
    } else {
      auto ya = out.y8_coupling, yb = b.y8_coupling;
      out.y8_coupling = [ya, yb](const EulerAngles& x) { return ya(x) + yb(x); };
    }
  }
  for (int g : b.guard_axes) {
    bool seen = false;
    for (int h : out.guard_axes) seen = seen || h == g;
    if (!seen) out.guard_axes.push_back(g);
  }
  return out;
}

double commutator_residual(const DiffOperator& op1, const DiffOperator& op2,
                           const DiffOperator& expected,
                           const std::vector<std::pair<ScalarField, EulerAngles>>& probes,
                           const FdSpec& fd) {
  double worst = 0.0;
  for (const auto& [f, x] : probes) {
    ScalarField f2 = applied_field(op2, f, fd);
    ScalarField f1 = applied_field(op1, f, fd);
    cplx val = apply(op1, f2, x, fd) - apply(op2, f1, x, fd) - apply(expected, f, x, fd);
    worst = std::max(worst, std::abs(val));
  }
  return worst;
}

}  // namespace su3
