#include "su3/verify.hpp"

#include <algorithm>
#include <cmath>

#include "su3/adjoint.hpp"

namespace su3 {

namespace {

void add_check(SuiteReport& rep, const RunConfig& cfg, const std::string& name,
               double residual, double default_tol) {
  double tol = cfg.tol_override > 0 ? cfg.tol_override : default_tol;
  rep.checks.push_back({name, residual, tol, residual < tol});
}

QuadratureSpec quad_of(const RunConfig& cfg) {
  QuadratureSpec spec;
  spec.gauss_order = cfg.gauss_order;
  spec.mc_samples = cfg.mc_samples;
  spec.seed = cfg.seed;
  return spec;
}

ScalarField symbol_field(int id) {
  return ScalarField{[id](const EulerAngles& x) { return eval_symbol(id, x); },
                     symbol_info(id).name};
}

// Function-level proportionality: monomial coefficient vectors are not
// unique (products of matrix elements satisfy linear relations), so the
// distance from span{b} is measured with the invariant inner product.
double haar_proportional_residual(const PolyState& a, const PolyState& b,
                                  const QuadratureSpec& spec) {
  cplx scale = inner_product(b, a, spec) / inner_product(b, b, spec);
  PolyState diff = a - b * scale;
  double r2 = inner_product(diff, diff, spec).real();
  double a2 = inner_product(a, a, spec).real();
  return std::sqrt(std::max(r2, 0.0) / a2);
}

// ----------------------------------------------------------------------

SuiteReport suite_fundamental(const RunConfig& cfg) {
  SuiteReport rep{"fundamental", cfg.seed, {}};
  std::mt19937_64 rng(cfg.seed);
  double cross3 = 0, cross3s = 0, unit3 = 0, unit3s = 0, det3 = 0, det3s = 0;
  for (int k = 0; k < 1000; ++k) {
    EulerAngles x = random_angles(rng);
    Mat3 p3 = product_rep(x, FundamentalRep::Three);
    Mat3 c3 = closed_rep(x, FundamentalRep::Three);
    Mat3 p3s = product_rep(x, FundamentalRep::ThreeStar);
    Mat3 c3s = closed_rep(x, FundamentalRep::ThreeStar);
    cross3 = std::max(cross3, max_abs_diff(p3, c3));
    cross3s = std::max(cross3s, max_abs_diff(p3s, c3s));
    unit3 = std::max(unit3, max_abs_diff(c3.adjoint() * c3, Mat3::Identity()));
    unit3s = std::max(unit3s, max_abs_diff(c3s.adjoint() * c3s, Mat3::Identity()));
    det3 = std::max(det3, std::abs(c3.determinant() - cplx(1, 0)));
    det3s = std::max(det3s, std::abs(c3s.determinant() - cplx(1, 0)));
  }
  add_check(rep, cfg, "closed_vs_product_3", cross3, 1e-12);
  add_check(rep, cfg, "closed_vs_product_3star", cross3s, 1e-12);
  add_check(rep, cfg, "unitarity_3", unit3, 1e-12);
  add_check(rep, cfg, "unitarity_3star", unit3s, 1e-12);
  add_check(rep, cfg, "det_3", det3, 1e-12);
  add_check(rep, cfg, "det_3star", det3s, 1e-12);
  return rep;
}

SuiteReport suite_adjoint(const RunConfig& cfg) {
  SuiteReport rep{"adjoint", cfg.seed, {}};
  std::mt19937_64 rng(cfg.seed);
  double cross = 0, orth = 0, det = 0;
  for (int k = 0; k < 500; ++k) {
    EulerAngles x = random_angles(rng);
    Mat8r rc = adjoint_closed(x);
    Mat8r ro = adjoint_from_conjugation(x);
    cross = std::max(cross, (rc - ro).cwiseAbs().maxCoeff());
    orth = std::max(orth, (rc.transpose() * rc - Mat8r::Identity()).cwiseAbs().maxCoeff());
    det = std::max(det, std::abs(rc.determinant() - 1.0));
  }
  add_check(rep, cfg, "closed_vs_conjugation", cross, 1e-10);
  add_check(rep, cfg, "orthogonality", orth, 1e-10);
  add_check(rep, cfg, "det_one", det, 1e-10);
  return rep;
}

SuiteReport suite_diffops(const RunConfig& cfg) {
  SuiteReport rep{"diffops", cfg.seed, {}};
  std::mt19937_64 rng(cfg.seed);
  const FdSpec fd{};
  std::vector<EulerAngles> pts;
  for (int k = 0; k < 6; ++k) pts.push_back(random_angles(rng, 0.2));

  // Eigenvalue checks on all 18 closed-form elements: left operators read the
  // row labels, right operators read the column labels (sign pinned +).
  auto eig_residual = [&](OpSide side) {
    DiffOperator t3 = build_operator({LadderName::T3, side});
    DiffOperator y = build_operator({LadderName::Y, side});
    double worst = 0;
    for (int id = 0; id < kNumSymbols; ++id) {
      const SymbolInfo& info = symbol_info(id);
      WeightLabel w = side == OpSide::Left ? info.row_w : info.col_w;
      ScalarField f = symbol_field(id);
      for (const auto& x : pts) {
        cplx fx = f(x);
        worst = std::max(worst, std::abs(apply(t3, f, x, fd) - (w.two_t3 / 2.0) * fx));
        worst = std::max(worst, std::abs(apply(y, f, x, fd) - (w.three_y / 3.0) * fx));
      }
    }
    return worst;
  };
  add_check(rep, cfg, "t3_y_eigen_left", eig_residual(OpSide::Left), 1e-6);
  add_check(rep, cfg, "t3_y_eigen_right", eig_residual(OpSide::Right), 1e-6);

  // Probe set for the commutator relations: 20 (field, point) draws.
  auto probe_set = [&](int count) {
    std::vector<std::pair<ScalarField, EulerAngles>> probes;
    std::uniform_int_distribution<int> pick(0, kNumSymbols - 1);
    for (int k = 0; k < count; ++k) {
      probes.push_back({symbol_field(pick(rng)), random_angles(rng, 0.2)});
    }
    return probes;
  };

  auto su2_residual = [&](OpSide side) {
    auto probes = probe_set(20);
    auto L = [side](LadderName n) { return build_operator({n, side}); };
    DiffOperator t3x2 = op_scaled(L(LadderName::T3), 2.0);
    double worst = commutator_residual(L(LadderName::TPlus), L(LadderName::TMinus), t3x2,
                                       probes, fd);
    DiffOperator vexp = op_sum(op_scaled(L(LadderName::Y), 1.5), L(LadderName::T3));
    worst = std::max(worst, commutator_residual(L(LadderName::VPlus), L(LadderName::VMinus),
                                                vexp, probes, fd));
    DiffOperator uexp = op_sum(op_scaled(L(LadderName::Y), 1.5),
                               op_scaled(L(LadderName::T3), -1.0));
    worst = std::max(worst, commutator_residual(L(LadderName::UPlus), L(LadderName::UMinus),
                                                uexp, probes, fd));
    DiffOperator tp = L(LadderName::TPlus);
    worst = std::max(worst, commutator_residual(L(LadderName::T3), L(LadderName::TPlus), tp,
                                                probes, fd));
    return worst;
  };
  add_check(rep, cfg, "su2_commutators_left", su2_residual(OpSide::Left), 1e-5);
  add_check(rep, cfg, "su2_commutators_right", su2_residual(OpSide::Right), 1e-5);

  // Sign conventions: [L1, L2] = +2i L3 for the left family, -2i for the
  // right, with L3 = 2 T3.  The plus combination is L1 + i L2 on the left
  // and L1 - i L2 on the right, so L2's reconstruction from T+- flips.
  auto sign_residual = [&](OpSide side, double expected_sign) {
    auto probes = probe_set(10);
    auto L = [side](LadderName n) { return build_operator({n, side}); };
    DiffOperator l1 = op_sum(L(LadderName::TMinus), L(LadderName::TPlus));
    cplx iplus = side == OpSide::Left ? cplx(0, -1) : cplx(0, 1);
    DiffOperator l2 =
        op_sum(op_scaled(L(LadderName::TPlus), iplus), op_scaled(L(LadderName::TMinus), -iplus));
    DiffOperator expect = op_scaled(L(LadderName::T3), cplx(0, 4.0 * expected_sign));
    return commutator_residual(l1, l2, expect, probes, fd);
  };
  add_check(rep, cfg, "sign_convention_left_plus2i", sign_residual(OpSide::Left, 1.0), 1e-5);
  add_check(rep, cfg, "sign_convention_right_minus2i", sign_residual(OpSide::Right, -1.0),
            1e-5);

  // Left and right actions commute.
  {
    auto probes = probe_set(10);
    DiffOperator zero;
    zero.first_order.push_back({[](const EulerAngles&) { return cplx(0, 0); }, 1});
    double worst = commutator_residual(build_operator({LadderName::T3, OpSide::Left}),
                                       build_operator({LadderName::T3, OpSide::Right}), zero,
                                       probes, fd);
    worst = std::max(worst,
                     commutator_residual(build_operator({LadderName::TPlus, OpSide::Left}),
                                         build_operator({LadderName::TMinus, OpSide::Right}),
                                         zero, probes, fd));
    add_check(rep, cfg, "left_right_commute", worst, 1e-5);
  }

  // Ladder constancy: T- sends the top-row elements onto the middle-row ones
  // with one angle-independent constant.
  {
    DiffOperator tm = build_operator({LadderName::TMinus, OpSide::Left});
    double worst = 0;
    for (int col = 1; col <= 3; ++col) {
      int src = symbol_id(FundamentalRep::Three, 1, col);
      int dst = symbol_id(FundamentalRep::Three, 2, col);
      ScalarField f = symbol_field(src), g = symbol_field(dst);
      std::vector<cplx> ratios;
      for (int k = 0; k < 20; ++k) {
        EulerAngles x = random_angles(rng, 0.2);
        ratios.push_back(apply(tm, f, x, fd) / g(x));
      }
      for (const cplx& r : ratios) worst = std::max(worst, std::abs(r - ratios.front()));
    }
    add_check(rep, cfg, "ladder_constancy", worst, 1e-5);
  }
  return rep;
}

SuiteReport suite_irreps(const RunConfig& cfg) {
  SuiteReport rep{"irreps", cfg.seed, {}};
  QuadratureSpec spec = quad_of(cfg);
  std::mt19937_64 rng(cfg.seed);
  const FdSpec fd{};

  // Highest-weight annihilation under all six raising conditions.
  const std::array<LadderKind, 6> raising = {
      LadderKind{LadderName::TPlus, OpSide::Left},
      LadderKind{LadderName::UPlus, OpSide::Left},
      LadderKind{LadderName::VPlus, OpSide::Left},
      LadderKind{LadderName::TPlus, OpSide::Right},
      LadderKind{LadderName::UPlus, OpSide::Right},
      LadderKind{LadderName::VPlus, OpSide::Right}};
  const std::array<IrrepLabel, 5> hw_cases = {IrrepLabel{1, 0}, IrrepLabel{0, 1},
                                              IrrepLabel{1, 1}, IrrepLabel{2, 0},
                                              IrrepLabel{2, 1}};
  double hw_worst = 0;
  for (const auto& label : hw_cases) {
    ScalarField f = highest_weight_field(label);
    for (const auto& op : raising) {
      DiffOperator dop = build_operator(op);
      for (int k = 0; k < 4; ++k) {
        EulerAngles x = random_angles(rng, 0.2);
        hw_worst = std::max(hw_worst, std::abs(apply(dop, f, x, fd)));
      }
    }
  }
  add_check(rep, cfg, "highest_weight_annihilation", hw_worst, 1e-5);

  // Algebraic and closed-form views of the highest weight agree pointwise.
  double view_worst = 0;
  for (const auto& label : hw_cases) {
    PolyState hw = highest_weight(label);
    ScalarField f = highest_weight_field(label);
    for (int k = 0; k < 6; ++k) {
      EulerAngles x = random_angles(rng);
      view_worst = std::max(view_worst, std::abs(hw.eval(x) - f(x)));
    }
  }
  add_check(rep, cfg, "highest_weight_views_agree", view_worst, 1e-12);

  // Octet reconstruction.
  auto octet = generate_irrep({1, 1}, spec);
  add_check(rep, cfg, "octet_count", std::abs(static_cast<double>(octet.size()) - 8.0), 0.5);

  auto sym = [](FundamentalRep r, int row, int col) { return symbol_id(r, row, col); };
  auto mono2 = [&](int ra, int ca, int rb, int cb) {
    return PolyState::monomial(
        {sym(FundamentalRep::Three, ra, ca), sym(FundamentalRep::ThreeStar, rb, cb)});
  };
  struct Hex {
    WeightLabel w;
    PolyState expect;
  };
  const std::vector<Hex> hexagon = {
      {{1, 3}, mono2(1, 1, 3, 3)},   // highest weight
      {{2, 0}, mono2(1, 1, 2, 3)},   // one U-lowering
      {{1, -3}, mono2(3, 1, 2, 3)},  // then V
      {{-1, -3}, mono2(3, 1, 1, 3)}, // then T
      {{-2, 0}, mono2(2, 1, 1, 3)},  // one U-raising from there
      {{-1, 3}, mono2(2, 1, 3, 3)}}; // and one V-raising
  double hex_worst = 0;
  for (const auto& h : hexagon) {
    bool found = false;
    for (const auto& s : octet) {
      if (s.weight == h.w) {
        PolyState diff = s.state - h.expect;
        hex_worst = std::max(hex_worst, diff.max_abs_coeff());
        found = true;
      }
    }
    if (!found) hex_worst = std::max(hex_worst, 1.0);
  }
  add_check(rep, cfg, "octet_hexagon_exact", hex_worst, 1e-12);

  // Center split: triplet tracks the double-lowering chain, singlet is the
  // monomial difference and is annihilated by T+- pointwise.
  PolyState m1 = mono2(2, 1, 2, 3), m2 = mono2(1, 1, 1, 3);
  const PolyState* center_t1 = nullptr;
  const PolyState* center_t0 = nullptr;
  for (const auto& s : octet) {
    if (s.weight == WeightLabel{0, 0}) {
      if (s.two_t == 2) center_t1 = &s.state;
      if (s.two_t == 0) center_t0 = &s.state;
    }
  }
  // Norm-relative distance of each center state from the expected span; the
  // quadrature floor of this square-root metric sits near 1e-8.
  double center_worst = 1.0;
  if (center_t1 && center_t0) {
    center_worst = haar_proportional_residual(*center_t1, m1 + m2, spec);
    center_worst =
        std::max(center_worst, haar_proportional_residual(*center_t0, m1 - m2, spec));
  }
  add_check(rep, cfg, "octet_center_split", center_worst, 1e-7);

  double singlet_fd = 1.0;
  if (center_t0) {
    ScalarField f = center_t0->field("octet singlet");
    DiffOperator tp = build_operator({LadderName::TPlus, OpSide::Left});
    DiffOperator tm = build_operator({LadderName::TMinus, OpSide::Left});
    singlet_fd = 0;
    for (int k = 0; k < 5; ++k) {
      EulerAngles x = random_angles(rng, 0.2);
      singlet_fd = std::max(singlet_fd, std::abs(apply(tp, f, x, fd)));
      singlet_fd = std::max(singlet_fd, std::abs(apply(tm, f, x, fd)));
    }
  }
  add_check(rep, cfg, "octet_singlet_annihilated", singlet_fd, 1e-5);

  // Ladder algebra against the differential application on octet states.
  {
    const std::array<LadderKind, 6> ops = {
        LadderKind{LadderName::TMinus, OpSide::Left},
        LadderKind{LadderName::UMinus, OpSide::Left},
        LadderKind{LadderName::VMinus, OpSide::Left},
        LadderKind{LadderName::TPlus, OpSide::Left},
        LadderKind{LadderName::T3, OpSide::Left},
        LadderKind{LadderName::Y, OpSide::Right}};
    double worst = 0;
    for (const auto& s : octet) {
      ScalarField f = s.state.field();
      for (const auto& op : ops) {
        PolyState alg = ladder_action(op, s.state);
        DiffOperator dop = build_operator(op);
        for (int k = 0; k < 2; ++k) {
          EulerAngles x = random_angles(rng, 0.2);
          worst = std::max(worst, std::abs(apply(dop, f, x, fd) - alg.eval(x)));
        }
      }
    }
    add_check(rep, cfg, "ladder_algebra_vs_fd", worst, 1e-5);
  }

  // Weight labels are algebraically exact under T3 and Y.
  {
    double worst = 0;
    for (const auto& s : octet) {
      PolyState t3s = ladder_action({LadderName::T3, OpSide::Left}, s.state);
      PolyState ys = ladder_action({LadderName::Y, OpSide::Left}, s.state);
      PolyState dt = t3s - s.state * (s.weight.two_t3 / 2.0);
      PolyState dy = ys - s.state * (s.weight.three_y / 3.0);
      worst = std::max(worst, std::max(dt.max_abs_coeff(), dy.max_abs_coeff()));
    }
    add_check(rep, cfg, "weight_label_exactness", worst, 1e-12);
  }

  // Quadratic Casimir is constant across each irrep.
  {
    double worst = 0;
    for (const IrrepLabel label : {IrrepLabel{1, 1}, IrrepLabel{2, 0}}) {
      auto states = generate_irrep(label, spec);
      double c0 = casimir2(states.front().state, spec);
      for (const auto& s : states) {
        worst = std::max(worst, std::abs(casimir2(s.state, spec) - c0));
      }
    }
    add_check(rep, cfg, "casimir_constancy", worst, 1e-8);
  }

  // Norms and orthogonality of the generated octet.
  {
    const double v0 = group_volume(spec);
    double worst = 0;
    for (size_t i = 0; i < octet.size(); ++i) {
      for (size_t j = i; j < octet.size(); ++j) {
        cplx ip = inner_product(octet[i].state, octet[j].state, spec);
        if (i == j) {
          worst = std::max(worst, std::abs(ip - v0 / 8.0) / (v0 / 8.0));
        } else {
          worst = std::max(worst, std::abs(ip) / (v0 / 8.0));
        }
      }
    }
    add_check(rep, cfg, "octet_gram", worst, 1e-8);
  }

  return rep;
}

SuiteReport suite_haar(const RunConfig& cfg) {
  SuiteReport rep{"haar", cfg.seed, {}};
  QuadratureSpec spec = quad_of(cfg);

  const double v0 = group_volume(spec);
  add_check(rep, cfg, "volume_separable",
            std::abs(v0 - group_volume_exact()) / group_volume_exact(), 1e-12);

  {
    QuadratureSpec dbl = spec;
    dbl.gauss_order *= 2;
    add_check(rep, cfg, "volume_gauss_order_stable",
              std::abs(group_volume(dbl) - v0) / v0, 1e-12);
  }

  {
    QuadratureSpec mc = spec;
    mc.mode = QuadratureSpec::Mode::MonteCarlo;
    McEstimate est = group_volume_mc(mc);
    double pull = std::abs(est.value.real() - group_volume_exact()) /
                  std::max(est.stderr_abs, 1e-300);
    add_check(rep, cfg, "volume_mc_3sigma", pull, 3.0);
  }

  // Gram matrix across the trivial, both fundamentals, and the octet, over
  // every matrix element of each.
  {
    std::vector<std::pair<PolyState, int>> states;
    states.push_back({PolyState::one(), 1});
    for (const IrrepLabel label : {IrrepLabel{1, 0}, IrrepLabel{0, 1}, IrrepLabel{1, 1}}) {
      const IrrepMatrix& m = full_matrix(label, spec);
      for (const auto& row : m.entry) {
        for (const auto& e : row) states.push_back({e, label.dim()});
      }
    }
    OrthReport orth = orthogonality_scan(states, spec);
    add_check(rep, cfg, "gram_offdiag", orth.gram_max_offdiag, 1e-8);
    add_check(rep, cfg, "gram_diag_err", orth.gram_max_diag_err, 1e-8);
  }

  // Separable and Monte Carlo agree within sampling error.
  {
    QuadratureSpec mc = spec;
    mc.mode = QuadratureSpec::Mode::MonteCarlo;
    int e11 = symbol_id(FundamentalRep::Three, 1, 1);
    int e31 = symbol_id(FundamentalRep::Three, 3, 1);
    PolyState f = PolyState::monomial({e11});
    PolyState g = PolyState::monomial({e31});
    cplx exact_ff = inner_product(f, f, spec);
    cplx exact_fg = inner_product(f, g, spec);
    McEstimate mff = inner_product_mc(f.field(), f.field(), mc);
    McEstimate mfg = inner_product_mc(f.field(), g.field(), mc);
    double pull = std::abs(mff.value - exact_ff) / std::max(mff.stderr_abs, 1e-300);
    pull = std::max(pull, std::abs(mfg.value - exact_fg) / std::max(mfg.stderr_abs, 1e-300));
    add_check(rep, cfg, "separable_vs_mc_3sigma", pull, 3.0);
  }

  // Translation invariance: inner products are unchanged when both entries
  // are pre-composed with a fixed group element (realized as a matrix
  // product on the closed-form elements).
  {
    std::mt19937_64 rng(cfg.seed + 17);
    EulerAngles g0 = random_angles(rng);
    Mat3 d0 = closed_rep(g0, FundamentalRep::Three);
    auto translated = [&](int row, int col) {
      PolyState out;
      for (int k = 1; k <= 3; ++k) {
        out = out + PolyState::monomial({symbol_id(FundamentalRep::Three, k, col)},
                                        d0(row - 1, k - 1));
      }
      return out;
    };
    double worst = 0;
    const double scale = group_volume_exact() / 3.0;
    for (int r1 = 1; r1 <= 2; ++r1) {
      for (int r2 = 1; r2 <= 3; ++r2) {
        PolyState f = PolyState::monomial({symbol_id(FundamentalRep::Three, r1, 1)});
        PolyState g = PolyState::monomial({symbol_id(FundamentalRep::Three, r2, 1)});
        cplx base = inner_product(f, g, spec);
        cplx moved = inner_product(translated(r1, 1), translated(r2, 1), spec);
        worst = std::max(worst, std::abs(moved - base) / scale);
      }
    }
    add_check(rep, cfg, "translation_invariance", worst, 1e-10);
  }

  return rep;
}

SuiteReport suite_cg(const RunConfig& cfg) {
  SuiteReport rep{"cg", cfg.seed, {}};
  QuadratureSpec spec = quad_of(cfg);

  const IrrepLabel three{1, 0}, threestar{0, 1}, octet{1, 1}, singlet{0, 0}, six{2, 0};

  // 3 x 3* = 8 + 1.
  {
    auto content = tensor_decompose(three, threestar, spec);
    bool ok = content.size() == 2 && content[0].first == octet && content[0].second == 1 &&
              content[1].first == singlet && content[1].second == 1;
    add_check(rep, cfg, "decompose_3_x_3star", ok ? 0.0 : 1.0, 0.5);
  }
  // 3 x 3 = 6 + 3*.
  {
    auto content = tensor_decompose(three, three, spec);
    bool ok = content.size() == 2 && content[0].first == six && content[0].second == 1 &&
              content[1].first == threestar && content[1].second == 1;
    add_check(rep, cfg, "decompose_3_x_3", ok ? 0.0 : 1.0, 0.5);
  }
  // 1 x r = r.
  {
    auto content = tensor_decompose(singlet, octet, spec);
    bool ok = content.size() == 1 && content[0].first == octet && content[0].second == 1;
    add_check(rep, cfg, "decompose_1_x_r", ok ? 0.0 : 1.0, 0.5);
  }

  // Stacked coefficient matrices are orthogonal.
  auto stacked_orth = [&](const IrrepLabel& r1, const IrrepLabel& r2) {
    auto content = tensor_decompose(r1, r2, spec);
    const int dp = r1.dim() * r2.dim();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(dp, dp);
    int row = 0;
    for (const auto& [target, mult] : content) {
      for (int m = 0; m < mult; ++m) {
        CouplingTable t = wcg_coefficients(r1, r2, target, m, spec);
        for (const auto& st : t.states) {
          for (const auto& [i, j, c] : st.coeffs) q(row, i * r2.dim() + j) = c;
          ++row;
        }
      }
    }
    if (row != dp) return 1.0;
    return (q * q.transpose() - Eigen::MatrixXd::Identity(dp, dp)).cwiseAbs().maxCoeff();
  };
  add_check(rep, cfg, "stacked_orthogonality_3_x_3star", stacked_orth(three, threestar), 1e-8);
  add_check(rep, cfg, "stacked_orthogonality_3_x_3", stacked_orth(three, three), 1e-8);

  // Projection coefficients against the algebraic oracle.
  {
    double worst = 0;
    for (auto [r1, r2, t] :
         {std::tuple{three, threestar, octet}, std::tuple{three, threestar, singlet},
          std::tuple{three, three, six}, std::tuple{three, three, threestar}}) {
      CouplingTable haar = wcg_coefficients(r1, r2, t, 0, spec);
      CouplingTable oracle = casimir_oracle_coefficients(r1, r2, t, 0, spec);
      worst = std::max(worst, table_distance_up_to_sign(haar, oracle));
    }
    add_check(rep, cfg, "haar_vs_casimir_oracle", worst, 1e-8);
  }

  // Equivariance: lowering a coupled state stays inside the coupled family.
  {
    CouplingTable t = wcg_coefficients(three, threestar, octet, 0, spec);
    std::vector<PolyState> coupled;
    for (const auto& st : t.states) {
      PolyState c;
      for (const auto& [i, j, w] : st.coeffs) {
        c = c + t.basis1[static_cast<size_t>(i)].state *
                    t.basis2[static_cast<size_t>(j)].state * w;
      }
      coupled.push_back(c);
    }
    double worst = 0;
    for (const auto& c : coupled) {
      PolyState low = ladder_action({LadderName::TMinus, OpSide::Left}, c);
      if (low.is_zero()) continue;
      double n2 = inner_product(low, low, spec).real();
      PolyState resid = low;
      for (const auto& other : coupled) {
        cplx proj = inner_product(other, low, spec) / inner_product(other, other, spec);
        resid = resid - other * proj;
      }
      double r2 = inner_product(resid, resid, spec).real();
      worst = std::max(worst, std::sqrt(std::max(r2, 0.0) / n2));
    }
    add_check(rep, cfg, "equivariance", worst, 1e-8);
  }

  return rep;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fundamental", "adjoint", "diffops",
                                                 "irreps",      "haar",    "cg"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "fundamental") return suite_fundamental(cfg);
  if (name == "adjoint") return suite_adjoint(cfg);
  if (name == "diffops") return suite_diffops(cfg);
  if (name == "irreps") return suite_irreps(cfg);
  if (name == "haar") return suite_haar(cfg);
  if (name == "cg") return suite_cg(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const RunConfig& cfg) {
  std::vector<SuiteReport> reps;
  for (const auto& name : suite_names()) reps.push_back(run_suite(name, cfg));
  return reps;
}

std::string report_to_json(const SuiteReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.key("suite").value(rep.suite);
  w.key("seed").value(static_cast<long long>(rep.seed));
  w.key("pass").value(rep.pass());
  w.key("checks").begin_array();
  for (const auto& c : rep.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("residual").value(c.residual);
    w.key("tolerance").value(c.tolerance);
    w.key("pass").value(c.pass);
    w.end_object();
  }
  w.end_array().end_object();
  return w.str();
}

std::string reports_to_json(const std::vector<SuiteReport>& reps) {
  bool all = true;
  for (const auto& r : reps) all = all && r.pass();
  std::string out = "{\"pass\":";
  out += all ? "true" : "false";
  out += ",\"suites\":[";
  for (size_t i = 0; i < reps.size(); ++i) {
    if (i) out += ",";
    out += report_to_json(reps[i]);
  }
  out += "]}";
  return out;
}

}  // namespace su3
