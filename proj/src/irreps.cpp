#include "su3/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace su3 {

namespace {

constexpr double kFitTol = 1e-6;

double binomial(int n, int k) {
  double v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

bool is_diagonal(LadderName name) {
  return name == LadderName::T3 || name == LadderName::Y;
}

double snap_sixths(double v) {
  return std::round(v * 6.0) / 6.0;
}

// ----------------------------------------------------------------------
// Generic lowering BFS over vector-valued states.  A "vec state" is a list
// of PolyStates lowered entrywise; its inner product is the entry sum.  Row
// generation uses singleton vectors, column generation the whole row stack.

using VecState = std::vector<PolyState>;

VecState vec_ladder(const LadderKind& op, const VecState& v) {
  VecState out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = ladder_action(op, v[k]);
  return out;
}

bool vec_is_zero(const VecState& v) {
  for (const auto& p : v) {
    if (!p.is_zero()) return false;
  }
  return true;
}

cplx vec_inner(const VecState& a, const VecState& b, const QuadratureSpec& spec) {
  cplx s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += inner_product(a[k], b[k], spec);
  return s;
}

VecState vec_add(const VecState& a, const VecState& b, cplx bscale) {
  VecState out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k] * bscale;
  return out;
}

VecState vec_scale(const VecState& a, cplx s) {
  VecState out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] * s;
  return out;
}

// The label moved by the BFS: row weight of the first nonzero entry for row
// generation; column weight (shared by all entries) for column generation.
WeightLabel vec_weight(const VecState& v, OpSide side) {
  for (const auto& p : v) {
    if (!p.is_zero()) {
      return side == OpSide::Left ? p.row_weight() : p.col_weight();
    }
  }
  throw std::logic_error("vec_weight of zero state");
}

struct GeneratedBasis {
  std::vector<WeightLabel> weights;
  std::vector<int> two_t;
  std::vector<VecState> states;
};

// T^2 matrix elements within one weight space, in an orthogonal basis with
// common norm nrm2: (T3^2 + (T+T- + T-T+)/2).
Eigen::MatrixXd isospin_matrix(const std::vector<VecState>& basis, OpSide side,
                               double nrm2, const QuadratureSpec& spec) {
  const LadderKind tp{LadderName::TPlus, side}, tm{LadderName::TMinus, side};
  const LadderKind t3{LadderName::T3, side};
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) {
    VecState t3v = vec_ladder(t3, basis[static_cast<size_t>(j)]);
    VecState t3t3 = vec_ladder(t3, t3v);
    VecState tptm = vec_ladder(tp, vec_ladder(tm, basis[static_cast<size_t>(j)]));
    VecState tmtp = vec_ladder(tm, vec_ladder(tp, basis[static_cast<size_t>(j)]));
    // T3^2 v + 0.5*(T+T- + T-T+) v
    VecState c = vec_add(t3t3, vec_scale(vec_add(tptm, tmtp, 1.0), 0.5), 1.0);
    for (int i = 0; i < n; ++i) {
      cplx mij = vec_inner(basis[static_cast<size_t>(i)], c, spec) / nrm2;
      m(i, j) = mij.real();
    }
  }
  return m;
}

// Phase convention for generated states: the lexicographically first
// monomial (of the first nonzero entry) gets a positive real coefficient.
// The seed keeps its sign verbatim.
void make_leading_positive(VecState& v) {
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    double scale = p.max_abs_coeff();
    for (const auto& [m, c] : p.terms()) {
      if (std::abs(c) > 1e-6 * scale) {
        if (std::abs(c - std::abs(c)) > 1e-9 * std::abs(c)) {
          cplx u = std::abs(c) / c;
          for (auto& q : v) q = q * u;
        }
        return;
      }
    }
  }
}

GeneratedBasis generate_vec(const VecState& seed, OpSide side, int expected_count,
                            const QuadratureSpec& spec, bool fix_phases = true) {
  const std::array<LadderName, 3> lowering = {LadderName::TMinus, LadderName::UMinus,
                                              LadderName::VMinus};
  const double v0 = group_volume(spec);
  const double target_nrm2 = v0 * static_cast<double>(seed.size()) /
                             static_cast<double>(expected_count);

  std::map<std::pair<int, int>, std::vector<VecState>> by_weight;  // orthogonal, unnormalized
  std::deque<VecState> queue;

  auto weight_key = [&](const VecState& v) {
    WeightLabel w = vec_weight(v, side);
    return std::make_pair(w.two_t3, w.three_y);
  };

  auto try_insert = [&](const VecState& cand) {
    auto key = weight_key(cand);
    auto& bucket = by_weight[key];
    VecState resid = cand;
    for (const VecState& b : bucket) {
      cplx proj = vec_inner(b, resid, spec) / vec_inner(b, b, spec);
      resid = vec_add(resid, b, -proj);
    }
    double n2 = vec_inner(resid, resid, spec).real();
    double c2 = vec_inner(cand, cand, spec).real();
    if (n2 < 1e-8 * std::max(c2, target_nrm2)) return false;
    // Phase convention: positive overlap with the raw lowering image.
    cplx z = vec_inner(resid, cand, spec);
    resid = vec_scale(resid, std::conj(z) / std::abs(z));
    bucket.push_back(std::move(resid));
    return true;
  };

  try_insert(seed);
  queue.push_back(seed);

  while (!queue.empty()) {
    VecState cur = queue.front();
    queue.pop_front();
    for (LadderName name : lowering) {
      VecState low = vec_ladder({name, side}, cur);
      if (vec_is_zero(low)) continue;
      if (try_insert(low)) queue.push_back(low);
    }
  }

  GeneratedBasis out;
  int total = 0;
  for (auto& [key, bucket] : by_weight) total += static_cast<int>(bucket.size());
  if (total != expected_count) {
    throw generation_error("generate: got " + std::to_string(total) + " states, expected " +
                           std::to_string(expected_count));
  }

  // Resolve total isospin inside each weight space, normalize, and order the
  // output by BFS-reachable weight: descending y, then descending t3, then
  // descending t (the lowering order is deterministic, so this is too).
  struct Row {
    WeightLabel w;
    int two_t;
    VecState v;
  };
  std::vector<Row> rows;
  for (auto& [key, bucket] : by_weight) {
    WeightLabel w{key.first, key.second};
    // Current bucket norms are arbitrary; bring to a common norm first.
    for (auto& v : bucket) {
      double n2 = vec_inner(v, v, spec).real();
      v = vec_scale(v, std::sqrt(target_nrm2 / n2));
    }
    const int k = static_cast<int>(bucket.size());
    if (k == 1) {
      Eigen::MatrixXd m = isospin_matrix(bucket, side, target_nrm2, spec);
      int two_t = static_cast<int>(std::lround(std::sqrt(4.0 * m(0, 0) + 1.0) - 1.0));
      rows.push_back({w, two_t, bucket[0]});
      continue;
    }
    Eigen::MatrixXd m = isospin_matrix(bucket, side, target_nrm2, spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((m + m.transpose()) / 2.0);
    // Eigenvalues ascending = isospin ascending; emit descending t.  The
    // eigenvector sign is pinned by a positive component on the earliest
    // basis vector in the breadth-first order.
    for (int e = k - 1; e >= 0; --e) {
      Eigen::VectorXd vec = es.eigenvectors().col(e);
      for (int i = 0; i < k; ++i) {
        if (std::abs(vec(i)) > 1e-9) {
          if (vec(i) < 0) vec = -vec;
          break;
        }
      }
      VecState combo(bucket[0].size());
      for (int i = 0; i < k; ++i) {
        combo = vec_add(combo, bucket[static_cast<size_t>(i)], vec(i));
      }
      double tt = es.eigenvalues()(e);
      int two_t = static_cast<int>(std::lround(std::sqrt(4.0 * tt + 1.0) - 1.0));
      double n2 = vec_inner(combo, combo, spec).real();
      combo = vec_scale(combo, std::sqrt(target_nrm2 / n2));
      rows.push_back({w, two_t, combo});
    }
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(b.w.three_y, b.w.two_t3, b.two_t) <
           std::tie(a.w.three_y, a.w.two_t3, a.two_t);
  });

  if (fix_phases) {
    WeightLabel seed_w = vec_weight(seed, side);
    for (auto& row : rows) {
      if (row.w == seed_w) continue;  // the seed keeps its documented sign
      make_leading_positive(row.v);
    }
  }

  for (auto& row : rows) {
    out.weights.push_back(row.w);
    out.two_t.push_back(row.two_t);
    out.states.push_back(std::move(row.v));
  }
  return out;
}

}  // namespace

int dimension(const IrrepLabel& label) { return label.dim(); }

WeightLabel highest_weight_label(const IrrepLabel& label) {
  return {label.p, 2 * label.q + label.p};
}

PolyState highest_weight(const IrrepLabel& label) {
  const int corner3 = symbol_id(FundamentalRep::Three, 1, 1);
  const int corner3s = symbol_id(FundamentalRep::ThreeStar, 3, 3);
  Monomial m;
  for (int i = 0; i < label.p; ++i) m.push_back(corner3);
  for (int i = 0; i < label.q; ++i) m.push_back(corner3s);
  double sign = (label.p % 2 == 0) ? -1.0 : 1.0;  // (-1)^(p+1)
  return PolyState::monomial(std::move(m), sign);
}

ScalarField highest_weight_field(const IrrepLabel& label) {
  const int p = label.p, q = label.q;
  auto eval = [p, q](const EulerAngles& x) {
    const cplx A = std::exp(-kI * (x.gamma + x.a)) * std::cos(x.beta) * std::cos(x.b) *
                   std::cos(x.theta);
    const cplx B = std::exp(kI * (x.gamma + x.a)) * std::sin(x.beta) * std::sin(x.b);
    cplx sum = 0;
    for (int n = 0; n <= p; ++n) {
      double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
      sum += sgn * binomial(p, n) * std::pow(A, n) * std::pow(B, p - n);
    }
    sum *= std::pow(cplx(std::cos(x.theta), 0.0), q);
    return std::exp(-kI * ((2.0 * q + p) * x.eta() + p * x.alpha + p * x.c)) * sum;
  };
  return ScalarField{eval, "hw(" + std::to_string(p) + "," + std::to_string(q) + ")"};
}

// ----------------------------------------------------------------------
// Action table

int ActionTable::op_index(const LadderKind& op) {
  return static_cast<int>(op.name) * 2 + (op.side == OpSide::Left ? 0 : 1);
}

const ActionTable::Entry& ActionTable::entry(const LadderKind& op, int symbol) const {
  return entries_[static_cast<size_t>(op_index(op))][static_cast<size_t>(symbol)];
}

const ActionTable& ActionTable::instance() {
  static const ActionTable table;
  return table;
}

ActionTable::ActionTable() {
  // Probe set: fixed seed, all angles clear of the coefficient poles.
  std::mt19937_64 rng(0x5eedc0de);
  std::vector<EulerAngles> probes;
  for (int k = 0; k < 24; ++k) probes.push_back(random_angles(rng, 0.2));
  const FdSpec fd{};

  for (int name_i = 0; name_i < 8; ++name_i) {
    for (int side_i = 0; side_i < 2; ++side_i) {
      LadderKind op{static_cast<LadderName>(name_i),
                    side_i == 0 ? OpSide::Left : OpSide::Right};
      DiffOperator dop = build_operator(op);
      for (int sym = 0; sym < kNumSymbols; ++sym) {
        const SymbolInfo& info = symbol_info(sym);
        ScalarField f{[sym](const EulerAngles& x) { return eval_symbol(sym, x); },
                      info.name};
        std::vector<cplx> lhs(probes.size());
        double lhs_scale = 0;
        for (size_t k = 0; k < probes.size(); ++k) {
          lhs[k] = apply(dop, f, probes[k], fd);
          lhs_scale = std::max(lhs_scale, std::abs(lhs[k]));
        }

        Entry& e = entries_[static_cast<size_t>(op_index(op))][static_cast<size_t>(sym)];
        if (lhs_scale < kFitTol) {
          e = Entry{-1, 0.0};
          continue;
        }

        // Candidates: same rep, fixed column (left) or fixed row (right).
        double best_resid = 1e300;
        int best_target = -1;
        cplx best_coeff = 0;
        for (int cand = 0; cand < kNumSymbols; ++cand) {
          const SymbolInfo& ci = symbol_info(cand);
          if (ci.rep != info.rep) continue;
          if (op.side == OpSide::Left && ci.col != info.col) continue;
          if (op.side == OpSide::Right && ci.row != info.row) continue;
          cplx num = 0;
          double den = 0;
          std::vector<cplx> g(probes.size());
          for (size_t k = 0; k < probes.size(); ++k) {
            g[k] = eval_symbol(cand, probes[k]);
            num += std::conj(g[k]) * lhs[k];
            den += std::norm(g[k]);
          }
          cplx coeff = num / den;
          double resid = 0;
          for (size_t k = 0; k < probes.size(); ++k) {
            resid = std::max(resid, std::abs(lhs[k] - coeff * g[k]));
          }
          if (resid < best_resid) {
            best_resid = resid;
            best_target = cand;
            best_coeff = coeff;
          }
        }

        if (best_resid > kFitTol * std::max(1.0, lhs_scale)) {
          throw convention_error("action fit failed for " + dop.name + " on " + info.name +
                                 " (residual " + std::to_string(best_resid) + ")");
        }
        fit_residual_ = std::max(fit_residual_, best_resid);
        double snapped = snap_sixths(best_coeff.real());
        if (std::abs(best_coeff.imag()) > 1e-5 ||
            std::abs(best_coeff.real() - snapped) > 1e-5) {
          throw convention_error("action coefficient for " + dop.name + " on " + info.name +
                                 " is not an exact sixth");
        }
        e = Entry{best_target, snapped};
      }
    }
  }
}

PolyState ladder_action(const LadderKind& op, const PolyState& state) {
  const ActionTable& table = ActionTable::instance();
  PolyState out;
  for (const auto& [mono, coeff] : state.terms()) {
    if (is_diagonal(op.name)) {
      double eig = 0;
      for (int id : mono) {
        const auto& e = table.entry(op, id);
        eig += e.coeff;
      }
      out.add(mono, coeff * eig);
      continue;
    }
    for (size_t pos = 0; pos < mono.size(); ++pos) {
      const auto& e = table.entry(op, mono[pos]);
      if (e.target < 0) continue;
      Monomial m = mono;
      m[pos] = e.target;
      out.add(m, coeff * e.coeff);
    }
  }
  out.prune();
  return out;
}

double casimir2(const PolyState& state, const QuadratureSpec& spec) {
  auto L = [](LadderName n) { return LadderKind{n, OpSide::Left}; };
  PolyState c2;
  PolyState t3 = ladder_action(L(LadderName::T3), state);
  c2 = c2 + ladder_action(L(LadderName::T3), t3);
  PolyState y = ladder_action(L(LadderName::Y), state);
  c2 = c2 + ladder_action(L(LadderName::Y), y) * 0.75;
  const std::pair<LadderName, LadderName> pairs[] = {
      {LadderName::TPlus, LadderName::TMinus},
      {LadderName::UPlus, LadderName::UMinus},
      {LadderName::VPlus, LadderName::VMinus}};
  for (auto [up, dn] : pairs) {
    c2 = c2 + ladder_action(L(up), ladder_action(L(dn), state)) * 0.5;
    c2 = c2 + ladder_action(L(dn), ladder_action(L(up), state)) * 0.5;
  }
  cplx num = inner_product(state, c2, spec);
  cplx den = inner_product(state, state, spec);
  return (num / den).real();
}

std::vector<IrrepState> generate_irrep(const IrrepLabel& label, const QuadratureSpec& spec,
                                       int pq_bound) {
  if (label.p < 0 || label.q < 0) {
    throw std::invalid_argument("generate_irrep: negative label");
  }
  if (label.p + label.q > pq_bound) {
    throw std::invalid_argument("generate_irrep: label beyond configured bound");
  }
  VecState seed = {highest_weight(label)};
  GeneratedBasis basis = generate_vec(seed, OpSide::Left, label.dim(), spec);
  std::vector<IrrepState> out;
  for (size_t i = 0; i < basis.states.size(); ++i) {
    out.push_back({basis.two_t[i], basis.weights[i], basis.states[i][0]});
  }
  return out;
}

std::vector<std::pair<int, PolyState>> isospin_components(
    const std::vector<PolyState>& states, const QuadratureSpec& spec) {
  if (states.empty()) return {};
  WeightLabel w = states.front().row_weight();
  for (const auto& s : states) {
    if (!(s.row_weight() == w)) {
      throw std::invalid_argument("isospin_components: mixed weights");
    }
  }
  // Orthogonalize the inputs, then diagonalize T^2 on the span.
  std::vector<VecState> basis;
  for (const auto& s : states) {
    VecState cand = {s};
    VecState resid = cand;
    for (const auto& b : basis) {
      cplx proj = vec_inner(b, resid, spec) / vec_inner(b, b, spec);
      resid = vec_add(resid, b, -proj);
    }
    double n2 = vec_inner(resid, resid, spec).real();
    double c2 = vec_inner(cand, cand, spec).real();
    if (n2 > 1e-10 * c2) basis.push_back(resid);
  }
  double nrm2 = 1.0;
  for (auto& b : basis) {
    double n2 = vec_inner(b, b, spec).real();
    b = vec_scale(b, std::sqrt(1.0 / n2));
  }
  Eigen::MatrixXd m = isospin_matrix(basis, OpSide::Left, nrm2, spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((m + m.transpose()) / 2.0);
  std::vector<std::pair<int, PolyState>> out;
  const int k = static_cast<int>(basis.size());
  for (int e = k - 1; e >= 0; --e) {
    PolyState combo;
    for (int i = 0; i < k; ++i) {
      combo = combo + basis[static_cast<size_t>(i)][0] * es.eigenvectors()(i, e);
    }
    double tt = es.eigenvalues()(e);
    int two_t = static_cast<int>(std::lround(std::sqrt(4.0 * tt + 1.0) - 1.0));
    out.push_back({two_t, combo});
  }
  return out;
}

PolyState IrrepMatrix::character() const {
  PolyState chi;
  for (size_t r = 0; r < entry.size(); ++r) {
    for (size_t c = 0; c < entry[r].size(); ++c) {
      if (row_states[r].two_t == col_two_t[c] && row_states[r].weight == col_weights[c]) {
        chi = chi + entry[r][c];
      }
    }
  }
  return chi;
}

const IrrepMatrix& full_matrix(const IrrepLabel& label, const QuadratureSpec& spec) {
  static std::map<IrrepLabel, IrrepMatrix> cache;
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;

  IrrepMatrix m;
  m.label = label;
  m.row_states = generate_irrep(label, spec);
  const int d = label.dim();

  // Column spread: lower the whole generated column with the right
  // operators.  Column phases are then anchored so the matrix evaluates to
  // the identity at zero angles, which makes it an actual representation
  // matrix (diagonal sum = character).
  VecState seed(static_cast<size_t>(d));
  for (int r = 0; r < d; ++r) seed[static_cast<size_t>(r)] = m.row_states[static_cast<size_t>(r)].state;
  GeneratedBasis cols = generate_vec(seed, OpSide::Right, d, spec, /*fix_phases=*/false);

  m.col_two_t = cols.two_t;
  m.col_weights = cols.weights;
  m.entry.assign(static_cast<size_t>(d), std::vector<PolyState>(static_cast<size_t>(d)));
  const EulerAngles origin{};
  for (int c = 0; c < d; ++c) {
    int rmatch = -1;
    for (int r = 0; r < d; ++r) {
      if (m.row_states[static_cast<size_t>(r)].two_t == cols.two_t[static_cast<size_t>(c)] &&
          m.row_states[static_cast<size_t>(r)].weight == cols.weights[static_cast<size_t>(c)]) {
        rmatch = r;
      }
    }
    if (rmatch < 0) throw generation_error("full_matrix: unmatched column labels");
    cplx diag = cols.states[static_cast<size_t>(c)][static_cast<size_t>(rmatch)].eval(origin);
    if (std::abs(std::abs(diag) - 1.0) > 1e-8) {
      throw generation_error("full_matrix: column not unimodular at the origin");
    }
    for (int r = 0; r < d; ++r) {
      m.entry[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          cols.states[static_cast<size_t>(c)][static_cast<size_t>(r)] * (1.0 / diag);
    }
  }
  return cache.emplace(label, std::move(m)).first->second;
}

}  // namespace su3
