#include "su3/cg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace su3 {

namespace {

double casimir2_value(const IrrepLabel& l) {
  return (l.p * l.p + l.q * l.q + l.p * l.q) / 3.0 + l.p + l.q;
}

std::vector<IrrepLabel> candidate_targets(const IrrepLabel& r1, const IrrepLabel& r2) {
  std::vector<IrrepLabel> out;
  const int dmax = r1.dim() * r2.dim();
  const int pq_max = r1.p + r1.q + r2.p + r2.q;
  for (int p = 0; p <= pq_max; ++p) {
    for (int q = 0; p + q <= pq_max; ++q) {
      IrrepLabel l{p, q};
      if (l.dim() <= dmax) out.push_back(l);
    }
  }
  return out;
}

// --------------------------------------------------------------------
// Algebraic representation matrices of one generated irrep, extracted from
// the ladder action by expanding in the monomial-coefficient space.

struct RepMatrices {
  IrrepLabel label;
  std::vector<IrrepState> basis;
  std::map<int, Eigen::MatrixXcd> op;  // key: op index over the 8 left names

  static int op_key(LadderName n) { return static_cast<int>(n); }
};

Eigen::MatrixXcd expand_in_basis(const std::vector<IrrepState>& basis,
                                 const std::vector<PolyState>& images) {
  // Collect the monomial support.
  std::map<Monomial, int> index;
  auto note = [&](const PolyState& p) {
    for (const auto& [m, c] : p.terms()) {
      if (!index.count(m)) {
        int next = static_cast<int>(index.size());
        index[m] = next;
      }
    }
  };
  for (const auto& s : basis) note(s.state);
  for (const auto& img : images) note(img);

  const int rows = static_cast<int>(index.size());
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(rows, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& [m, c] : basis[static_cast<size_t>(j)].state.terms()) {
      B(index[m], j) = c;
    }
  }
  Eigen::MatrixXcd Y = Eigen::MatrixXcd::Zero(rows, static_cast<int>(images.size()));
  for (int j = 0; j < static_cast<int>(images.size()); ++j) {
    for (const auto& [m, c] : images[static_cast<size_t>(j)].terms()) {
      Y(index[m], j) = c;
    }
  }
  // Least squares: the images lie in the span, so the residual is roundoff.
  return B.colPivHouseholderQr().solve(Y);
}

RepMatrices rep_matrices(const IrrepLabel& label, const QuadratureSpec& spec) {
  RepMatrices rm;
  rm.label = label;
  rm.basis = generate_irrep(label, spec);
  const std::array<LadderName, 8> names = {LadderName::TPlus,  LadderName::TMinus,
                                           LadderName::UPlus,  LadderName::UMinus,
                                           LadderName::VPlus,  LadderName::VMinus,
                                           LadderName::T3,     LadderName::Y};
  for (LadderName n : names) {
    std::vector<PolyState> images;
    images.reserve(rm.basis.size());
    for (const auto& s : rm.basis) {
      images.push_back(ladder_action({n, OpSide::Left}, s.state));
    }
    rm.op[RepMatrices::op_key(n)] = expand_in_basis(rm.basis, images);
  }
  return rm;
}

Eigen::MatrixXcd kron_sum(const Eigen::MatrixXcd& a, int db, const Eigen::MatrixXcd& b,
                          int da) {
  // a acting on factor 1 plus b acting on factor 2, basis index i*db + j.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      if (a(i, k) != cplx(0, 0)) {
        for (int j = 0; j < db; ++j) out(i * db + j, k * db + j) += a(i, k);
      }
    }
  }
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      for (int l = 0; l < db; ++l) {
        if (b(j, l) != cplx(0, 0)) out(i * db + j, i * db + l) += b(j, l);
      }
    }
  }
  return out;
}

}  // namespace

void canonicalize_row_phases(CouplingTable& table) {
  for (auto& st : table.states) {
    std::sort(st.coeffs.begin(), st.coeffs.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) <
             std::tie(std::get<0>(b), std::get<1>(b));
    });
    for (const auto& [i, j, c] : st.coeffs) {
      if (std::abs(c) > 1e-9) {
        if (c < 0) {
          for (auto& [ii, jj, cc] : st.coeffs) cc = -cc;
        }
        break;
      }
    }
  }
}

std::vector<std::pair<IrrepLabel, int>> tensor_decompose(const IrrepLabel& r1,
                                                         const IrrepLabel& r2,
                                                         const QuadratureSpec& spec,
                                                         int product_dim_bound) {
  const int dprod = r1.dim() * r2.dim();
  if (dprod > product_dim_bound) {
    throw std::invalid_argument("tensor_decompose: product dimension beyond bound");
  }
  const double v0 = group_volume(spec);
  PolyState chi12 = full_matrix(r1, spec).character() * full_matrix(r2, spec).character();

  std::vector<std::pair<IrrepLabel, int>> out;
  int dim_sum = 0;
  for (const IrrepLabel& cand : candidate_targets(r1, r2)) {
    PolyState chi_t = full_matrix(cand, spec).character();
    cplx m = inner_product(chi_t, chi12, spec) / v0;
    long mult = std::lround(m.real());
    if (std::abs(m - cplx(static_cast<double>(mult), 0)) > 1e-6) {
      throw decomposition_error("tensor_decompose: non-integer multiplicity for (" +
                                std::to_string(cand.p) + "," + std::to_string(cand.q) + ")");
    }
    if (mult > 0) {
      out.push_back({cand, static_cast<int>(mult)});
      dim_sum += static_cast<int>(mult) * cand.dim();
    }
  }
  if (dim_sum != dprod) {
    throw decomposition_error("tensor_decompose: dimension sum " + std::to_string(dim_sum) +
                              " != " + std::to_string(dprod));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return b.first.dim() < a.first.dim(); });
  return out;
}

CouplingTable wcg_coefficients(const IrrepLabel& r1, const IrrepLabel& r2,
                               const IrrepLabel& target, int mult_index,
                               const QuadratureSpec& spec) {
  auto content = tensor_decompose(r1, r2, spec);
  int mult = 0;
  for (const auto& [l, m] : content) {
    if (l == target) mult = m;
  }
  if (mult_index < 0 || mult_index >= mult) {
    throw std::invalid_argument("wcg_coefficients: multiplicity index out of range");
  }

  const IrrepMatrix& m1 = full_matrix(r1, spec);
  const IrrepMatrix& m2 = full_matrix(r2, spec);
  const IrrepMatrix& mt = full_matrix(target, spec);
  const double v0 = group_volume(spec);
  const int d1 = r1.dim(), d2 = r2.dim(), dt = target.dim();

  // Column pairs whose weights add up to the target's top column weight.
  const WeightLabel top_col = mt.col_weights.front();
  std::vector<std::pair<int, int>> col_pairs;
  for (int c1 = 0; c1 < d1; ++c1) {
    for (int c2 = 0; c2 < d2; ++c2) {
      if (m1.col_weights[static_cast<size_t>(c1)] + m2.col_weights[static_cast<size_t>(c2)] ==
          top_col) {
        col_pairs.push_back({c1, c2});
      }
    }
  }
  if (col_pairs.empty()) {
    throw decomposition_error("wcg_coefficients: no column section reaches the target");
  }

  // Projection family: rows indexed by column pairs, columns by
  // (target-state, product-row-pair) entries.
  std::vector<std::tuple<int, int, int>> slots;  // (k, w1, w2)
  for (int k = 0; k < dt; ++k) {
    const WeightLabel W = mt.row_states[static_cast<size_t>(k)].weight;
    for (int w1 = 0; w1 < d1; ++w1) {
      for (int w2 = 0; w2 < d2; ++w2) {
        if (m1.row_states[static_cast<size_t>(w1)].weight +
                m2.row_states[static_cast<size_t>(w2)].weight ==
            W) {
          slots.push_back({k, w1, w2});
        }
      }
    }
  }

  Eigen::MatrixXd fam(static_cast<int>(col_pairs.size()), static_cast<int>(slots.size()));
  for (int r = 0; r < fam.rows(); ++r) {
    auto [c1, c2] = col_pairs[static_cast<size_t>(r)];
    for (int s = 0; s < fam.cols(); ++s) {
      auto [k, w1, w2] = slots[static_cast<size_t>(s)];
      PolyState prod = m1.entry[static_cast<size_t>(w1)][static_cast<size_t>(c1)] *
                       m2.entry[static_cast<size_t>(w2)][static_cast<size_t>(c2)];
      cplx v = inner_product(mt.entry[static_cast<size_t>(k)][0], prod, spec) *
               (static_cast<double>(dt) / v0);
      if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v))) {
        throw convention_error("wcg_coefficients: complex coupling encountered");
      }
      fam(r, s) = v.real();
    }
  }

  // The family factors as (column-section constants) x (coefficient rows);
  // its rank is the multiplicity.  Singular vectors give the coefficients.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(fam, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd coef = svd.matrixV().col(mult_index);

  CouplingTable table;
  table.factor1 = r1;
  table.factor2 = r2;
  table.target = target;
  table.mult_index = mult_index;
  table.basis1 = m1.row_states;
  table.basis2 = m2.row_states;
  table.states.resize(static_cast<size_t>(dt));
  for (int k = 0; k < dt; ++k) {
    table.states[static_cast<size_t>(k)].two_t = mt.row_states[static_cast<size_t>(k)].two_t;
    table.states[static_cast<size_t>(k)].weight = mt.row_states[static_cast<size_t>(k)].weight;
  }
  for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
    auto [k, w1, w2] = slots[static_cast<size_t>(s)];
    table.states[static_cast<size_t>(k)].coeffs.push_back({w1, w2, coef(s)});
  }

  // Normalize: every coupled state carries unit norm after a shared rescale
  // fixed on the highest-weight row; per-row signs then follow the common
  // presentation convention (see canonicalize_row_phases).
  double hw_norm2 = 0;
  for (const auto& [w1, w2, c] : table.states[0].coeffs) hw_norm2 += c * c;
  if (hw_norm2 <= 0) throw decomposition_error("wcg_coefficients: empty highest-weight row");
  double scale = 1.0 / std::sqrt(hw_norm2);
  for (auto& st : table.states) {
    double n2 = 0;
    for (auto& [w1, w2, c] : st.coeffs) {
      c *= scale;
      n2 += c * c;
    }
    if (std::abs(n2 - 1.0) > 1e-6) {
      throw decomposition_error("wcg_coefficients: coupled state norm " + std::to_string(n2));
    }
    for (auto& [w1, w2, c] : st.coeffs) {
      if (std::abs(c) < 1e-12) c = 0;  // snap quadrature fuzz
    }
  }
  canonicalize_row_phases(table);
  return table;
}

CouplingTable casimir_oracle_coefficients(const IrrepLabel& r1, const IrrepLabel& r2,
                                          const IrrepLabel& target, int mult_index,
                                          const QuadratureSpec& spec) {
  RepMatrices a = rep_matrices(r1, spec);
  RepMatrices b = rep_matrices(r2, spec);
  const int d1 = r1.dim(), d2 = r2.dim(), dt = target.dim();
  const int dp = d1 * d2;

  auto prod_op = [&](LadderName n) {
    return kron_sum(a.op[RepMatrices::op_key(n)], d2, b.op[RepMatrices::op_key(n)], d1);
  };
  Eigen::MatrixXcd tp = prod_op(LadderName::TPlus), tm = prod_op(LadderName::TMinus);
  Eigen::MatrixXcd up = prod_op(LadderName::UPlus), um = prod_op(LadderName::UMinus);
  Eigen::MatrixXcd vp = prod_op(LadderName::VPlus), vm = prod_op(LadderName::VMinus);
  Eigen::MatrixXcd t3 = prod_op(LadderName::T3), yy = prod_op(LadderName::Y);

  Eigen::MatrixXcd c2 = t3 * t3 + 0.75 * yy * yy +
                        0.5 * (tp * tm + tm * tp + up * um + um * up + vp * vm + vm * vp);

  // Weights of the product basis.
  std::vector<WeightLabel> pw(static_cast<size_t>(dp));
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d2; ++j) {
      pw[static_cast<size_t>(i * d2 + j)] =
          a.basis[static_cast<size_t>(i)].weight + b.basis[static_cast<size_t>(j)].weight;
    }
  }

  // Highest-weight seeds of the target: joint kernel of the raising maps
  // restricted to the target's top weight subspace.
  const WeightLabel hw = highest_weight_label(target);
  std::vector<int> hw_slots;
  for (int i = 0; i < dp; ++i) {
    if (pw[static_cast<size_t>(i)] == hw) hw_slots.push_back(i);
  }
  if (hw_slots.empty()) {
    throw decomposition_error("oracle: target weight absent from the product");
  }
  Eigen::MatrixXcd raise(3 * dp, static_cast<int>(hw_slots.size()));
  for (int s = 0; s < static_cast<int>(hw_slots.size()); ++s) {
    int col = hw_slots[static_cast<size_t>(s)];
    raise.block(0, s, dp, 1) = tp.col(col);
    raise.block(dp, s, dp, 1) = up.col(col);
    raise.block(2 * dp, s, dp, 1) = vp.col(col);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(raise, Eigen::ComputeFullV);
  int null_dim = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k) {
    if (svd.singularValues()(k) < 1e-8) ++null_dim;
  }
  if (mult_index < 0 || mult_index >= null_dim) {
    throw std::invalid_argument("oracle: multiplicity index out of range");
  }

  // Kernel vectors, ordered per the multiplicity convention (descending
  // isospin of the seed, then orthonormal).
  std::vector<Eigen::VectorXcd> seeds;
  for (int k = 0; k < null_dim; ++k) {
    Eigen::VectorXcd compact = svd.matrixV().col(svd.matrixV().cols() - 1 - k);
    Eigen::VectorXcd seed = Eigen::VectorXcd::Zero(dp);
    for (int s = 0; s < static_cast<int>(hw_slots.size()); ++s) {
      seed(hw_slots[static_cast<size_t>(s)]) = compact(s);
    }
    seeds.push_back(seed);
  }
  if (null_dim > 1) {
    auto t2_of = [&](const Eigen::VectorXcd& v) {
      Eigen::VectorXcd t2v = t3 * (t3 * v) + 0.5 * (tp * (tm * v) + tm * (tp * v));
      return (v.dot(t2v)).real() / v.squaredNorm();
    };
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&](const auto& x, const auto& y) { return t2_of(x) > t2_of(y); });
    for (int k = 0; k < null_dim; ++k) {
      for (int j = 0; j < k; ++j) {
        seeds[static_cast<size_t>(k)] -=
            seeds[static_cast<size_t>(j)].dot(seeds[static_cast<size_t>(k)]) *
            seeds[static_cast<size_t>(j)] / seeds[static_cast<size_t>(j)].squaredNorm();
      }
    }
  }
  Eigen::VectorXcd seed = seeds[static_cast<size_t>(mult_index)];
  seed /= seed.norm();

  // Casimir cross-check on the seed.
  double c2_expect = casimir2_value(target);
  double c2_resid = (c2 * seed - c2_expect * seed).norm();
  if (c2_resid > 1e-8) {
    throw decomposition_error("oracle: Casimir mismatch, residual " + std::to_string(c2_resid));
  }

  // Lower the seed through the target, Gram-Schmidt per weight, mirroring
  // the function-space generation order.
  std::map<std::pair<int, int>, std::vector<Eigen::VectorXcd>> buckets;
  std::deque<Eigen::VectorXcd> queue;
  auto weight_of = [&](const Eigen::VectorXcd& v) {
    for (int i = 0; i < dp; ++i) {
      if (std::abs(v(i)) > 1e-9 * v.norm()) return pw[static_cast<size_t>(i)];
    }
    throw std::logic_error("oracle: zero vector");
  };
  auto try_insert = [&](const Eigen::VectorXcd& cand) {
    WeightLabel w = weight_of(cand);
    auto& bucket = buckets[{w.two_t3, w.three_y}];
    Eigen::VectorXcd resid = cand;
    for (const auto& v : bucket) resid -= v.dot(resid) * v / v.squaredNorm();
    if (resid.norm() < 1e-8 * cand.norm()) return false;
    resid *= std::conj(resid.dot(cand)) / std::abs(resid.dot(cand));
    bucket.push_back(resid);
    return true;
  };
  try_insert(seed);
  queue.push_back(seed);
  const Eigen::MatrixXcd lowers[3] = {tm, um, vm};
  while (!queue.empty()) {
    Eigen::VectorXcd cur = queue.front();
    queue.pop_front();
    for (const auto& L : lowers) {
      Eigen::VectorXcd low = L * cur;
      if (low.norm() < 1e-10) continue;
      if (try_insert(low)) queue.push_back(low);
    }
  }
  int total = 0;
  for (auto& [k, v] : buckets) total += static_cast<int>(v.size());
  if (total != dt) {
    throw decomposition_error("oracle: generated " + std::to_string(total) + " states, want " +
                              std::to_string(dt));
  }

  // Resolve isospin and order identically to the function-space route.
  struct Row {
    WeightLabel w;
    int two_t;
    Eigen::VectorXcd v;
  };
  std::vector<Row> rows;
  for (auto& [key, bucket] : buckets) {
    WeightLabel w{key.first, key.second};
    for (auto& v : bucket) v /= v.norm();
    const int k = static_cast<int>(bucket.size());
    Eigen::MatrixXcd t2(k, k);
    for (int j = 0; j < k; ++j) {
      Eigen::VectorXcd img = t3 * (t3 * bucket[static_cast<size_t>(j)]) +
                             0.5 * (tp * (tm * bucket[static_cast<size_t>(j)]) +
                                    tm * (tp * bucket[static_cast<size_t>(j)]));
      for (int i = 0; i < k; ++i) t2(i, j) = bucket[static_cast<size_t>(i)].dot(img);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((t2 + t2.adjoint()) / 2.0);
    for (int e = k - 1; e >= 0; --e) {
      Eigen::VectorXcd vec = es.eigenvectors().col(e);
      for (int i = 0; i < k; ++i) {
        if (std::abs(vec(i)) > 1e-9) {
          vec *= std::conj(vec(i)) / std::abs(vec(i));
          if (vec(i).real() < 0) vec = -vec;
          break;
        }
      }
      Eigen::VectorXcd combo = Eigen::VectorXcd::Zero(dp);
      for (int i = 0; i < k; ++i) combo += vec(i) * bucket[static_cast<size_t>(i)];
      combo /= combo.norm();
      double tt = es.eigenvalues()(e);
      int two_t = static_cast<int>(std::lround(std::sqrt(4.0 * tt + 1.0) - 1.0));
      rows.push_back({w, two_t, combo});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(y.w.three_y, y.w.two_t3, y.two_t) <
           std::tie(x.w.three_y, x.w.two_t3, x.two_t);
  });

  CouplingTable table;
  table.factor1 = r1;
  table.factor2 = r2;
  table.target = target;
  table.mult_index = mult_index;
  table.basis1 = a.basis;
  table.basis2 = b.basis;
  for (const auto& row : rows) {
    CoupledState st;
    st.two_t = row.two_t;
    st.weight = row.w;
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d2; ++j) {
        cplx c = row.v(i * d2 + j);
        if (std::abs(c.imag()) > 1e-9) {
          throw convention_error("oracle: complex coupling coefficient");
        }
        if (std::abs(c) > 1e-12) st.coeffs.push_back({i, j, c.real()});
      }
    }
    table.states.push_back(std::move(st));
  }
  canonicalize_row_phases(table);
  return table;
}

double table_distance_up_to_sign(const CouplingTable& a, const CouplingTable& b) {
  if (a.states.size() != b.states.size()) return std::numeric_limits<double>::infinity();
  auto flat = [](const CouplingTable& t) {
    std::map<std::tuple<int, int, int>, double> m;
    for (int k = 0; k < static_cast<int>(t.states.size()); ++k) {
      for (const auto& [i, j, c] : t.states[static_cast<size_t>(k)].coeffs) {
        if (std::abs(c) > 1e-12) m[{k, i, j}] = c;
      }
    }
    return m;
  };
  auto ma = flat(a), mb = flat(b);
  auto dist = [&](double sign) {
    double worst = 0;
    for (const auto& [k, v] : ma) {
      auto it = mb.find(k);
      double w = it == mb.end() ? 0.0 : it->second;
      worst = std::max(worst, std::abs(v - sign * w));
    }
    for (const auto& [k, w] : mb) {
      if (!ma.count(k)) worst = std::max(worst, std::abs(w));
    }
    return worst;
  };
  return std::min(dist(1.0), dist(-1.0));
}

}  // namespace su3
