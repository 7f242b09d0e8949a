#include "su3/haar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace su3 {

namespace {

// Gauss-Legendre nodes/weights on [0, 1], cached per order.
struct GlRule {
  std::vector<double> x, w;
};

const GlRule& gl_rule(int order) {
  static std::map<int, GlRule> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GlRule rule;
  rule.x.resize(static_cast<size_t>(order));
  rule.w.resize(static_cast<size_t>(order));
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0, dz = 1;
    while (std::abs(dz) > 1e-15) {
      double p1 = 1, p2 = 0;
      for (int j = 1; j <= order; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1);
      dz = -p1 / pp;
      z += dz;
    }
    // Map from [-1, 1] to [0, 1].
    rule.x[static_cast<size_t>(i)] = 0.5 * (1 - z);
    rule.x[static_cast<size_t>(order - 1 - i)] = 0.5 * (1 + z);
    double w = 1.0 / ((1 - z * z) * pp * pp);
    rule.w[static_cast<size_t>(i)] = w;
    rule.w[static_cast<size_t>(order - 1 - i)] = w;
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

// 1-D moments of the density factors over [0, pi/2]:
//   beta, b axes: integral cos^p sin^q sin(2v) dv
//   theta axis:   integral cos^p sin^q sin(2v) sin^2(v) dv
double trig_moment(int p, int q, bool theta_axis, int order) {
  struct Key {
    int p, q, t, o;
    bool operator<(const Key& k) const {
      return std::tie(p, q, t, o) < std::tie(k.p, k.q, k.t, k.o);
    }
  };
  static std::map<Key, double> cache;
  Key key{p, q, theta_axis ? 1 : 0, order};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const GlRule& rule = gl_rule(order);
  double sum = 0;
  for (size_t k = 0; k < rule.x.size(); ++k) {
    double v = rule.x[k] * (kPi / 2);
    double cv = std::cos(v), sv = std::sin(v);
    double f = std::pow(cv, p) * std::pow(sv, q) * std::sin(2 * v);
    if (theta_axis) f *= sv * sv;
    sum += rule.w[k] * f;
  }
  sum *= kPi / 2;
  cache[key] = sum;
  return sum;
}

// Expanded representation of a state: accumulated integer phase exponents
// (alpha, gamma, a, c, eta) -> trig polynomial in the six power slots.
struct PhaseKey {
  std::array<int, 5> e;
  bool operator<(const PhaseKey& o) const { return e < o.e; }
};
using TrigPoly = std::map<std::array<int, 6>, cplx>;
using Expanded = std::map<PhaseKey, TrigPoly>;

Expanded expand(const PolyState& state, bool conjugate) {
  Expanded out;
  for (const auto& [mono, coeff] : state.terms()) {
    // Multiply out the per-symbol terms of the monomial.
    std::vector<std::pair<PhaseKey, std::pair<std::array<int, 6>, cplx>>> acc = {
        {PhaseKey{{0, 0, 0, 0, 0}}, {{0, 0, 0, 0, 0, 0}, coeff}}};
    for (int id : mono) {
      const SymbolInfo& s = symbol_info(id);
      decltype(acc) next;
      next.reserve(acc.size() * s.terms.size());
      for (const auto& [ph, tp] : acc) {
        for (const SymbolTerm& t : s.terms) {
          PhaseKey p = ph;
          p.e[0] += t.m_alpha;
          p.e[1] += t.m_gamma;
          p.e[2] += t.m_a;
          p.e[3] += t.m_c;
          p.e[4] += t.n_eta;
          std::array<int, 6> pw = tp.first;
          pw[0] += t.pcb;
          pw[1] += t.psb;
          pw[2] += t.pcbb;
          pw[3] += t.psbb;
          pw[4] += t.pct;
          pw[5] += t.pst;
          next.push_back({p, {pw, tp.second * t.sign}});
        }
      }
      acc = std::move(next);
    }
    for (auto& [ph, tp] : acc) {
      PhaseKey p = ph;
      cplx c = tp.second;
      if (conjugate) {
        for (auto& e : p.e) e = -e;
        c = std::conj(c);
      }
      out[p][tp.first] += c;
    }
  }
  return out;
}

constexpr size_t kWorstPairsKept = 32;

}  // namespace

double haar_density(const EulerAngles& x) {
  double st = std::sin(x.theta);
  return std::sin(2 * x.beta) * std::sin(2 * x.b) * std::sin(2 * x.theta) * st * st;
}

double group_volume(const QuadratureSpec& spec) {
  if (spec.mode == QuadratureSpec::Mode::MonteCarlo) {
    return group_volume_mc(spec).value.real();
  }
  double phases = kPi * kPi * kPi * kPi * (kSqrt3 * kPi);
  return phases * trig_moment(0, 0, false, spec.gauss_order) *
         trig_moment(0, 0, false, spec.gauss_order) *
         trig_moment(0, 0, true, spec.gauss_order);
}

cplx inner_product(const PolyState& f, const PolyState& g, const QuadratureSpec& spec) {
  if (spec.mode == QuadratureSpec::Mode::MonteCarlo) {
    return inner_product_mc(f.field(), g.field(), spec).value;
  }
  Expanded ef = expand(f, /*conjugate=*/true);
  Expanded eg = expand(g, /*conjugate=*/false);
  const double phase_volume = kPi * kPi * kPi * kPi * (kSqrt3 * kPi);

  cplx total = 0;
  for (const auto& [pf, tf] : ef) {
    // Phase survives only when every accumulated exponent cancels.
    PhaseKey want{{-pf.e[0], -pf.e[1], -pf.e[2], -pf.e[3], -pf.e[4]}};
    auto it = eg.find(want);
    if (it == eg.end()) continue;
    for (const auto& [pwf, cf] : tf) {
      for (const auto& [pwg, cg] : it->second) {
        double tri = trig_moment(pwf[0] + pwg[0], pwf[1] + pwg[1], false, spec.gauss_order) *
                     trig_moment(pwf[2] + pwg[2], pwf[3] + pwg[3], false, spec.gauss_order) *
                     trig_moment(pwf[4] + pwg[4], pwf[5] + pwg[5], true, spec.gauss_order);
        total += cf * cg * tri;
      }
    }
  }
  return phase_volume * total;
}

cplx inner_product(const ScalarField& f, const ScalarField& g, const QuadratureSpec& spec) {
  if (spec.mode == QuadratureSpec::Mode::Separable) {
    throw std::invalid_argument(
        "inner_product: Separable mode needs algebraic states, not opaque fields");
  }
  return inner_product_mc(f, g, spec).value;
}

EulerAngles sample_haar(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  EulerAngles x;
  // Phase angles uniform over the exact-cover ranges (gamma and c span a
  // full turn; see the quadrature notes in the module documentation).
  x.alpha = kPi * u01(rng);
  x.gamma = 2 * kPi * u01(rng);
  x.a = kPi * u01(rng);
  x.c = 2 * kPi * u01(rng);
  x.phi = kSqrt3 * kPi * u01(rng);
  // Trig axes by inverse CDF of the density factors.
  x.beta = 0.5 * std::acos(1 - 2 * u01(rng));
  x.b = 0.5 * std::acos(1 - 2 * u01(rng));
  x.theta = std::asin(std::pow(u01(rng), 0.25));
  return x;
}

namespace {

// Deterministic pairwise (binary tree) reduction.
cplx pairwise_sum(std::vector<cplx>& v, size_t lo, size_t hi) {
  if (hi - lo == 1) return v[lo];
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

McEstimate mc_reduce(std::vector<cplx>& samples, double scale) {
  const size_t n = samples.size();
  cplx mean = pairwise_sum(samples, 0, n) / static_cast<double>(n);
  double var = 0;
  for (const cplx& s : samples) {
    var += std::norm(s - mean);
  }
  var /= (static_cast<double>(n) - 1);
  return {scale * mean, scale * std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

McEstimate inner_product_mc(const ScalarField& f, const ScalarField& g,
                            const QuadratureSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const long n = std::max<long>(spec.mc_samples, 2);
  std::vector<cplx> samples(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    EulerAngles x = sample_haar(rng);
    samples[static_cast<size_t>(k)] = std::conj(f(x)) * g(x);
  }
  return mc_reduce(samples, group_volume_exact());
}

McEstimate group_volume_mc(const QuadratureSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const long n = std::max<long>(spec.mc_samples, 2);
  // Uniform box draws weighted by the density; gamma and c span a full turn
  // and the estimate carries the matching 1/4 normalization.
  const double box = kPi * (kPi / 2) * (2 * kPi) * (kPi / 2) * kPi * (kPi / 2) *
                     (2 * kPi) * (kSqrt3 * kPi);
  std::vector<cplx> samples(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    EulerAngles x;
    x.alpha = kPi * u01(rng);
    x.beta = (kPi / 2) * u01(rng);
    x.gamma = 2 * kPi * u01(rng);
    x.theta = (kPi / 2) * u01(rng);
    x.a = kPi * u01(rng);
    x.b = (kPi / 2) * u01(rng);
    x.c = 2 * kPi * u01(rng);
    x.phi = kSqrt3 * kPi * u01(rng);
    samples[static_cast<size_t>(k)] = haar_density(x);
  }
  return mc_reduce(samples, 0.25 * box);
}

OrthReport orthogonality_scan(const std::vector<std::pair<PolyState, int>>& states_with_dim,
                              const QuadratureSpec& spec) {
  OrthReport rep;
  rep.v0 = group_volume(spec);
  const int n = static_cast<int>(states_with_dim.size());
  std::vector<GramPair> offdiag;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cplx v = inner_product(states_with_dim[static_cast<size_t>(i)].first,
                             states_with_dim[static_cast<size_t>(j)].first, spec);
      if (i == j) {
        double expect = rep.v0 / states_with_dim[static_cast<size_t>(i)].second;
        double err = std::abs(v - expect) / expect;
        rep.gram_max_diag_err = std::max(rep.gram_max_diag_err, err);
        rep.diagonal.push_back({i, j, v, expect, err});
      } else {
        double err = std::abs(v) / rep.v0;
        rep.gram_max_offdiag = std::max(rep.gram_max_offdiag, err);
        offdiag.push_back({i, j, v, 0.0, err});
      }
    }
  }
  std::sort(offdiag.begin(), offdiag.end(),
            [](const GramPair& a, const GramPair& b) { return a.abs_err > b.abs_err; });
  if (offdiag.size() > kWorstPairsKept) offdiag.resize(kWorstPairsKept);
  rep.worst_pairs = std::move(offdiag);
  return rep;
}

}  // namespace su3
