#include "su3/polystate.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3 {

WeightLabel monomial_row_weight(const Monomial& m) {
  WeightLabel w{};
  for (int id : m) w = w + symbol_info(id).row_w;
  return w;
}

WeightLabel monomial_col_weight(const Monomial& m) {
  WeightLabel w{};
  for (int id : m) w = w + symbol_info(id).col_w;
  return w;
}

cplx eval_monomial(const Monomial& m, const EulerAngles& x) {
  cplx v = 1.0;
  for (int id : m) v *= eval_symbol(id, x);
  return v;
}

PolyState PolyState::monomial(Monomial m, cplx coeff) {
  std::sort(m.begin(), m.end());
  PolyState p;
  p.terms_[std::move(m)] = coeff;
  return p;
}

PolyState PolyState::one() { return monomial({}, 1.0); }

bool PolyState::is_zero(double tol) const {
  for (const auto& [m, c] : terms_) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

PolyState& PolyState::add(const Monomial& m, cplx coeff) {
  Monomial key = m;
  std::sort(key.begin(), key.end());
  terms_[key] += coeff;
  return *this;
}

PolyState PolyState::operator+(const PolyState& o) const {
  PolyState out = *this;
  for (const auto& [m, c] : o.terms_) out.terms_[m] += c;
  out.prune();
  return out;
}

PolyState PolyState::operator-(const PolyState& o) const {
  PolyState out = *this;
  for (const auto& [m, c] : o.terms_) out.terms_[m] -= c;
  out.prune();
  return out;
}

PolyState PolyState::operator*(cplx s) const {
  PolyState out = *this;
  for (auto& [m, c] : out.terms_) c *= s;
  out.prune();
  return out;
}

PolyState PolyState::operator*(const PolyState& o) const {
  PolyState out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      std::sort(m.begin(), m.end());
      out.terms_[m] += c1 * c2;
    }
  }
  out.prune();
  return out;
}

void PolyState::prune(double tol) {
  double scale = max_abs_coeff();
  if (scale == 0.0) {
    terms_.clear();
    return;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= tol * scale) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

cplx PolyState::eval(const EulerAngles& x) const {
  cplx v = 0;
  for (const auto& [m, c] : terms_) v += c * eval_monomial(m, x);
  return v;
}

ScalarField PolyState::field(const std::string& descriptor) const {
  PolyState copy = *this;
  return ScalarField{[copy](const EulerAngles& x) { return copy.eval(x); }, descriptor};
}

WeightLabel PolyState::row_weight() const {
  if (terms_.empty()) throw std::logic_error("row_weight of zero state");
  WeightLabel w = monomial_row_weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (!(monomial_row_weight(m) == w)) {
      throw std::logic_error("PolyState terms carry mixed row weights");
    }
  }
  return w;
}

WeightLabel PolyState::col_weight() const {
  if (terms_.empty()) throw std::logic_error("col_weight of zero state");
  WeightLabel w = monomial_col_weight(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (!(monomial_col_weight(m) == w)) {
      throw std::logic_error("PolyState terms carry mixed column weights");
    }
  }
  return w;
}

double PolyState::max_abs_coeff() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s = std::max(s, std::abs(c));
  return s;
}

bool PolyState::approx_equal(const PolyState& o, double tol) const {
  PolyState d = *this - o;
  for (const auto& [m, c] : d.terms()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}

}  // namespace su3
