#pragma once

#include <map>
#include <vector>

#include "su3/diffops.hpp"
#include "su3/fundamental.hpp"

namespace su3 {

// A product of matrix-element symbols, kept sorted (multiset of symbol ids).
using Monomial = std::vector<int>;

WeightLabel monomial_row_weight(const Monomial& m);
WeightLabel monomial_col_weight(const Monomial& m);
cplx eval_monomial(const Monomial& m, const EulerAngles& x);

// Linear combination of monomials: the algebraic form of representation
// functions.  Coefficients below kCoeffEps of the largest are dropped.
class PolyState {
 public:
  static constexpr double kCoeffEps = 1e-12;

  PolyState() = default;
  static PolyState monomial(Monomial m, cplx coeff = 1.0);
  static PolyState one();  // the empty product (constant function 1)

  const std::map<Monomial, cplx>& terms() const { return terms_; }
  bool is_zero(double tol = kCoeffEps) const;
  size_t size() const { return terms_.size(); }

  PolyState& add(const Monomial& m, cplx coeff);
  PolyState operator+(const PolyState& o) const;
  PolyState operator-(const PolyState& o) const;
  PolyState operator*(cplx s) const;
  PolyState operator*(const PolyState& o) const;  // function product

  void prune(double tol = kCoeffEps);

  cplx eval(const EulerAngles& x) const;
  ScalarField field(const std::string& descriptor = "PolyState") const;

  // Common row (column) weight of all monomials; throws std::logic_error if
  // the terms do not share one.
  WeightLabel row_weight() const;
  WeightLabel col_weight() const;

  double max_abs_coeff() const;
  bool approx_equal(const PolyState& o, double tol = 1e-10) const;

 private:
  std::map<Monomial, cplx> terms_;
};

inline PolyState operator*(cplx s, const PolyState& p) { return p * s; }

}  // namespace su3
