#pragma once

#include "trop/polytope.hpp"

namespace trop {

// Univariate Laurent polynomial with exact rational coefficients:
// (exponent, coefficient) pairs, exponents distinct.
using ExactLaurent = std::vector<std::pair<Int, Rat>>;

// Bivariate polynomial over Q, term list sorted by exponent.
struct ExactCurveEquation {
  std::vector<std::pair<IntVec, Rat>> terms;  // exponent in Z^2 -> coefficient

  std::vector<IntVec> support() const;
  LatticePolytope newton_polygon() const;
};

// Sylvester resultant of (x_1 - f_1(t), x_2 - f_2(t)) with respect to t,
// after clearing t-denominators and dividing out any monomial factor in
// x_1, x_2.  Exact over Q.  Requires that f_1, f_2 are not both
// monomials.
ExactCurveEquation resultant_oracle(const ExactLaurent& f1, const ExactLaurent& f2);

}  // namespace trop
