#pragma once

#include <complex>

#include "trop/polytope.hpp"

namespace trop {

using Complex = std::complex<double>;

struct LaurentPolynomial {
  int dim = 0;
  std::vector<std::pair<IntVec, Complex>> terms;  // distinct exponents
};

struct SamplePoint {
  std::vector<Complex> coords;  // every coordinate of modulus 1
};

// Deterministic unitary sample points: coordinates e^{i theta} with theta
// drawn uniformly from a seeded generator.
std::vector<SamplePoint> sample_unitary(int dim, int count, unsigned long long seed);

Complex evaluate(const LaurentPolynomial& f, const SamplePoint& tau);

struct ImplicitEquation {
  std::vector<IntVec> support;        // lattice points of Q
  std::vector<Complex> coefficients;  // largest modulus scaled to 1
  int nullity = 0;
  double residual_max = 0;
  double residual_mean = 0;
  double sv_gap = 0;                  // smallest kept / largest dropped singular value
  bool non_generic = false;           // nullity > 1 (coefficient non-genericity)
  bool conditioning_failure = false;  // no singular value under the tolerance
};

struct ImplicitizeOptions {
  int samples = 0;  // 0: use 2x the number of lattice points
  unsigned long long seed = 0;
  double nullity_tol = 1e-8;  // relative to the largest singular value
  int holdout = 32;
};

// Builds the sample matrix M[k][alpha] = prod_i f_i(tau_k)^{alpha_i} over
// the lattice points alpha of Q, column-scaled, and extracts the smallest
// right singular direction as the coefficient vector of the implicit
// equation.  Residuals are evaluated on held-out samples.
ImplicitEquation implicitize(const std::vector<LaurentPolynomial>& fs, const LatticePolytope& q,
                             const ImplicitizeOptions& opts = {});

// |g(f(tau))| normalized by the coefficient-and-magnitude scale.
double residual(const ImplicitEquation& g, const std::vector<LaurentPolynomial>& fs,
                const SamplePoint& tau);

}  // namespace trop
