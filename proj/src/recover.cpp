#include "trop/recover.hpp"

#include <Eigen/Dense>
#include <random>

namespace trop {

std::vector<SamplePoint> sample_unitary(int dim, int count, unsigned long long seed) {
  if (count < 1) throw std::invalid_argument("sample_unitary: count must be positive");
  std::mt19937_64 rng(seed);
  const double two_pi = 6.283185307179586476925286766559;
  std::vector<SamplePoint> out;
  out.reserve((size_t)count);
  for (int k = 0; k < count; ++k) {
    SamplePoint p;
    p.coords.reserve((size_t)dim);
    for (int j = 0; j < dim; ++j) {
      double u = (double)(rng() >> 11) * 0x1.0p-53;  // uniform in [0,1)
      p.coords.push_back(std::polar(1.0, two_pi * u));
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Integer power by squaring; negative exponents via the reciprocal.
template <typename Cx>
Cx cpow_int(Cx base, long long e) {
  if (e < 0) {
    base = Cx(1) / base;
    e = -e;
  }
  Cx acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

template <typename Real>
std::complex<Real> evaluate_t(const LaurentPolynomial& f, const SamplePoint& tau) {
  using Cx = std::complex<Real>;
  Cx total(0);
  for (const auto& [exp, coef] : f.terms) {
    Cx mono(1);
    for (size_t j = 0; j < exp.size(); ++j)
      mono *= cpow_int(Cx((Real)tau.coords[j].real(), (Real)tau.coords[j].imag()), to_ll(exp[j]));
    total += Cx((Real)coef.real(), (Real)coef.imag()) * mono;
  }
  return total;
}

struct SolveOutcome {
  std::vector<Complex> coefficients;
  int nullity = 0;
  double sv_gap = 0;
};

// Assembles the sample matrix, equilibrates it, and extracts the
// smallest right singular direction.  Templated so the whole pipeline
// can be re-run in extended precision when double cannot separate the
// nullspace.
template <typename Real>
SolveOutcome solve_precision(const std::vector<LaurentPolynomial>& fs,
                             const std::vector<IntVec>& support,
                             const std::vector<SamplePoint>& samples, int m, double nullity_tol) {
  using Cx = std::complex<Real>;
  using Mat = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic>;
  using RVec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  int n = (int)fs.size();
  size_t ncols = support.size();

  std::vector<long long> max_exp((size_t)n, 0);
  for (const auto& a : support)
    for (int i = 0; i < n; ++i) max_exp[(size_t)i] = std::max(max_exp[(size_t)i], to_ll(a[(size_t)i]));

  Mat mat((Eigen::Index)m, (Eigen::Index)ncols);
  for (int k = 0; k < m; ++k) {
    std::vector<std::vector<Cx>> pw((size_t)n);
    for (int i = 0; i < n; ++i) {
      Cx w = evaluate_t<Real>(fs[(size_t)i], samples[(size_t)k]);
      auto& t = pw[(size_t)i];
      t.resize((size_t)max_exp[(size_t)i] + 1);
      t[0] = Cx(1);
      for (long long e = 1; e <= max_exp[(size_t)i]; ++e) t[(size_t)e] = t[(size_t)e - 1] * w;
    }
    for (size_t c = 0; c < ncols; ++c) {
      Cx v(1);
      for (int i = 0; i < n; ++i) v *= pw[(size_t)i][(size_t)to_ll(support[c][(size_t)i])];
      mat((Eigen::Index)k, (Eigen::Index)c) = v;
    }
  }

  // Row scaling leaves the nullspace unchanged; alternating row and
  // column equilibration tames the dynamic range of the monomial
  // columns.  The final pass leaves every column at unit norm.
  RVec col_scale = RVec::Ones((Eigen::Index)ncols);
  for (int iter = 0; iter < 3; ++iter) {
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      Real s = mat.row(r).norm();
      if (s > Real(0)) mat.row(r) /= s;
    }
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      Real s = mat.col(c).norm();
      if (s > Real(0)) {
        mat.col(c) /= s;
        col_scale(c) *= s;
      }
    }
  }

  Eigen::BDCSVD<Mat> svd(mat, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Real smax = sv(0);
  int nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= (Real)nullity_tol * smax) ++nullity;

  SolveOutcome out;
  out.nullity = nullity;
  if (nullity >= 1 && (Eigen::Index)ncols > nullity) {
    Real kept = sv((Eigen::Index)ncols - nullity - 1);
    Real dropped = sv((Eigen::Index)ncols - nullity);
    out.sv_gap = dropped > Real(0) ? (double)(kept / dropped) : std::numeric_limits<double>::infinity();
  }
  out.coefficients.resize(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    Cx v = svd.matrixV()((Eigen::Index)c, (Eigen::Index)ncols - 1) / col_scale((Eigen::Index)c);
    out.coefficients[c] = Complex((double)v.real(), (double)v.imag());
  }
  return out;
}

template <typename Real>
double residual_t(const std::vector<Complex>& coef, const std::vector<IntVec>& support,
                  const std::vector<LaurentPolynomial>& fs, const SamplePoint& tau) {
  using Cx = std::complex<Real>;
  int n = (int)fs.size();
  std::vector<Cx> w((size_t)n);
  for (int i = 0; i < n; ++i) w[(size_t)i] = evaluate_t<Real>(fs[(size_t)i], tau);
  Cx num(0);
  Real den(0);
  for (size_t c = 0; c < support.size(); ++c) {
    Cx mono(1);
    Real mag(1);
    for (int i = 0; i < n; ++i) {
      long long e = to_ll(support[c][(size_t)i]);
      mono *= cpow_int(w[(size_t)i], e);
      mag *= cpow_int(Cx(std::abs(w[(size_t)i])), e).real();
    }
    Cx cc((Real)coef[c].real(), (Real)coef[c].imag());
    num += cc * mono;
    den += std::abs(cc) * mag;
  }
  return den > Real(0) ? (double)(std::abs(num) / den) : (double)std::abs(num);
}

}  // namespace

Complex evaluate(const LaurentPolynomial& f, const SamplePoint& tau) {
  if ((int)tau.coords.size() != f.dim) throw std::invalid_argument("evaluate: dimension mismatch");
  std::complex<double> v = evaluate_t<double>(f, tau);
  return v;
}

ImplicitEquation implicitize(const std::vector<LaurentPolynomial>& fs, const LatticePolytope& q,
                             const ImplicitizeOptions& opts) {
  int n = (int)fs.size();
  if (q.ambient_dim() != n) throw std::invalid_argument("implicitize: polytope must live in R^n");
  int d = fs.empty() ? 0 : fs[0].dim;
  for (const auto& f : fs)
    if (f.dim != d) throw std::invalid_argument("implicitize: mixed parameter dimensions");

  ImplicitEquation eq;
  eq.support = lattice_points(q);
  size_t ncols = eq.support.size();
  int m = opts.samples > 0 ? opts.samples : (int)(2 * ncols);
  if (m < (int)ncols) throw std::invalid_argument("implicitize: too few samples for the support");

  std::vector<SamplePoint> samples = sample_unitary(d, m + opts.holdout, opts.seed);

  SolveOutcome sol = solve_precision<double>(fs, eq.support, samples, m, opts.nullity_tol);
  // Escalate to extended precision when the nullspace does not separate
  // cleanly in double; the huge-coefficient instances need it.
  if (sol.nullity != 1 || sol.sv_gap < 1e6)
    sol = solve_precision<long double>(fs, eq.support, samples, m, opts.nullity_tol);

  eq.nullity = sol.nullity;
  eq.sv_gap = sol.sv_gap;
  eq.non_generic = sol.nullity > 1;
  eq.conditioning_failure = sol.nullity == 0;
  eq.coefficients = sol.coefficients;

  double biggest = 0;
  size_t big_at = 0;
  for (size_t c = 0; c < ncols; ++c) {
    double a = std::abs(eq.coefficients[c]);
    if (a > biggest) {
      biggest = a;
      big_at = c;
    }
  }
  if (biggest > 0) {
    Complex pivot = eq.coefficients[big_at];
    for (auto& c : eq.coefficients) c /= pivot;
  }

  double rmax = 0, rsum = 0;
  for (int k = m; k < m + opts.holdout; ++k) {
    double r = residual_t<long double>(eq.coefficients, eq.support, fs, samples[(size_t)k]);
    rmax = std::max(rmax, r);
    rsum += r;
  }
  eq.residual_max = rmax;
  eq.residual_mean = opts.holdout > 0 ? rsum / opts.holdout : 0;
  return eq;
}

double residual(const ImplicitEquation& g, const std::vector<LaurentPolynomial>& fs,
                const SamplePoint& tau) {
  return residual_t<long double>(g.coefficients, g.support, fs, tau);
}

}  // namespace trop
