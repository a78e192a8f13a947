#include <chrono>
#include <iostream>
#include "trop/recover.hpp"
#include "trop/reconstruct.hpp"
using namespace trop;

int main() {
  // Example 5.3 bicubic with its exact coefficients
  std::vector<IntVec> a1 = {{0,3},{0,2},{0,1},{3,0},{2,0},{1,0},{0,0}};
  std::vector<IntVec> a2 = {{3,0},{2,0},{1,0},{0,3},{0,1}};
  std::vector<IntVec> a3 = {{3,3},{2,3},{1,3},{3,2},{2,2},{1,2},{0,2},{3,1},{2,1},{1,1},{0,1},{2,0},{1,0}};
  std::vector<double> c1 = {3,-6,3,1,-3,6,-1};
  std::vector<double> c2 = {3,-6,3,1,3};
  std::vector<double> c3 = {-3,15,-15,-3,-18,27,-3,6,9,-18,3,-3,3};
  auto mk = [](int d, const std::vector<IntVec>& sup, const std::vector<double>& co) {
    LaurentPolynomial f; f.dim = d;
    for (size_t i = 0; i < sup.size(); ++i) f.terms.push_back({sup[i], Complex(co[i], 0)});
    return f;
  };
  std::vector<LaurentPolynomial> fs = {mk(2,a1,c1), mk(2,a2,c2), mk(2,a3,c3)};
  // check f2(1,1) = 4 per the paper's coefficients
  SamplePoint one{{Complex(1,0), Complex(1,0)}};
  std::cout << "f2(1,1) = " << evaluate(fs[1], one) << "\n";

  auto sys = make_support_system(2, {a1,a2,a3});
  auto cycle = enumerate_cone_pairs(sys);
  auto rec = reconstruct_newton(cycle, {});
  auto t0 = std::chrono::steady_clock::now();
  ImplicitizeOptions opts; opts.samples = 1430; opts.seed = 0;
  auto eq = implicitize(fs, rec.polytope, opts);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "implicitize: " << ms << " ms, nullity=" << eq.nullity << " res_max=" << eq.residual_max
            << " sv_gap=" << eq.sv_gap << "\n";
  // find coefficients of x1^18, x2^18, x3^9
  Complex cx1, cx2, cx3;
  int nonzero = 0;
  double maxabs = 0;
  for (size_t i = 0; i < eq.support.size(); ++i) maxabs = std::max(maxabs, std::abs(eq.coefficients[i]));
  for (size_t i = 0; i < eq.support.size(); ++i) {
    const auto& s = eq.support[i];
    if (std::abs(eq.coefficients[i]) > 1e-14 * maxabs) nonzero++;
    if (s[0]==18 && s[1]==0 && s[2]==0) cx1 = eq.coefficients[i];
    if (s[0]==0 && s[1]==18 && s[2]==0) cx2 = eq.coefficients[i];
    if (s[0]==0 && s[1]==0 && s[2]==9) cx3 = eq.coefficients[i];
  }
  std::cout << "nonzero count: " << nonzero << " / " << eq.support.size() << "\n";
  // scale so coefficient of x1^18 equals 3^18
  double target1 = 387420489.0;
  Complex scale = Complex(target1,0) / cx1;
  Complex v2 = cx2 * scale, v3 = cx3 * scale;
  std::cout.precision(17);
  std::cout << "x2^18: " << v2 << " want 387420489 relerr=" << std::abs(v2 - Complex(387420489.0,0))/387420489.0 << "\n";
  std::cout << "x3^9: " << v3 << " want -18014398509481984 relerr=" << std::abs(v3 - Complex(-18014398509481984.0,0))/18014398509481984.0 << "\n";
  return 0;
}
