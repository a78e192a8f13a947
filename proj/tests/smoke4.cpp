#include <iostream>
#include "trop/resultant.hpp"
#include "trop/recover.hpp"
#include "trop/reconstruct.hpp"
using namespace trop;

int main() {
  // f1 = t, f2 = t^2 -> x1^2 - x2
  auto eq = resultant_oracle({{Int(1), Rat(1)}}, {{Int(2), Rat(1)}});
  for (auto& [e, c] : eq.terms) std::cout << c << " * x1^" << e[0] << " x2^" << e[1] << "  ";
  std::cout << "\n";

  // (a,b,c,d) = (1,2,1,3) with generic coefficients
  ExactLaurent f1 = {{Int(1), Rat(2)}, {Int(2), Rat(3)}};
  ExactLaurent f2 = {{Int(1), Rat(5)}, {Int(2), Rat(-1)}, {Int(3), Rat(7)}};
  auto eq2 = resultant_oracle(f1, f2);
  auto q = eq2.newton_polygon();
  std::cout << "polygon:";
  for (auto& v : q.vertices()) std::cout << " " << vec_str(v);
  std::cout << "\n";

  // monomial fast path vs general path cross-check: f2 = 3 t^2
  ExactLaurent g1 = {{Int(0), Rat(1)}, {Int(1), Rat(2)}, {Int(3), Rat(-1)}};
  ExactLaurent g2 = {{Int(2), Rat(3)}};
  auto eq3 = resultant_oracle(g1, g2);
  std::cout << "monomial path terms: " << eq3.terms.size() << " :";
  for (auto& [e, c] : eq3.terms) std::cout << " [" << vec_str(e) << "]" << c;
  std::cout << "\n";

  // numeric implicitization of f1=(t,t^2): Q = conv{(0,0),(2,0),(0,1)}
  std::vector<LaurentPolynomial> fs = {
      {1, {{{Int(1)}, Complex(2, 0)}, {{Int(2)}, Complex(3, 0)}}},
      {1, {{{Int(1)}, Complex(5, 0)}, {{Int(2)}, Complex(-1, 0)}, {{Int(3)}, Complex(7, 0)}}}};
  auto sys = make_support_system(1, {{{Int(1)}, {Int(2)}}, {{Int(1)}, {Int(2)}, {Int(3)}}});
  auto cycle = enumerate_cone_pairs(sys);
  auto rec = reconstruct_newton(cycle, {});
  std::cout << "reconstructed Q:";
  for (auto& v : rec.polytope.vertices()) std::cout << " " << vec_str(v);
  std::cout << "\n";
  auto impl = implicitize(fs, rec.polytope, {});
  std::cout << "nullity=" << impl.nullity << " res_max=" << impl.residual_max
            << " sv_gap=" << impl.sv_gap << "\n";
  return 0;
}
