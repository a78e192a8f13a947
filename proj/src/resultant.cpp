#include "trop/resultant.hpp"

#include <algorithm>
#include <map>

namespace trop {

std::vector<IntVec> ExactCurveEquation::support() const {
  std::vector<IntVec> s;
  for (const auto& [e, c] : terms) s.push_back(e);
  return s;
}

LatticePolytope ExactCurveEquation::newton_polygon() const {
  return conv(support());
}

namespace {

// Exact determinant of a rational matrix: clear row denominators, run
// integer Bareiss, divide the scales back out.
Rat det_rat(const RatMat& m) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  size_t n = m.size();
  IntMat a(n, IntVec(n));
  Rat scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (size_t j = 0; j < n; ++j) l = lcm(l, denominator(m[i][j]));
    for (size_t j = 0; j < n; ++j) a[i][j] = numerator(m[i][j] * Rat(l));
    scale *= Rat(1, l);
  }
  return Rat(det_int(a)) * scale;
}

// Coefficients of the polynomial interpolating (xs[i], ys[i]), Newton
// divided-difference form expanded to the monomial basis.
RatVec interp_poly(const RatVec& xs, RatVec ys) {
  size_t n = xs.size();
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  RatVec poly;  // ascending degree
  for (size_t i = n; i-- > 0;) {
    // poly = poly * (x - xs[i]) + ys[i]
    poly.insert(poly.begin(), Rat(0));
    for (size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
    poly[0] += ys[i];
  }
  return poly;
}

struct LaurentNorm {
  Int min_exp, max_exp;
  std::map<Int, Rat> coef;
};

LaurentNorm normalize(const ExactLaurent& f) {
  LaurentNorm out;
  for (const auto& [e, c] : f) {
    if (c == 0) continue;
    if (out.coef.count(e)) throw std::invalid_argument("resultant_oracle: duplicate exponent");
    out.coef[e] = c;
  }
  if (out.coef.empty()) throw std::invalid_argument("resultant_oracle: zero polynomial");
  out.min_exp = out.coef.begin()->first;
  out.max_exp = out.coef.rbegin()->first;
  return out;
}

long long ll(const Int& x) { return x.convert_to<long long>(); }

// Strips the monomial content and sorts the term list.
ExactCurveEquation finalize(std::map<std::pair<long long, long long>, Rat> raw) {
  Int m1 = 0, m2 = 0;
  bool first = true;
  for (auto it = raw.begin(); it != raw.end();) {
    if (it->second == 0) {
      it = raw.erase(it);
      continue;
    }
    if (first) {
      m1 = it->first.first;
      m2 = it->first.second;
      first = false;
    } else {
      m1 = std::min(m1, Int(it->first.first));
      m2 = std::min(m2, Int(it->first.second));
    }
    ++it;
  }
  if (raw.empty()) throw std::logic_error("resultant_oracle: vanishing resultant");
  ExactCurveEquation eq;
  for (const auto& [e, c] : raw)
    eq.terms.push_back({IntVec{Int(e.first) - m1, Int(e.second) - m2}, c});
  return eq;
}

// General path: the Sylvester determinant of
//   G_1 = t^{p_1} (x_1 - f_1),  G_2 = t^{p_2} (x_2 - f_2)
// interpolated from a numeric grid.  Entries are affine in one variable
// each, so deg_{x_1} Res <= deg G_2 and deg_{x_2} Res <= deg G_1.
ExactCurveEquation resultant_grid(const LaurentNorm& f1, const LaurentNorm& f2) {
  Int p1 = f1.min_exp < 0 ? -f1.min_exp : Int(0);
  Int p2 = f2.min_exp < 0 ? -f2.min_exp : Int(0);
  long long d1 = ll(p1 + (f1.max_exp > 0 ? f1.max_exp : Int(0)));
  long long d2 = ll(p2 + (f2.max_exp > 0 ? f2.max_exp : Int(0)));
  long long size = d1 + d2;

  // t-degree k of G_i carries constant part -(coef of t^{k-p_i} in f_i)
  // and an x part at k = p_i.
  auto coefs = [&](const LaurentNorm& f, const Int& p, long long deg) {
    std::vector<std::pair<Rat, Rat>> c((size_t)deg + 1, {Rat(0), Rat(0)});  // (const, x)
    for (const auto& [e, val] : f.coef) c[(size_t)ll(e + p)].first = -val;
    c[(size_t)ll(p)].second = 1;
    return c;
  };
  auto c1 = coefs(f1, p1, d1);
  auto c2 = coefs(f2, p2, d2);

  auto res_at = [&](const Rat& u, const Rat& v) {
    RatMat m((size_t)size, RatVec((size_t)size, Rat(0)));
    for (long long r = 0; r < d2; ++r)
      for (long long k = 0; k <= d1; ++k)
        m[(size_t)r][(size_t)(r + d1 - k)] = c1[(size_t)k].first + c1[(size_t)k].second * u;
    for (long long r = 0; r < d1; ++r)
      for (long long k = 0; k <= d2; ++k)
        m[(size_t)(d2 + r)][(size_t)(r + d2 - k)] = c2[(size_t)k].first + c2[(size_t)k].second * v;
    return det_rat(m);
  };

  RatVec us, vs;
  for (long long i = 0; i <= d2; ++i) us.push_back(Rat(i));
  for (long long j = 0; j <= d1; ++j) vs.push_back(Rat(j));
  // Interpolate in x_1 per grid row, then in x_2 per coefficient.
  RatMat rows;  // rows[j] = coefficients in x_1 at x_2 = vs[j]
  for (const auto& v : vs) {
    RatVec ys;
    for (const auto& u : us) ys.push_back(res_at(u, v));
    rows.push_back(interp_poly(us, ys));
  }
  std::map<std::pair<long long, long long>, Rat> raw;
  for (long long k = 0; k <= d2; ++k) {
    RatVec ys;
    for (size_t j = 0; j < vs.size(); ++j) ys.push_back(rows[j][(size_t)k]);
    RatVec poly = interp_poly(vs, ys);
    for (size_t l = 0; l < poly.size(); ++l)
      if (poly[l] != 0) raw[{k, (long long)l}] = poly[l];
  }
  return finalize(std::move(raw));
}

// Fast path for monomial f_2 = gamma t^m (m >= 1):
//   Res_t(G_1, x_2 - gamma t^m) = +- gamma^{deg G_1} det(G_1(C))
// where C is multiplication by t modulo t^m - S, S = x_2 / gamma.  Powers
// of C are index shifts with S-carries, so G_1(C) fills in closed form;
// the m x m determinant is interpolated on a numeric grid.
ExactCurveEquation resultant_monomial(const LaurentNorm& f1, const LaurentNorm& f2) {
  long long m = ll(f2.max_exp);
  Rat gamma = f2.coef.begin()->second;
  Int p1 = f1.min_exp < 0 ? -f1.min_exp : Int(0);
  long long d1 = ll(p1 + (f1.max_exp > 0 ? f1.max_exp : Int(0)));

  // G_1(C)[i][j]: x_1 S^q at (j + p1) = i + q m, minus sum of
  // c_k S^q at (j + k + p1) = i + q m.
  long long maxcarry = (m - 1 + d1) / m;
  auto fill = [&](const Rat& u, const Rat& s) {
    RatMat mat((size_t)m, RatVec((size_t)m, Rat(0)));
    RatVec spow((size_t)maxcarry + 1);
    spow[0] = 1;
    for (long long q = 1; q <= maxcarry; ++q) spow[(size_t)q] = spow[(size_t)q - 1] * s;
    for (long long j = 0; j < m; ++j) {
      long long e = j + ll(p1);
      mat[(size_t)(e % m)][(size_t)j] += u * spow[(size_t)(e / m)];
      for (const auto& [k, c] : f1.coef) {
        long long ke = j + ll(k + p1);
        mat[(size_t)(ke % m)][(size_t)j] -= c * spow[(size_t)(ke / m)];
      }
    }
    return det_rat(mat);
  };

  long long degs = m * maxcarry;  // S-degree bound of the determinant
  RatVec us, ss;
  for (long long i = 0; i <= m; ++i) us.push_back(Rat(i));
  for (long long j = 0; j <= degs; ++j) ss.push_back(Rat(j));
  RatMat rows;
  for (const auto& s : ss) {
    RatVec ys;
    for (const auto& u : us) ys.push_back(fill(u, s));
    rows.push_back(interp_poly(us, ys));
  }
  // Scale: Res_t(G_1, G_2) = (-1)^{d1 m} lc(G_2)^{d1} det, lc(G_2) = -gamma,
  // and S^e contributes gamma^{-e}.
  Rat lead = 1;
  for (long long i = 0; i < d1; ++i) lead *= -gamma;
  if ((d1 * m) % 2 == 1) lead = -lead;
  std::map<std::pair<long long, long long>, Rat> raw;
  for (long long k = 0; k <= m; ++k) {
    RatVec ys;
    for (size_t j = 0; j < ss.size(); ++j) ys.push_back(rows[j][(size_t)k]);
    RatVec poly = interp_poly(ss, ys);
    Rat gpow = 1;
    for (size_t e = 0; e < poly.size(); ++e) {
      if (poly[e] != 0) raw[{k, (long long)e}] += lead * poly[e] / gpow;
      gpow *= gamma;
    }
  }
  return finalize(std::move(raw));
}

ExactCurveEquation swap_vars(ExactCurveEquation eq) {
  for (auto& [e, c] : eq.terms) std::swap(e[0], e[1]);
  std::sort(eq.terms.begin(), eq.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return eq;
}

}  // namespace

ExactCurveEquation resultant_oracle(const ExactLaurent& f1_in, const ExactLaurent& f2_in) {
  LaurentNorm f1 = normalize(f1_in);
  LaurentNorm f2 = normalize(f2_in);
  bool mono1 = f1.coef.size() == 1;
  bool mono2 = f2.coef.size() == 1;
  if (mono1 && mono2 && f1.min_exp == 0 && f2.min_exp == 0)
    throw std::invalid_argument("resultant_oracle: both inputs are constant");

  // A constant input gives the relation x_i = value directly.
  if (mono1 && f1.min_exp == 0) {
    ExactCurveEquation eq;
    eq.terms = {{IntVec{Int(0), Int(0)}, -f1.coef.begin()->second}, {IntVec{Int(1), Int(0)}, Rat(1)}};
    return eq;
  }
  if (mono2 && f2.min_exp == 0) {
    ExactCurveEquation eq;
    eq.terms = {{IntVec{Int(0), Int(0)}, -f2.coef.begin()->second}, {IntVec{Int(0), Int(1)}, Rat(1)}};
    return eq;
  }

  // Reparametrizing t -> 1/t keeps the image curve; use it to make a
  // monomial exponent positive so the fast path applies.
  auto flip = [](const LaurentNorm& f) {
    ExactLaurent out;
    for (const auto& [e, c] : f.coef) out.push_back({-e, c});
    return out;
  };
  if (mono2) {
    if (f2.min_exp < 0) return resultant_oracle(flip(f1), flip(f2));
    return resultant_monomial(f1, f2);
  }
  if (mono1) return swap_vars(resultant_oracle(f2_in, f1_in));
  return resultant_grid(f1, f2);
}

}  // namespace trop
