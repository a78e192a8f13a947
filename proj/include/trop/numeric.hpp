#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// All polyhedral arithmetic runs on arbitrary-precision integers and
// rationals; floating point only enters in the numerical coefficient
// recovery.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale(const IntVec& a, const Int& t) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

inline IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IntVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Int gcd_vec(const IntVec& a) {
  Int g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  return g;
}

// Divides out the gcd, preserving direction.  Zero vectors stay zero.
inline IntVec primitive(const IntVec& a) {
  Int g = gcd_vec(a);
  if (g == 0) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

inline RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// Scales a rational vector to the primitive integer vector in the same
// direction.
inline IntVec rat_to_primitive_int(const RatVec& a) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  Int l = 1;
  for (const auto& x : a) l = lcm(l, denominator(x));
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rat s = a[i] * Rat(l);
    r[i] = numerator(s);
  }
  return primitive(r);
}

inline bool rat_vec_is_integral(const RatVec& a) {
  using boost::multiprecision::denominator;
  for (const auto& x : a)
    if (denominator(x) != 1) return false;
  return true;
}

inline IntVec rat_to_int(const RatVec& a) {
  using boost::multiprecision::numerator;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (boost::multiprecision::denominator(a[i]) != 1)
      throw std::logic_error("rat_to_int: vector not integral");
    r[i] = numerator(a[i]);
  }
  return r;
}

inline IntVec unit_vector(int dim, int i) {
  IntVec e(dim, 0);
  e[i] = 1;
  return e;
}

inline std::string vec_str(const IntVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

inline std::string vec_str(const RatVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

}  // namespace trop
