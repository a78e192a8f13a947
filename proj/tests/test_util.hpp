#pragma once

#include <random>

#include "trop/tropical.hpp"

namespace troptest {

using namespace trop;

inline long long rnd(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + (long long)(rng() % (unsigned long long)(hi - lo + 1));
}

inline IntVec rnd_point(std::mt19937_64& rng, int dim, long long range) {
  IntVec p((size_t)dim);
  for (int i = 0; i < dim; ++i) p[(size_t)i] = Int(rnd(rng, -range, range));
  return p;
}

inline std::vector<IntVec> rnd_points(std::mt19937_64& rng, int dim, int count, long long range) {
  std::vector<IntVec> pts;
  for (int i = 0; i < count; ++i) pts.push_back(rnd_point(rng, dim, range));
  return pts;
}

inline LatticePolytope rnd_polytope(std::mt19937_64& rng, int dim, int count, long long range) {
  return conv(rnd_points(rng, dim, count, range));
}

inline RatVec rnd_direction(std::mt19937_64& rng, int dim, long long range) {
  RatVec w((size_t)dim);
  for (int i = 0; i < dim; ++i)
    w[(size_t)i] = Rat(Int(rnd(rng, -range, range)), Int(rnd(rng, 1, range)));
  return w;
}

// Example 5.3 supports (the bicubic surface fixture).
inline SupportSystem bicubic_system() {
  std::vector<IntVec> a1 = {{0, 3}, {0, 2}, {0, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}};
  std::vector<IntVec> a2 = {{3, 0}, {2, 0}, {1, 0}, {0, 3}, {0, 1}};
  std::vector<IntVec> a3 = {{3, 3}, {2, 3}, {1, 3}, {3, 2}, {2, 2}, {1, 2}, {0, 2},
                            {3, 1}, {2, 1}, {1, 1}, {0, 1}, {2, 0}, {1, 0}};
  return make_support_system(2, {a1, a2, a3});
}

// Example 3.5 supports (three triangles).
inline SupportSystem three_triangles_system() {
  return make_support_system(2, {{{Int(1), Int(0)}, {Int(3), Int(1)}, {Int(2), Int(2)}},
                                 {{Int(-1), Int(0)}, {Int(0), Int(-1)}, {Int(0), Int(0)}},
                                 {{Int(2), Int(1)}, {Int(0), Int(2)}, {Int(1), Int(3)}}});
}

// Example 3.4 supports (six linear forms, transversal matroid).
inline SupportSystem matroid_system() {
  auto e = [](int i) { return unit_vector(3, i); };
  return make_support_system(3, {{e(0), e(1)}, {e(0)}, {e(0), e(2)}, {e(1)}, {e(2)}, {e(1), e(2)}});
}

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

inline RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

}  // namespace troptest
