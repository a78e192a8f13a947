#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trop/lp.hpp"

using namespace troptest;

TEST_CASE("conv drops non-extreme points") {
  CHECK(conv({iv({0, 0})}).vertices() == std::vector<IntVec>{iv({0, 0})});
  auto seg = conv({iv({0, 0}), iv({1, 0}), iv({2, 0})});
  CHECK(seg.vertices() == std::vector<IntVec>{iv({0, 0}), iv({2, 0})});
  CHECK(seg.dim() == 1);
  auto tri = conv({iv({2, 1}), iv({0, 2}), iv({1, 3})});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.dim() == 2);
}

TEST_CASE("conv rejects bad input") {
  CHECK_THROWS_AS(conv({}), std::invalid_argument);
  CHECK_THROWS_AS(conv({iv({1, 0}), iv({1})}), std::invalid_argument);
}

TEST_CASE("minkowski sum basics") {
  auto p = conv({iv({0, 0}), iv({2, 0}), iv({0, 2})});
  auto shifted = minkowski_sum(p, conv({iv({3, 5})}));
  CHECK(shifted.vertices() == std::vector<IntVec>{iv({3, 5}), iv({3, 7}), iv({5, 5})});

  auto octagon = bicubic_system().sum_polytope;
  CHECK(octagon.vertices().size() == 8);

  auto hexagon = matroid_system().sum_polytope;
  CHECK(hexagon.vertices().size() == 6);
  CHECK(hexagon.dim() == 2);  // planar hexagon inside R^3
}

TEST_CASE("face_in_direction") {
  auto square = conv({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  auto left = face_in_direction(square, rv({1, 0}));
  CHECK(left.vertices() == std::vector<IntVec>{iv({0, 0}), iv({0, 1})});
  CHECK(face_in_direction(square, rv({0, 0})) == square);

  // face of Example 5.3's P_2 at w = (1,1), against a brute-force min
  // over the support points
  std::vector<IntVec> a2 = {{3, 0}, {2, 0}, {1, 0}, {0, 3}, {0, 1}};
  Rat best;
  bool first = true;
  for (const auto& p : a2) {
    Rat s = dot(rv({1, 1}), p);
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  std::vector<IntVec> argmin;
  for (const auto& p : a2)
    if (dot(rv({1, 1}), p) == best) argmin.push_back(p);
  CHECK(face_in_direction(conv(a2), rv({1, 1})) == conv(argmin));
}

TEST_CASE("support_value") {
  auto sys = bicubic_system();
  CHECK(support_value(sys.polytopes[0], rv({0, 0})) == Rat(0));
  CHECK(support_value(sys.polytopes[1], rv({1, 1})) == Rat(1));

  // random polytope: equals the exhaustive minimum over lattice points
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = rnd_polytope(rng, 2, 5, 4);
    auto w = rnd_direction(rng, 2, 5);
    Rat mn;
    bool first = true;
    for (const auto& pt : lattice_points(p)) {
      Rat s = dot(w, pt);
      if (first || s < mn) {
        mn = s;
        first = false;
      }
    }
    CHECK(support_value(p, w) == mn);
  }
}

TEST_CASE("normal fan ray counts") {
  auto square = conv({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})});
  std::set<IntVec> rays;
  for (const auto& fc : normal_fan(square).cones)
    if (fc.cone.dim() == 1) rays.insert(fc.cone.rays()[0]);
  CHECK(rays == std::set<IntVec>{iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});

  // octagon of the bicubic: the eight primitive inner normals
  auto oct = bicubic_system().sum_polytope;
  std::set<IntVec> oct_rays;
  for (const auto& fc : normal_fan(oct).cones)
    if (fc.cone.dim() == 1) oct_rays.insert(fc.cone.rays()[0]);
  std::set<IntVec> expected = {iv({1, 0}),  iv({1, 1}),   iv({0, 1}),  iv({-1, 1}),
                               iv({-1, 0}), iv({-1, -1}), iv({0, -1}), iv({1, -1})};
  CHECK(oct_rays == expected);

  // 9-gon of the three-triangles fixture
  auto ninegon = three_triangles_system().sum_polytope;
  int nine = 0;
  for (const auto& fc : normal_fan(ninegon).cones)
    if (fc.cone.dim() == 1) ++nine;
  CHECK(nine == 9);
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(conv({iv({0, 0}), iv({1, 0}), iv({0, 1})})) == Int(1));
  CHECK(normalized_volume(conv({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})})) == Int(2));
  CHECK(normalized_volume(conv({iv({0, 0}), iv({2, 4})})) == Int(2));
  CHECK(normalized_volume(conv({iv({5, 5})})) == Int(0));
}

TEST_CASE("mixed volume examples") {
  auto seg1 = conv({iv({0, 0}), iv({1, 0})});
  auto seg2 = conv({iv({0, 0}), iv({0, 1})});
  CHECK(mixed_volume({seg1, seg2}) == Int(1));

  auto sys = bicubic_system();
  CHECK(mixed_volume({sys.polytopes[0], sys.polytopes[1]}) == Int(9));
  CHECK(mixed_volume({sys.polytopes[0], sys.polytopes[2]}) == Int(18));
  CHECK(mixed_volume({sys.polytopes[1], sys.polytopes[2]}) == Int(17));

  auto tri = conv({iv({0, 0}), iv({1, 0}), iv({0, 1})});
  CHECK(mixed_volume({tri, tri}) == Int(1));
  CHECK(mixed_volume({}) == Int(1));

  // degenerate: parallel segments span only one dimension
  CHECK(mixed_volume({seg1, seg1}) == Int(0));
}

TEST_CASE("hermite basis") {
  CHECK(hermite_basis({iv({2, 0}), iv({0, 2})}) == IntMat{iv({2, 0}), iv({0, 2})});
  CHECK(sublattice_index({iv({1, 1}), iv({1, -1})}) == Int(2));

  // random matrices: the basis generates the same integer row span,
  // checked by solving for integral coordinates both ways
  std::mt19937_64 rng(11);
  auto in_lattice = [](const IntMat& basis, const IntVec& x) {
    RatMat a(x.size(), RatVec(basis.size()));
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) a[i][j] = Rat(basis[j][i]);
    LinearSolve s = solve_rational(a, to_rat(x));
    if (s.kind == LinearSolve::Inconsistent) return false;
    return rat_vec_is_integral(s.solution);
  };
  for (int trial = 0; trial < 25; ++trial) {
    IntMat m = rnd_points(rng, 3, 3, 5);
    IntMat h = hermite_basis(m);
    bool all_zero = true;
    for (const auto& row : m)
      if (!is_zero(row)) all_zero = false;
    if (all_zero) continue;
    for (const auto& row : m)
      if (!is_zero(row)) CHECK(in_lattice(h, row));
    for (const auto& row : h) CHECK(in_lattice(m, row));
  }
}

TEST_CASE("sublattice index") {
  CHECK(sublattice_index({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}) == Int(1));
  CHECK(sublattice_index({iv({2, 0}), iv({0, 3})}) == Int(6));
  CHECK_THROWS_AS(sublattice_index({iv({0, 0})}), std::invalid_argument);

  // subsets of a basis of Z^n are saturated
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    int pick = (int)rnd(rng, 1, 3);
    IntMat rows;
    std::vector<int> idx = {0, 1, 2, 3};
    for (int i = 0; i < pick; ++i) {
      int j = (int)rnd(rng, 0, (long long)idx.size() - 1);
      rows.push_back(unit_vector(4, idx[(size_t)j]));
      idx.erase(idx.begin() + j);
    }
    CHECK(sublattice_index(rows) == Int(1));
  }
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(conv({iv({0}), iv({3})})).size() == 4);
  CHECK(lattice_points(conv({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})})).size() == 4);

  // lower-dimensional polytopes enumerate their affine lattice
  auto seg = conv({iv({0, 0}), iv({2, 4})});
  CHECK(lattice_points(seg) == std::vector<IntVec>{iv({0, 0}), iv({1, 2}), iv({2, 4})});
}

TEST_CASE("lattice points match a hull-membership box scan") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = (int)rnd(rng, 1, 3);
    auto p = rnd_polytope(rng, dim, 4, 3);
    auto pts = lattice_points(p);
    // independent oracle: scan the bounding box, test convex-hull
    // membership by exact LP over the vertices
    IntVec lo = p.vertices()[0], hi = p.vertices()[0];
    for (const auto& v : p.vertices())
      for (int j = 0; j < dim; ++j) {
        lo[(size_t)j] = std::min(lo[(size_t)j], v[(size_t)j]);
        hi[(size_t)j] = std::max(hi[(size_t)j], v[(size_t)j]);
      }
    std::vector<IntVec> expect;
    IntVec cur = lo;
    while (true) {
      if (in_convex_hull(p.vertices(), to_rat(cur))) expect.push_back(cur);
      int j = 0;
      while (j < dim) {
        if (cur[(size_t)j] < hi[(size_t)j]) {
          ++cur[(size_t)j];
          break;
        }
        cur[(size_t)j] = lo[(size_t)j];
        ++j;
      }
      if (j == dim) break;
    }
    CHECK(pts == expect);
  }
}

TEST_CASE("support function Minkowski additivity") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = (int)rnd(rng, 1, 3);
    auto p = rnd_polytope(rng, dim, 4, 4);
    auto r = rnd_polytope(rng, dim, 4, 4);
    auto w = rnd_direction(rng, dim, 6);
    CHECK(support_value(p, w) + support_value(r, w) == support_value(minkowski_sum(p, r), w));
  }
}

TEST_CASE("face decomposition of a Minkowski sum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = (int)rnd(rng, 1, 3);
    auto p = rnd_polytope(rng, dim, 4, 4);
    auto r = rnd_polytope(rng, dim, 4, 4);
    auto w = rnd_direction(rng, dim, 6);
    auto lhs = face_in_direction(minkowski_sum(p, r), w);
    auto rhs = minkowski_sum(face_in_direction(p, w), face_in_direction(r, w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("mixed volume symmetry, translation invariance, diagonal") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = (int)rnd(rng, 1, 3);
    std::vector<LatticePolytope> ps;
    for (int i = 0; i < dim; ++i) ps.push_back(rnd_polytope(rng, dim, 3, 3));
    Int mv = mixed_volume(ps);
    auto shuffled = ps;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[(size_t)rnd(rng, 0, (long long)i - 1)]);
    CHECK(mixed_volume(shuffled) == mv);
    // translate one argument
    auto moved = ps;
    moved[0] = minkowski_sum(moved[0], conv({rnd_point(rng, dim, 5)}));
    CHECK(mixed_volume(moved) == mv);
  }
  for (int trial = 0; trial < 40; ++trial) {
    int dim = (int)rnd(rng, 1, 3);
    auto p = rnd_polytope(rng, dim, dim + 2, 3);
    CHECK(mixed_volume(std::vector<LatticePolytope>((size_t)dim, p)) == normalized_volume(p));
  }
}

TEST_CASE("mixed area identity in the plane") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rnd_polytope(rng, 2, 4, 4);
    auto r = rnd_polytope(rng, 2, 4, 4);
    // nvol = 2 * area for polygons, so the identity reads
    // 2 MV = nvol(P+R) - nvol(P) - nvol(R)
    Int lhs = 2 * mixed_volume({p, r});
    CHECK(lhs == normalized_volume(minkowski_sum(p, r)) - normalized_volume(p) -
                     normalized_volume(r));
  }
}

TEST_CASE("mixed volume positivity criterion") {
  // MV(face_w(P_j) : j in J) > 0 iff dim face_w(P_K) >= |K| for all
  // K inside J, when |J| = dim face_w(P_J)
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 100) {
    int dim = (int)rnd(rng, 1, 3);
    int n = (int)rnd(rng, 1, 4);
    std::vector<std::vector<IntVec>> supports;
    for (int i = 0; i < n; ++i)
      supports.push_back(rnd_points(rng, dim, (int)rnd(rng, 1, 4), 3));
    auto sys = make_support_system(dim, supports);
    auto w = rnd_direction(rng, dim, 4);
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (rnd(rng, 0, 1)) J.push_back(i);
    if (J.empty()) continue;
    std::vector<LatticePolytope> faces;
    for (int j : J) faces.push_back(face_in_direction(sys.polytopes[(size_t)j], w));
    LatticePolytope sum = faces[0];
    for (size_t i = 1; i < faces.size(); ++i) sum = minkowski_sum(sum, faces[i]);
    if (sum.dim() != (int)J.size()) continue;
    bool solvable = is_solvable(sys, w, J);
    Int mv = mixed_volume(faces);
    CHECK((mv > 0) == solvable);
    ++done;
  }
}

TEST_CASE("f_vector of the bicubic Newton polytope shape") {
  auto tet = conv({iv({0, 0, 0}), iv({18, 0, 0}), iv({0, 18, 0}), iv({0, 0, 9})});
  auto fv = f_vector(tet);
  CHECK(fv == std::vector<Int>{Int(4), Int(6), Int(4)});
  CHECK(lattice_points(tet).size() == 715);
}
