#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "generators.hpp"
#include "wp_surface.hpp"

#include <cmath>
#include <set>

using namespace zs;
using zs::testing::Gen;

namespace {

using Key = std::pair<std::string, std::string>;

Key key_of(const FareyEdge& e) {
  auto k = edge_key(e.initial, e.terminal);
  return {k.first.str(), k.second.str()};
}

double dot(const Tangent& a, const Tangent& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Tangent random_cusp_tangent(Gen& g) {
  double u = g.uniform(-2, 2), v = g.uniform(-2, 2);
  return {u, v, -u - v};
}

}  // namespace

TEST_CASE("cusp condition") {
  CHECK(cusp_condition_check({1, -1, 0}));
  CHECK(cusp_condition_check({0.5, 0.25, -0.75}));
  CHECK_FALSE(cusp_condition_check({1, 1, 1}));
  CHECK_FALSE(cusp_condition_check({1, 0, 0}));
}

TEST_CASE("group validation") {
  CoveringGroup g = punctured_torus_group();
  CHECK_NOTHROW(validate(g));
  IntegerMoebius C = g.A * g.B * g.A.inverse() * g.B.inverse();
  CHECK(abs(C.trace()) == 2);
  CoveringGroup det2 = g;
  det2.A = {2, 0, 0, 1};
  CHECK_THROWS_AS(validate(det2), Error);
  CoveringGroup elliptic = g;
  elliptic.B = {0, -1, 1, 0};
  CHECK_THROWS_AS(validate(elliptic), Error);
  CoveringGroup order3 = g;
  order3.A = {0, -1, 1, 1};
  CHECK_THROWS_AS(validate(order3), Error);
}

TEST_CASE("lifted edges") {
  CoveringGroup g = punctured_torus_group();
  auto d0 = lift_edges(g, 0);
  REQUIRE(d0.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(d0[i].tag == i);
  for (int d = 0; d <= 5; ++d) {
    auto lifts = lift_edges(g, d);
    CHECK(lifts.size() <= 6 * std::pow(3, d));
    std::set<Key> seen;
    for (const auto& l : lifts) {
      CHECK(farey_adjacent(l.edge.initial, l.edge.terminal));
      CHECK(seen.insert(key_of(l.edge)).second);
      CHECK(l.geodesic.initial == l.edge.initial.to_double());
      CHECK(l.geodesic.terminal == l.edge.terminal.to_double());
    }
  }
  CHECK_THROWS_AS(lift_edges(g, -1), Error);
  CHECK_THROWS_AS(lift_edges(g, 13), Error);
}

TEST_CASE("lifts are closed under the generators up to one level") {
  CoveringGroup g = punctured_torus_group();
  auto inner = lift_edges(g, 4), outer = lift_edges(g, 5);
  std::map<Key, int> tags;
  for (const auto& l : outer) tags[key_of(l.edge)] = l.tag;
  for (const IntegerMoebius& w : {g.A, g.B, g.A.inverse(), g.B.inverse()})
    for (const auto& l : inner) {
      FareyEdge moved{w.apply(l.edge.initial), w.apply(l.edge.terminal)};
      auto it = tags.find(key_of(moved));
      REQUIRE(it != tags.end());
      CHECK(it->second == l.tag);
    }
}

TEST_CASE("triangulation") {
  SurfaceTriangulation tri = punctured_torus_triangulation(punctured_torus_group());
  for (const auto& t : tri.triangles) {
    std::set<int> ids(t.begin(), t.end());
    CHECK(ids == std::set<int>{0, 1, 2});
  }
  for (int ends : tri.cusp_ends) CHECK(ends == 2);
  CHECK(key_of(tri.edges[0]) == key_of(FareyEdge{0, ExtRational::infinity()}));
  CHECK(key_of(tri.edges[1]) == key_of(FareyEdge{0, 1}));
  CHECK(key_of(tri.edges[2]) == key_of(FareyEdge{1, ExtRational::infinity()}));
}

TEST_CASE("invariant Hilbert shear is unchanged by translating lifts and quadrilateral together") {
  CoveringGroup g = punctured_torus_group();
  auto lifts = lift_edges(g, 4);
  Gen gen(51);
  for (const IntegerMoebius& w : {g.A, g.B.inverse(), g.A * g.B}) {
    RealMoebius W{w.a.convert_to<double>(), w.b.convert_to<double>(), w.c.convert_to<double>(),
                  w.d.convert_to<double>()};
    std::vector<LiftedEdge> moved;
    for (const auto& l : lifts) {
      FareyEdge e{w.apply(l.edge.initial), w.apply(l.edge.terminal)};
      moved.push_back({e, {W(l.geodesic.initial), W(l.geodesic.terminal)}, l.tag});
    }
    for (int id = 0; id < 3; ++id) {
      SurfaceTriangulation tri = punctured_torus_triangulation(g);
      FareyQuad fq = farey_quadrilateral(tri.edges[id].initial, tri.edges[id].terminal);
      FareyQuad wq{w.apply(fq.a), w.apply(fq.b), w.apply(fq.c), w.apply(fq.d)};
      Tangent t = random_cusp_tangent(gen);
      double base = invariant_hilbert_shear(lifts, t, to_doubles(fq));
      CHECK(invariant_hilbert_shear(moved, t, to_doubles(wq)) == doctest::Approx(base).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("Hilbert matrix is linear in the tangent") {
  Mat3 M = hilbert_matrix(4);
  Gen gen(52);
  for (int i = 0; i < 10; ++i) {
    Tangent t = random_cusp_tangent(gen);
    for (int target = 0; target < 3; ++target) {
      double direct = invariant_hilbert_shear(t, target, 4);
      CHECK(direct == doctest::Approx(dot(M[target], t)).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK_THROWS_AS(invariant_hilbert_shear({1, 0, 0}, 0, 4), Error);
}

TEST_CASE("Thurston form") {
  SurfaceTriangulation tri = punctured_torus_triangulation(punctured_torus_group());
  Gen gen(53);
  for (int i = 0; i < 50; ++i) {
    Tangent a{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    Tangent b{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    CHECK(thurston_form(tri, a, b) == doctest::Approx(-thurston_form(tri, b, a)).scale(1.0));
    CHECK(thurston_form(tri, a, a) == doctest::Approx(0.0).scale(1.0));
    double brute = 0.0;
    for (const auto& T : tri.triangles)
      for (int k = 0; k < 3; ++k) {
        int e = T[k], f = T[(k + 1) % 3];
        brute += 0.5 * (a[e] * b[f] - a[f] * b[e]);
      }
    CHECK(thurston_form(tri, a, b) == doctest::Approx(brute).scale(1.0));
  }
  CHECK(thurston_form(tri, {1, -1, 0}, {0, 1, -1}) != doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("Weil-Petersson pairing") {
  SurfaceTriangulation tri = punctured_torus_triangulation(punctured_torus_group());
  Mat3 H = hilbert_matrix(5);
  Gen gen(54);
  CHECK(wp_pairing(tri, H, {0, 0, 0}, {1, -1, 0}) == 0.0);
  for (int i = 0; i < 30; ++i) {
    Tangent a = random_cusp_tangent(gen), b = random_cusp_tangent(gen), c = random_cusp_tangent(gen);
    double x = gen.uniform(-2, 2);
    Tangent ac{a[0] + x * c[0], a[1] + x * c[1], a[2] + x * c[2]};
    CHECK(wp_pairing(tri, H, ac, b) ==
          doctest::Approx(wp_pairing(tri, H, a, b) + x * wp_pairing(tri, H, c, b)).epsilon(1e-10).scale(1.0));
    CHECK(wp_pairing(tri, H, a, b) == doctest::Approx(wp_pairing(tri, H, b, a)).epsilon(1e-6).scale(1.0));
    CHECK(wp_pairing(tri, H, a, a) > 0.0);
  }
}

TEST_CASE("Gram matrix") {
  WpGram g = wp_gram(6);
  CHECK(g.asymmetry < 1e-6);
  CHECK(g.eigenvalues[0] > 0.0);
  CHECK(g.eigenvalues[0] <= g.eigenvalues[1]);
  double scale = std::max(std::fabs(g.gram[0][0]), std::fabs(g.gram[1][1]));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::fabs(g.gram[i][j] - g.gram_prev[i][j]) < 0.1 * scale);
  CHECK(g.gram[0][0] == doctest::Approx(wp_pairing(g.basis[0], g.basis[0], 6)).epsilon(1e-12));
  CHECK_THROWS_AS(wp_gram(0), Error);
}
