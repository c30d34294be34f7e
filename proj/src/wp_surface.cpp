#include "wp_surface.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace zs {

namespace {

constexpr int kMaxDepth = 12;

IntegerMoebius mat(long a, long b, long c, long d) { return {a, b, c, d}; }

// Reduced words in the order A, B, A⁻¹, B⁻¹, by length.
std::vector<IntegerMoebius> reduced_words(const CoveringGroup& g, int depth) {
  const IntegerMoebius gens[4] = {g.A, g.B, g.A.inverse(), g.B.inverse()};
  std::vector<IntegerMoebius> out{IntegerMoebius{}};
  std::vector<std::pair<IntegerMoebius, int>> layer{{IntegerMoebius{}, -1}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::pair<IntegerMoebius, int>> next;
    for (const auto& [w, last] : layer)
      for (int k = 0; k < 4; ++k) {
        if (last >= 0 && k == (last + 2) % 4) continue;
        next.emplace_back(w * gens[k], k);
        out.push_back(next.back().first);
      }
    layer = std::move(next);
  }
  return out;
}

void check_depth(int depth) {
  if (depth < 0 || depth > kMaxDepth)
    throw Error(Errc::invalid_argument, "depth must be in 0.." + std::to_string(kMaxDepth));
}

const std::array<FareyEdge, 3>& fundamental_edges() {
  static const std::array<FareyEdge, 3> e{
      orient_from_base(0, ExtRational::infinity()),
      orient_from_base(0, 1),
      orient_from_base(1, ExtRational::infinity()),
  };
  return e;
}

Geodesic to_geodesic(const FareyEdge& e) {
  return {e.initial.to_double(), e.terminal.to_double()};
}

}  // namespace

CoveringGroup punctured_torus_group() { return {mat(1, 1, 1, 2), mat(1, -1, -1, 2)}; }

void validate(const CoveringGroup& g) {
  if (g.A.det() != 1 || g.B.det() != 1)
    throw Error(Errc::invalid_argument, "generators must have determinant 1");
  auto words = reduced_words(g, 4);
  for (size_t i = 1; i < words.size(); ++i) {
    BigInt tr = abs(words[i].trace());
    if (words[i].is_identity()) throw Error(Errc::invalid_argument, "a short word is the identity");
    if (tr < 2) throw Error(Errc::invalid_argument, "a short word is elliptic");
  }
  IntegerMoebius comm = g.A * g.B * g.A.inverse() * g.B.inverse();
  if (abs(comm.trace()) != 2) throw Error(Errc::invalid_argument, "commutator is not parabolic");
}

std::vector<LiftedEdge> lift_edges(const CoveringGroup& g, int depth) {
  check_depth(depth);
  validate(g);
  std::vector<LiftedEdge> out;
  std::map<EdgeKey, int, EdgeKeyLess> seen;
  for (const IntegerMoebius& w : reduced_words(g, depth))
    for (int tag = 0; tag < 3; ++tag) {
      const FareyEdge& f = fundamental_edges()[static_cast<size_t>(tag)];
      ExtRational u = w.apply(f.initial), v = w.apply(f.terminal);
      EdgeKey key = edge_key(u, v);
      auto [it, fresh] = seen.emplace(key, tag);
      if (!fresh) {
        if (it->second != tag) throw Error(Errc::domain, "lifted edge carries two quotient tags");
        continue;
      }
      FareyEdge e = orient_from_base(u, v);
      out.push_back({e, to_geodesic(e), tag});
    }
  return out;
}

SurfaceTriangulation punctured_torus_triangulation(const CoveringGroup& g) {
  auto lifts = lift_edges(g, 1);
  auto tag_of = [&](const ExtRational& p, const ExtRational& q) {
    EdgeKey key = edge_key(p, q);
    for (const LiftedEdge& l : lifts)
      if (edge_key(l.edge.initial, l.edge.terminal) == key) return l.tag;
    throw Error(Errc::domain, "triangle side missing from the lift");
  };
  const ExtRational inf = ExtRational::infinity();
  // Vertices in increasing circular order give the sides counterclockwise; the
  // stored order is the reverse.
  const std::array<std::array<ExtRational, 3>, 2> tris{{{0, 1, inf}, {0, inf, -1}}};
  SurfaceTriangulation out;
  out.edges = fundamental_edges();
  for (size_t t = 0; t < 2; ++t) {
    const auto& v = tris[t];
    std::array<int, 3> ids{tag_of(v[0], v[1]), tag_of(v[1], v[2]), tag_of(v[2], v[0])};
    std::reverse(ids.begin(), ids.end());
    std::rotate(ids.begin(), std::find(ids.begin(), ids.end(), 0), ids.end());
    out.triangles[t] = ids;
  }
  std::array<int, 3> count{};
  for (const auto& tri : out.triangles)
    for (int id : tri) ++count[static_cast<size_t>(id)];
  if (count != std::array<int, 3>{2, 2, 2})
    throw Error(Errc::domain, "each quotient edge must appear in two triangle slots");
  out.cusp_ends = {2, 2, 2};
  return out;
}

bool cusp_condition_check(const Tangent& t) {
  return std::fabs(2.0 * (t[0] + t[1] + t[2])) < 1e-12;
}

double invariant_hilbert_shear(const std::vector<LiftedEdge>& lifts, const Tangent& t,
                               const Quadrilateral& Q) {
  if (!cusp_condition_check(t)) throw Error(Errc::domain, "tangent vector violates the cusp condition");
  double acc = 0.0;
  for (const LiftedEdge& l : lifts) {
    double w = t[static_cast<size_t>(l.tag)];
    if (w != 0.0) acc += w * delta_weight(l.geodesic, Q);
  }
  return acc / std::numbers::pi;
}

namespace {

Quadrilateral target_quad(int edge_id) {
  if (edge_id < 0 || edge_id > 2) throw Error(Errc::invalid_argument, "edge id must be 0, 1 or 2");
  const FareyEdge& e = fundamental_edges()[static_cast<size_t>(edge_id)];
  return to_doubles(farey_quadrilateral(e.initial, e.terminal));
}

}  // namespace

double invariant_hilbert_shear(const Tangent& t, int edge_id, int depth) {
  return invariant_hilbert_shear(lift_edges(punctured_torus_group(), depth), t, target_quad(edge_id));
}

Mat3 hilbert_matrix(int depth) {
  auto lifts = lift_edges(punctured_torus_group(), depth);
  Mat3 M{};
  for (int target = 0; target < 3; ++target) {
    Quadrilateral Q = target_quad(target);
    for (const LiftedEdge& l : lifts)
      M[static_cast<size_t>(target)][static_cast<size_t>(l.tag)] += delta_weight(l.geodesic, Q);
  }
  for (auto& row : M)
    for (double& x : row) x /= std::numbers::pi;
  return M;
}

double thurston_form(const SurfaceTriangulation& tri, const Tangent& t1, const Tangent& t2) {
  double acc = 0.0;
  for (const auto& ids : tri.triangles)
    for (size_t k = 0; k < 3; ++k) {
      auto e = static_cast<size_t>(ids[k]), f = static_cast<size_t>(ids[(k + 1) % 3]);
      acc += t1[e] * t2[f] - t1[f] * t2[e];
    }
  return 0.5 * acc;
}

double wp_pairing(const SurfaceTriangulation& tri, const Mat3& H, const Tangent& t1,
                  const Tangent& t2) {
  if (!cusp_condition_check(t1) || !cusp_condition_check(t2))
    throw Error(Errc::domain, "tangent vector violates the cusp condition");
  Tangent h{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) h[i] += H[i][j] * t2[j];
  return 2.0 * thurston_form(tri, t1, h);
}

double wp_pairing(const Tangent& t1, const Tangent& t2, int depth) {
  auto tri = punctured_torus_triangulation(punctured_torus_group());
  return wp_pairing(tri, hilbert_matrix(depth), t1, t2);
}

WpGram wp_gram(int depth) {
  if (depth < 1) throw Error(Errc::invalid_argument, "gram needs depth >= 1");
  auto tri = punctured_torus_triangulation(punctured_torus_group());
  WpGram out;
  out.basis = {Tangent{1, -1, 0}, Tangent{0, 1, -1}};
  auto fill = [&](int d, Mat2& G) {
    Mat3 H = hilbert_matrix(d);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) G[i][j] = wp_pairing(tri, H, out.basis[i], out.basis[j]);
  };
  fill(depth, out.gram);
  fill(depth - 1, out.gram_prev);
  const Mat2& G = out.gram;
  double off = 0.5 * (G[0][1] + G[1][0]);
  double mean = 0.5 * (G[0][0] + G[1][1]);
  double rad = std::hypot(0.5 * (G[0][0] - G[1][1]), off);
  out.eigenvalues = {mean - rad, mean + rad};
  double scale = std::max({std::fabs(G[0][0]), std::fabs(G[0][1]), std::fabs(G[1][0]), std::fabs(G[1][1])});
  out.asymmetry = scale > 0 ? std::fabs(G[0][1] - G[1][0]) / scale : 0.0;
  return out;
}

}  // namespace zs
