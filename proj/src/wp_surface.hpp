// Shear calculus on the once-punctured torus H / Γ, Γ the commutator
// subgroup of PSL2(Z), triangulated by the image of the Farey tessellation.
#pragma once

#include "hilbert.hpp"

#include <array>
#include <string>
#include <vector>

namespace zs {

using Tangent = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat2 = std::array<std::array<double, 2>, 2>;

struct CoveringGroup {
  IntegerMoebius A, B;
};

// A = [[1,1],[1,2]] glues (-1,∞) to (0,1); B = [[1,-1],[-1,2]] glues (1,∞) to (-1,0).
CoveringGroup punctured_torus_group();

// Throws unless both generators have determinant 1, no reduced word of length
// <= 4 is the identity or elliptic, and the commutator is parabolic.
void validate(const CoveringGroup& g);

struct SurfaceTriangulation {
  std::array<FareyEdge, 3> edges;                // fundamental representatives
  // Edge ids of each triangle listed clockwise as seen in H. With this
  // orientation 2 i(t, H t) is positive; counterclockwise gives its negative.
  std::array<std::array<int, 3>, 2> triangles;
  std::array<int, 3> cusp_ends;                  // ends of each edge at the cusp
};

// Reads the triangle orientation data off the lifted edge tags.
SurfaceTriangulation punctured_torus_triangulation(const CoveringGroup& g);

struct LiftedEdge {
  FareyEdge edge;
  Geodesic geodesic;
  int tag;  // quotient edge id 0..2
};

// Translates of the fundamental edges by reduced words of length <= depth,
// deduplicated, in word order.
std::vector<LiftedEdge> lift_edges(const CoveringGroup& g, int depth);

// 2 (t1 + t2 + t3) = 0: each edge has both ends at the single cusp.
bool cusp_condition_check(const Tangent& t);

// Σ over lifts of t(tag) Δ(lift, Q) / π, one term per edge (no halving).
double invariant_hilbert_shear(const std::vector<LiftedEdge>& lifts, const Tangent& t,
                               const Quadrilateral& Q);
double invariant_hilbert_shear(const Tangent& t, int edge_id, int depth);

// M[target][source]: H of the unit shear on `source`, read on `target`.
Mat3 hilbert_matrix(int depth);

// ½ Σ_triangles Σ_{consecutive (e, e')} t1(e) t2(e') - t1(e') t2(e).
double thurston_form(const SurfaceTriangulation& tri, const Tangent& t1, const Tangent& t2);

// 2 i(t1, H t2).
double wp_pairing(const Tangent& t1, const Tangent& t2, int depth);
double wp_pairing(const SurfaceTriangulation& tri, const Mat3& H, const Tangent& t1,
                  const Tangent& t2);

struct WpGram {
  std::array<Tangent, 2> basis;
  Mat2 gram, gram_prev;        // at depth and depth - 1
  std::array<double, 2> eigenvalues;  // of the symmetric part, ascending
  double asymmetry;            // |G01 - G10| / max |G|
};

WpGram wp_gram(int depth);

}  // namespace zs
