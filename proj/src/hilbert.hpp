// Hilbert transform of Zygmund fields: closed forms on elementary fields, a
// principal-value quadrature oracle, shear recovery and Δ-weights.
#pragma once

#include "moebius.hpp"
#include "shear_field.hpp"

#include <vector>

namespace zs {

// a, b, c, d in increasing cyclic order; (b, d) is the diagonal.
struct Quadrilateral {
  double a, b, c, d;
};

Quadrilateral to_doubles(const FareyQuad& q);

// H of one elementary field, normalised to vanish at 0 and 1.
double elementary_hilbert(const Descriptor& e, double x);
Field hilbert_field(const Descriptor& e);

struct PVOracleConfig {
  double eps0 = 1e-2;        // outermost excision radius
  int halvings = 8;          // eps_k = eps0 / 2^k, k = 0..halvings
  int extrapolation_depth = 2;
  double radius = 1e3;       // beyond this the integral is done in 1/zeta
  double tol = 1e-12;
};

struct OracleResult {
  double value;
  double residual;  // extrapolation spread plus quadrature error estimates
};

// -(1/π) p.v. ∫ x(x-1) V(ζ) / (ζ(ζ-1)(ζ-x)) dζ, principal value at ζ = 0, 1, x.
OracleResult hilbert_pv_oracle(const Field& V, double x, const PVOracleConfig& cfg = {});

// Σ_e ṡ(e) H(V_e)(x), edge by edge.
double hilbert_closed_eval(const ShearFunction& s, double x);
// Σ_p Σ_n ½ṡ(e_n^p) H(V_{e_n^p})(x) over the truncated fan series.
double hilbert_series_eval(const ShearFunction& s, const Truncation& t, double x);
Field hilbert_series_field(const ShearFunction& s, const Truncation& t);

// First variation of log cr(a,b,c,d) along V; ∞ vertices use V's x^2 coefficient.
double shear_recover(const Field& V, const Quadrilateral& Q);

// π · shear_recover(H(V_e), Q).
double delta_weight(const Geodesic& e, const Quadrilateral& Q);

// Same quantity from the hyperbolic geometry of e relative to Q: distances to
// the sides when e stays outside Q, the crossing angle when e is a diagonal.
double delta_weight_hyperbolic(const Geodesic& e, const Quadrilateral& Q);

struct ShearSeries {
  double value = 0;
  std::vector<double> by_order;  // value using tips of order <= k, k = 1..max_order
};

// H(ṡ) on the Farey edge (b, d).
ShearSeries hilbert_shear_series(const ShearFunction& s, const ExtRational& b,
                                 const ExtRational& d, const Truncation& t);

}  // namespace zs
