// Shear functions on the Farey tessellation and the vector fields they induce.
#pragma once

#include "farey.hpp"
#include "field_fn.hpp"

#include <map>
#include <vector>

namespace zs {

enum class Support { interval, right_ray, left_ray };

// Unit-shear field of one geodesic restricted to one side of it:
//   interval (a,b):  (x-a)(x-b)/(a-b) on (a,b)
//   right ray a:     x-a on (a,∞)
//   left ray a:      -(x-a) on (-∞,a)
struct Descriptor {
  Support kind;
  double a;
  double b = 0.0;
};

inline Descriptor interval(double a, double b) { return {Support::interval, a, b}; }
inline Descriptor right_ray(double a) { return {Support::right_ray, a}; }
inline Descriptor left_ray(double a) { return {Support::left_ray, a}; }

double elementary_eval(const Descriptor& e, double x);

// Field of a Farey edge, supported on the side away from Δ0. The edge must be
// oriented with Δ0 on its left (orient_from_base).
Descriptor edge_descriptor(const FareyEdge& e);
// Any geodesic: a ray when one endpoint is ∞, otherwise the bounded interval.
// Agrees with edge_descriptor up to a quadratic polynomial.
Descriptor geodesic_descriptor(double u, double v);

struct FieldExpr {
  std::vector<std::pair<double, Descriptor>> terms;
  double alpha = 0, beta = 0, gamma = 0;  // + alpha x^2 + beta x + gamma

  double operator()(double x) const;
  std::vector<double> kinks() const;
  Field as_field() const;
};

using EdgeKey = std::pair<ExtRational, ExtRational>;
struct EdgeKeyLess {
  bool operator()(const EdgeKey& x, const EdgeKey& y) const { return edge_key_less(x, y); }
};

class ShearFunction {
 public:
  // Rejects non-adjacent endpoints.
  void set(const ExtRational& p, const ExtRational& q, double value);
  bool contains(const ExtRational& p, const ExtRational& q) const;
  double operator()(const ExtRational& p, const ExtRational& q) const;
  const std::map<EdgeKey, double, EdgeKeyLess>& support() const { return values_; }
  size_t size() const { return values_.size(); }

 private:
  std::map<EdgeKey, double, EdgeKeyLess> values_;
};

// Shears along one fan, keyed by fan index.
using FanShears = std::map<long, double>;

FanShears fan_shears(const ShearFunction& s, const ExtRational& tip);

// Piecewise-linear field of a fan at ∞ read directly off the shears:
// 0 on [0,1], sum_{i=1}^n s(i)(x-i) on (n,n+1], -s(0)x-...-s(-n)(x+n) on [-n-1,-n).
double fan_field_eval(const FanShears& s, double x);

struct Truncation {
  int max_order = 8;
  long window = 64;
};

// Field of the fan at p built from the halved shears with |n| <= window.
FieldExpr tip_field(const ExtRational& p, const ShearFunction& s, long window);

// One summand of the fan series: halved shear on e_n^p with its edge field.
struct FanTerm {
  ExtRational tip;
  long n;
  FareyEdge edge;
  double half_shear;
};

// All fan terms of tips with order <= max_order and |n| <= window, ordered by
// (tip order, circular position, n).
std::vector<FanTerm> fan_terms(const ShearFunction& s, const Truncation& t);

FieldExpr sum_field(const ShearFunction& s, const Truncation& t);
double sum_field_eval(const ShearFunction& s, const Truncation& t, double x);

// Distance between non-adjacent edges met by a ray into the tessellation.
double fan_separation();
// C * sum_{i>=n} i e^{-(i-2)δ/2}.
double tail_bound(int n, double C);

struct ZygmundReport {
  double sup = 0;
  ExtRational tip;
  long m = 0, k = 0;      // fan witness
  double x = 0, t = 0;    // point witness
};

// sup over m and 1 <= k <= K of |s(m) + sum_{j<k} (k-j)/k (s(m+j)+s(m-j))|.
ZygmundReport zygmund_condition_sup(const FanShears& s, long K);
ZygmundReport zygmund_condition_sup(const ShearFunction& s, const std::vector<ExtRational>& tips,
                                    long K);
// Tips are the endpoints of the support.
ZygmundReport zygmund_condition_sup(const ShearFunction& s, long K);
double zygmund_condition_value(const FanShears& s, long m, long k);

double qs_ratio(const FanShears& s, long m, long k);

ZygmundReport zygmund_quotient_sup(const Field& V, const std::vector<double>& xs,
                                   const std::vector<double>& ts);

// Subtracts the quadratic vanishing-interpolant at three points; with ∞ among
// them the x^2 coefficient is zeroed and the other two are interpolated.
FieldExpr normalize_at(const FieldExpr& V, double x1, double x2, double x3);
Field normalize_at(const Field& V, double x1, double x2, double x3);

double partial_sum_diag(const FanShears& s, long k, long n);

}  // namespace zs
