// Real Möbius maps, cross-ratios and hyperbolic geometry of geodesics in H.
#pragma once

#include "field_fn.hpp"

#include <complex>
#include <limits>

namespace zs {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RealMoebius {
  double a = 1, b = 0, c = 0, d = 1;

  double operator()(double x) const;
  double det() const { return a * d - b * c; }
  RealMoebius inverse() const { return {d, -b, -c, a}; }
  RealMoebius operator*(const RealMoebius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double derivative(double x) const;
};

// Oriented geodesic of H by its ideal endpoints; ∞ is kInf (either sign).
struct Geodesic {
  double initial, terminal;
};

// Orientation-preserving map sending g.initial to 0 and g.terminal to ∞.
RealMoebius to_standard(const Geodesic& g);

// (c-b)(d-a) / ((b-a)(d-c)).
double cross_ratio(double a, double b, double c, double d);
// (b-c)(d-a) / ((b-a)(d-c)); the negative of cross_ratio.
double cross_ratio_alt(double a, double b, double c, double d);
// (c-a)(d-b) / ((d-a)(c-b)).
double cross_ratio_sym(double a, double b, double c, double d);

struct Distance {
  double value;
  bool asymptotic;  // geodesics share an endpoint; value is 0
};
Distance geodesic_distance(const Geodesic& g1, const Geodesic& g2);

// Angle in (0, π) between the oriented tangents at the crossing point.
double geodesic_angle(const Geodesic& g1, const Geodesic& g2);

// x ↦ V(B⁻¹x) / (B⁻¹)'(x).
Field pushforward(const RealMoebius& B, const Field& V);

// The map H → D with 0, 1, ∞ ↦ 1, i, -1.
std::complex<double> cayley_to_disk(std::complex<double> z);
inline std::complex<double> cayley_to_disk(double x) {
  return cayley_to_disk(std::complex<double>(x, 0.0));
}

}  // namespace zs
