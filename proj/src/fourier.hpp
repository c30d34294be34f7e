// Elementary shear fields on the unit circle and their Fourier coefficients.
#pragma once

#include "shear_field.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace zs {

using cplx = std::complex<double>;

// Counterclockwise arc from e^{i phi0} to e^{i phi1}, 0 <= phi0 <= phi1 <= 2π.
struct CircleArc {
  double phi0, phi1;
};

// (z - w0)(z - w1)/(w0 - w1) on the open arc, 0 elsewhere; |z| = 1.
cplx circle_elementary_eval(const CircleArc& arc, cplx z);

// (1/2π) ∫ V(e^{iφ}) e^{-inφ} dφ of the elementary arc field, in closed form.
cplx elementary_fourier(const CircleArc& arc, long n);
// Same formula with a real frequency.
cplx elementary_fourier(const CircleArc& arc, double nu);

// A field on S¹ as a function of the angle, with its non-smooth angles.
struct CircleField {
  std::function<cplx(double)> eval;
  std::vector<double> breaks;
};

CircleField circle_field(const CircleArc& arc);
// Σ ½ṡ V_arc over the truncated fan series.
CircleField circle_field(const ShearFunction& s, const Truncation& t);

// Adaptive quadrature on [0, 2π] split at the breaks.
cplx fourier_quadrature_oracle(const CircleField& V, long n, double tol = 1e-13);

// Angle of the image of x under x -> (i - x)/(i + x), in [0, 2π); ∞ -> π.
double circle_angle(double x);
double circle_angle(const ExtRational& x);

// The image of the side of the edge away from the base triangle.
CircleArc edge_to_arc(const FareyEdge& e);

cplx field_fourier(const ShearFunction& s, const Truncation& t, long n);

}  // namespace zs
