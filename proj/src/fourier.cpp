#include "fourier.hpp"

#include "errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace zs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit(double phi) { return {std::cos(phi), std::sin(phi)}; }

// ∫_{phi0}^{phi1} e^{ikφ} dφ, exact at k = 0.
cplx segment_integral(double k, double phi0, double phi1) {
  double len = phi1 - phi0;
  double h = 0.5 * k * len;
  double sinc = std::fabs(h) < 1e-8 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
  return unit(0.5 * k * (phi0 + phi1)) * (len * sinc);
}

void check_arc(const CircleArc& a) {
  if (!(a.phi0 >= 0.0 && a.phi0 <= a.phi1 && a.phi1 <= kTwoPi))
    throw Error(Errc::invalid_argument, "arc angles must satisfy 0 <= phi0 <= phi1 <= 2pi");
}

}  // namespace

cplx circle_elementary_eval(const CircleArc& arc, cplx z) {
  check_arc(arc);
  double phi = std::arg(z);
  if (phi < 0) phi += kTwoPi;
  if (!(phi > arc.phi0 && phi < arc.phi1)) return 0.0;
  cplx w0 = unit(arc.phi0), w1 = unit(arc.phi1);
  return (z - w0) * (z - w1) / (w0 - w1);
}

cplx elementary_fourier(const CircleArc& arc, double nu) {
  check_arc(arc);
  if (arc.phi1 == arc.phi0) return 0.0;
  cplx w0 = unit(arc.phi0), w1 = unit(arc.phi1);
  cplx sum = segment_integral(2.0 - nu, arc.phi0, arc.phi1) -
             (w0 + w1) * segment_integral(1.0 - nu, arc.phi0, arc.phi1) +
             w0 * w1 * segment_integral(-nu, arc.phi0, arc.phi1);
  return sum / (kTwoPi * (w0 - w1));
}

cplx elementary_fourier(const CircleArc& arc, long n) {
  return elementary_fourier(arc, static_cast<double>(n));
}

CircleField circle_field(const CircleArc& arc) {
  check_arc(arc);
  return {[arc](double phi) { return circle_elementary_eval(arc, unit(phi)); }, {arc.phi0, arc.phi1}};
}

CircleField circle_field(const ShearFunction& s, const Truncation& t) {
  std::vector<std::pair<double, CircleArc>> terms;
  std::vector<double> breaks;
  for (const FanTerm& term : fan_terms(s, t)) {
    CircleArc a = edge_to_arc(term.edge);
    terms.emplace_back(term.half_shear, a);
    breaks.push_back(a.phi0);
    breaks.push_back(a.phi1);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto eval = [terms](double phi) {
    cplx z = unit(phi), acc = 0.0;
    for (const auto& [w, a] : terms) acc += w * circle_elementary_eval(a, z);
    return acc;
  };
  return {eval, breaks};
}

cplx fourier_quadrature_oracle(const CircleField& V, long n, double tol) {
  gsl_set_error_handler_off();
  std::unique_ptr<gsl_integration_workspace, void (*)(gsl_integration_workspace*)> ws(
      gsl_integration_workspace_alloc(4000), gsl_integration_workspace_free);
  std::vector<double> cuts{0.0, kTwoPi};
  for (double b : V.breaks)
    if (b > 0.0 && b < kTwoPi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double re = 0.0, im = 0.0;
  for (int part = 0; part < 2; ++part) {
    std::function<double(double)> f = [&](double phi) {
      cplx v = V.eval(phi) * unit(-static_cast<double>(n) * phi);
      return part == 0 ? v.real() : v.imag();
    };
    gsl_function F;
    F.function = [](double x, void* p) { return (*static_cast<std::function<double(double)>*>(p))(x); };
    F.params = &f;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double r = 0.0, e = 0.0;
      int status = gsl_integration_qag(&F, cuts[i], cuts[i + 1], tol, 0.0, 4000,
                                       GSL_INTEG_GAUSS61, ws.get(), &r, &e);
      if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw Error(Errc::no_convergence, "Fourier quadrature did not converge");
      acc += r;
    }
    (part == 0 ? re : im) = acc / kTwoPi;
  }
  return {re, im};
}

double circle_angle(double x) {
  if (std::isinf(x)) return std::numbers::pi;
  double phi = 2.0 * std::atan(x);
  return phi < 0 ? phi + kTwoPi : phi;
}

double circle_angle(const ExtRational& x) { return circle_angle(x.to_double()); }

CircleArc edge_to_arc(const FareyEdge& e) {
  double phi0 = circle_angle(e.initial), phi1 = circle_angle(e.terminal);
  if (phi1 <= phi0) phi1 += kTwoPi;
  return {phi0, phi1};
}

cplx field_fourier(const ShearFunction& s, const Truncation& t, long n) {
  cplx acc = 0.0;
  for (const FanTerm& term : fan_terms(s, t))
    acc += term.half_shear * elementary_fourier(edge_to_arc(term.edge), n);
  return acc;
}

}  // namespace zs
