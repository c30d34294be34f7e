#include "moebius.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

double RealMoebius::operator()(double x) const {
  if (std::isinf(x)) return c == 0 ? kInf : a / c;
  double den = c * x + d;
  if (den == 0) return kInf;
  return (a * x + b) / den;
}

double RealMoebius::derivative(double x) const {
  double den = c * x + d;
  return det() / (den * den);
}

RealMoebius to_standard(const Geodesic& g) {
  double p = g.initial, q = g.terminal;
  if (p == q || (std::isinf(p) && std::isinf(q)))
    throw Error(Errc::invalid_argument, "geodesic with coincident endpoints");
  RealMoebius m;
  if (std::isinf(q)) {
    m = {1, -p, 0, 1};
  } else if (std::isinf(p)) {
    m = {0, 1, 1, -q};
  } else {
    m = {1, -p, 1, -q};
  }
  if (m.det() < 0) {
    m.a = -m.a;
    m.b = -m.b;
  }
  return m;
}

namespace {

// Factor x - y with the convention that ∞ dominates with a fixed sign; every
// cross-ratio below uses each point once upstairs and once downstairs, so the
// signs cancel into the correct limit.
double diff(double x, double y) {
  if (std::isinf(x)) return 1.0;
  if (std::isinf(y)) return -1.0;
  return x - y;
}

void require_distinct(double a, double b, double c, double d) {
  double v[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] == v[j] || (std::isinf(v[i]) && std::isinf(v[j])))
        throw Error(Errc::invalid_argument, "cross-ratio of repeated points");
}

}  // namespace

double cross_ratio(double a, double b, double c, double d) {
  require_distinct(a, b, c, d);
  return diff(c, b) * diff(d, a) / (diff(b, a) * diff(d, c));
}

double cross_ratio_alt(double a, double b, double c, double d) {
  require_distinct(a, b, c, d);
  return diff(b, c) * diff(d, a) / (diff(b, a) * diff(d, c));
}

double cross_ratio_sym(double a, double b, double c, double d) {
  require_distinct(a, b, c, d);
  return diff(c, a) * diff(d, b) / (diff(d, a) * diff(c, b));
}

namespace {

bool same_point(double x, double y) { return x == y || (std::isinf(x) && std::isinf(y)); }

}  // namespace

Distance geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
  if (same_point(g1.initial, g2.initial) || same_point(g1.initial, g2.terminal) ||
      same_point(g1.terminal, g2.initial) || same_point(g1.terminal, g2.terminal))
    return {0.0, true};
  RealMoebius m = to_standard(g1);
  double u = std::fabs(m(g2.initial)), v = std::fabs(m(g2.terminal));
  double su = m(g2.initial), sv = m(g2.terminal);
  if (std::isinf(su) || std::isinf(sv) || su == 0 || sv == 0) return {0.0, true};
  if ((su < 0) != (sv < 0)) throw Error(Errc::domain, "geodesics intersect");
  double lo = std::min(u, v), hi = std::max(u, v);
  // cosh δ = (hi+lo)/(hi-lo); acosh(1 + 2lo/(hi-lo)) keeps precision for small δ.
  return {std::acosh(1.0 + 2.0 * lo / (hi - lo)), false};
}

double geodesic_angle(const Geodesic& g1, const Geodesic& g2) {
  RealMoebius m = to_standard(g1);
  double u = m(g2.initial), v = m(g2.terminal);
  if (std::isinf(u) || std::isinf(v) || !(u * v < 0))
    throw Error(Errc::domain, "geodesics do not cross");
  double mid = 0.5 * (u + v), r = 0.5 * std::fabs(v - u);
  double cs = (v > u ? 1.0 : -1.0) * mid / r;
  return std::acos(std::clamp(cs, -1.0, 1.0));
}

Field pushforward(const RealMoebius& B, const Field& V) {
  RealMoebius Bi = B.inverse();
  double pole = B(kInf);
  Field W;
  W.eval = [Bi, V, pole](double x) {
    if (x == pole) {
      if (V.quad_at_inf != 0) throw Error(Errc::domain, "push-forward of a field growing like x^2");
      return 0.0;
    }
    return V(Bi(x)) / Bi.derivative(x);
  };
  for (double k : V.kinks) {
    double bk = B(k);
    if (!std::isinf(bk)) W.kinks.push_back(bk);
  }
  if (!std::isinf(pole)) W.kinks.push_back(pole);
  // x^2 coefficient at ∞ of the image, read off from V near B⁻¹(∞).
  if (Bi.c != 0)
    W.quad_at_inf = V(Bi(kInf)) * Bi.c * Bi.c / Bi.det();
  else
    W.quad_at_inf = V.quad_at_inf * Bi.a * Bi.a / Bi.det();
  return W;
}

std::complex<double> cayley_to_disk(std::complex<double> z) {
  const std::complex<double> i(0.0, 1.0);
  if (std::isinf(z.real())) return {-1.0, 0.0};
  return (i - z) / (i + z);
}

}  // namespace zs
