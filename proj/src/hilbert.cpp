#include "hilbert.hpp"

#include "errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

namespace zs {

namespace {

constexpr double kPi = std::numbers::pi;

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(std::fabs(t)); }

bool same(double x, double y) { return x == y || (std::isinf(x) && std::isinf(y)); }

// Position on the circle, starting at 0 and moving through increasing reals.
std::pair<int, double> circ_key(double x) {
  if (std::isinf(x)) return {1, 0.0};
  return x >= 0 ? std::make_pair(0, x) : std::make_pair(2, x);
}

bool between(double x, double y, double z) {
  if (same(y, x) || same(y, z) || same(x, z)) return false;
  auto kx = circ_key(x), ky = circ_key(y), kz = circ_key(z);
  bool xy = kx < ky, yz = ky < kz, zx = kz < kx;
  return (xy && yz) || (yz && zx) || (zx && xy);
}

void check_quad(const Quadrilateral& Q) {
  if (!between(Q.a, Q.b, Q.c) || !between(Q.b, Q.c, Q.d) || !between(Q.c, Q.d, Q.a))
    throw Error(Errc::invalid_argument, "quadrilateral vertices must be distinct and in cyclic order");
}

class Integrator {
 public:
  Integrator() : ws_(gsl_integration_workspace_alloc(kLimit), gsl_integration_workspace_free) {
    gsl_set_error_handler_off();
  }

  // Returns the integral and accumulates the error estimate.
  double operator()(const std::function<double(double)>& f, double lo, double hi, double tol,
                    double& err) {
    if (!(hi > lo)) return 0.0;
    gsl_function F;
    F.function = [](double t, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(t); };
    F.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, e = 0.0;
    int status = gsl_integration_qags(&F, lo, hi, tol, 1e-10, kLimit, ws_.get(), &result, &e);
    if (status != GSL_SUCCESS && status != GSL_EROUND) e = std::max(e, std::fabs(result) * 1e-6);
    err += e;
    return result;
  }

 private:
  static constexpr size_t kLimit = 2000;
  std::unique_ptr<gsl_integration_workspace, void (*)(gsl_integration_workspace*)> ws_;
};

}  // namespace

Quadrilateral to_doubles(const FareyQuad& q) {
  return {q.a.to_double(), q.b.to_double(), q.c.to_double(), q.d.to_double()};
}

double elementary_hilbert(const Descriptor& e, double x) {
  if (e.kind != Support::interval) {
    double a = e.a;
    return (xlogx(x - a) + x * xlogx(a - 1.0) - (x - 1.0) * xlogx(a)) / kPi;
  }
  double a = e.a, b = e.b;
  double br = (x - a) * xlogx(x - b) - (x - b) * xlogx(x - a) - x * (1.0 - a) * xlogx(1.0 - b) +
              x * (1.0 - b) * xlogx(1.0 - a) + (x - 1.0) * a * xlogx(b) -
              (x - 1.0) * b * xlogx(a);
  return -br / (kPi * (a - b));
}

Field hilbert_field(const Descriptor& e) {
  Field f;
  f.eval = [e](double x) { return elementary_hilbert(e, x); };
  f.kinks = {e.a};
  if (e.kind == Support::interval) f.kinks.push_back(e.b);
  return f;
}

OracleResult hilbert_pv_oracle(const Field& V, double x, const PVOracleConfig& cfg) {
  if (V.quad_at_inf != 0.0)
    throw Error(Errc::domain, "oracle needs a field with o(x^2) growth");
  if (!(cfg.eps0 > 0) || cfg.halvings < 1 || !(cfg.tol > 0) || cfg.extrapolation_depth < 1 ||
      cfg.extrapolation_depth > cfg.halvings)
    throw Error(Errc::invalid_argument, "bad oracle configuration");
  if (x == 0.0 || x == 1.0) return {0.0, 0.0};
  const double R = std::max(cfg.radius, 2.0 * (std::fabs(x) + 2.0));
  // Partial fractions of the kernel on the core [-L, L]; the combined kernel outside.
  const double L = std::max(2.0, std::fabs(x) + 1.0);
  const std::array<double, 3> poles{0.0, 1.0, x};
  const std::array<double, 3> coef{x - 1.0, -x, 1.0};
  auto kernel = [&](double z) { return x * (x - 1.0) / (z * (z - 1.0) * (z - x)); };

  Integrator quad;
  double err = 0.0;
  auto split_integral = [&](const std::function<double(double)>& f, double lo, double hi) {
    std::vector<double> cuts{lo, hi};
    for (double k : V.kinks)
      if (k > lo && k < hi) cuts.push_back(k);
    for (double p : poles)
      if (p > lo && p < hi) cuts.push_back(p);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double acc = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) acc += quad(f, cuts[i], cuts[i + 1], cfg.tol, err);
    return acc;
  };

  double total = 0.0;
  auto vk = [&](double z) { return V(z) * kernel(z); };
  total += split_integral(vk, L, R) + split_integral(vk, -R, -L);
  total += quad([&](double u) { return vk(1.0 / u) / (u * u); }, 0.0, 1.0 / R, cfg.tol, err);
  total += quad([&](double u) { return vk(-1.0 / u) / (u * u); }, 0.0, 1.0 / R, cfg.tol, err);

  const int H = cfg.halvings;
  const int D = cfg.extrapolation_depth;
  double spread = 0.0;
  for (size_t i = 0; i < poles.size(); ++i) {
    const double q = poles[i];
    // The fold must be smooth in t, so it stops short of any kink other than q.
    double eps0 = std::min(cfg.eps0, (L - std::fabs(q)) / 2);
    for (double k : V.kinks)
      if (k != q) eps0 = std::min(eps0, std::fabs(k - q) / 2);
    auto term = [&](double z) { return V(z) / (z - q); };
    double outer = split_integral(term, -L, q - eps0) + split_integral(term, q + eps0, L);

    // Symmetric excision: fold onto t > 0 and shrink eps_k = eps0 / 2^k.
    auto folded = [&](double t) { return (V(q + t) - V(q - t)) / t; };
    std::vector<double> S(static_cast<size_t>(H + 1), 0.0);
    double eps = eps0, inner = 0.0;
    for (int k = 1; k <= H; ++k) {
      double next = eps / 2;
      inner += quad(folded, next, eps, cfg.tol, err);
      S[static_cast<size_t>(k)] = inner;
      eps = next;
    }
    // Richardson in eps: S_k = lim - c1 eps_k - c2 eps_k^2 - ...
    std::vector<std::vector<double>> T(static_cast<size_t>(H + 1));
    for (int k = 0; k <= H; ++k) {
      T[k].assign(static_cast<size_t>(D + 1), 0.0);
      T[k][0] = S[static_cast<size_t>(k)];
      for (int j = 1; j <= std::min(k, D); ++j) {
        double f = std::ldexp(1.0, j);
        T[k][j] = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / (f - 1.0);
      }
    }
    total += coef[i] * (outer + T[H][D]);
    spread += std::fabs(coef[i]) * std::fabs(T[H][D] - T[H - 1][D - 1]);
  }
  return {-total / kPi, (spread + err) / kPi};
}

double hilbert_closed_eval(const ShearFunction& s, double x) {
  double acc = 0.0;
  for (const auto& [key, v] : s.support())
    acc += v * elementary_hilbert(edge_descriptor(orient_from_base(key.first, key.second)), x);
  return acc;
}

double hilbert_series_eval(const ShearFunction& s, const Truncation& t, double x) {
  double acc = 0.0;
  for (const FanTerm& term : fan_terms(s, t))
    acc += term.half_shear * elementary_hilbert(edge_descriptor(term.edge), x);
  return acc;
}

Field hilbert_series_field(const ShearFunction& s, const Truncation& t) {
  std::vector<std::pair<double, Descriptor>> terms;
  std::vector<double> kinks;
  for (const FanTerm& term : fan_terms(s, t)) {
    Descriptor e = edge_descriptor(term.edge);
    terms.emplace_back(term.half_shear, e);
    kinks.push_back(e.a);
    if (e.kind == Support::interval) kinks.push_back(e.b);
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  Field f;
  f.eval = [terms](double x) {
    double acc = 0.0;
    for (const auto& [w, e] : terms) acc += w * elementary_hilbert(e, x);
    return acc;
  };
  f.kinks = std::move(kinks);
  return f;
}

double shear_recover(const Field& V, const Quadrilateral& Q) {
  check_quad(Q);
  struct Term {
    double sign, y, x;
  };
  const Term terms[4] = {{1, Q.c, Q.b}, {1, Q.d, Q.a}, {-1, Q.b, Q.a}, {-1, Q.d, Q.c}};
  double acc = 0.0;
  double plus_partner = 0, minus_partner = 0;
  bool has_inf = false;
  for (const Term& t : terms) {
    if (std::isinf(t.y) || std::isinf(t.x)) {
      has_inf = true;
      double partner = std::isinf(t.y) ? t.x : t.y;
      (t.sign > 0 ? plus_partner : minus_partner) = partner;
      continue;
    }
    acc += t.sign * (V(t.y) - V(t.x)) / (t.y - t.x);
  }
  // The two quotients through ∞ diverge separately; together they tend to
  // α (x₊ - x₋) where α is the x^2 coefficient of V at ∞.
  if (has_inf) acc += V.quad_at_inf * (plus_partner - minus_partner);
  return acc;
}

double delta_weight(const Geodesic& e, const Quadrilateral& Q) {
  Field h = hilbert_field(geodesic_descriptor(e.initial, e.terminal));
  return kPi * shear_recover(h, Q);
}

namespace {

double log_coth2(double delta) { return -2.0 * std::log(std::tanh(0.5 * delta)); }
double sinh2_term(double delta) {
  double s = std::sinh(0.5 * delta);
  return s * s * log_coth2(delta);
}
double cosh2_term(double delta) {
  double c = std::cosh(0.5 * delta);
  return c * c * log_coth2(delta);
}

}  // namespace

double delta_weight_hyperbolic(const Geodesic& e, const Quadrilateral& Q) {
  check_quad(Q);
  const double P[4] = {Q.a, Q.b, Q.c, Q.d};
  const double u = e.initial, v = e.terminal;
  if (same(u, v)) throw Error(Errc::invalid_argument, "degenerate geodesic");

  auto rotated = [&](int s) {
    return std::array<double, 4>{P[s % 4], P[(s + 1) % 4], P[(s + 2) % 4], P[(s + 3) % 4]};
  };
  auto is_pair = [&](double p, double q) {
    return (same(u, p) && same(v, q)) || (same(u, q) && same(v, p));
  };

  // e is a diagonal: log cot^2(θ/2), θ between e run from b to d and a→c.
  for (int s = 0; s < 2; ++s) {
    auto r = rotated(s);
    if (is_pair(r[1], r[3])) {
      double th = geodesic_angle({r[1], r[3]}, {r[0], r[2]});
      double val = std::log((1.0 + std::cos(th)) / (1.0 - std::cos(th)));
      return s == 0 ? val : -val;
    }
  }

  // e outside Q: find the side it faces, rotate that side to (d, a).
  auto in_closed_gap = [&](double w, int i) {
    double lo = P[i], hi = P[(i + 1) % 4];
    return same(w, lo) || same(w, hi) || between(lo, w, hi);
  };
  for (int i = 0; i < 4; ++i) {
    if (!in_closed_gap(u, i) || !in_closed_gap(v, i)) continue;
    int s = (i + 1) % 4;
    auto r = rotated(s);
    const double a = r[0], b = r[1], c = r[2], d = r[3];
    double sign = (s % 2 == 0) ? 1.0 : -1.0;
    auto dist = [&](double p, double q) { return geodesic_distance(e, {p, q}).value; };
    bool at_a = same(u, a) || same(v, a);
    bool at_d = same(u, d) || same(v, d);
    double val;
    if (at_a && at_d)
      val = cosh2_term(dist(b, c));
    else if (at_a)
      val = sinh2_term(dist(b, c)) + log_coth2(dist(b, d)) - cosh2_term(dist(c, d));
    else if (at_d)
      val = cosh2_term(dist(b, c)) - sinh2_term(dist(a, b));
    else
      val = sinh2_term(dist(b, c)) + cosh2_term(dist(a, d)) - cosh2_term(dist(a, b)) -
            cosh2_term(dist(c, d));
    return sign * val;
  }
  throw Error(Errc::domain, "geodesic crosses the quadrilateral; no hyperbolic form");
}

ShearSeries hilbert_shear_series(const ShearFunction& s, const ExtRational& b,
                                 const ExtRational& d, const Truncation& t) {
  Quadrilateral Q = to_doubles(farey_quadrilateral(b, d));
  ShearSeries out;
  out.by_order.assign(static_cast<size_t>(t.max_order), 0.0);
  std::vector<double> per_order(static_cast<size_t>(t.max_order), 0.0);
  for (const FanTerm& term : fan_terms(s, t)) {
    Geodesic g{term.edge.initial.to_double(), term.edge.terminal.to_double()};
    int ord = farey_order(term.tip);
    per_order[static_cast<size_t>(ord - 1)] += term.half_shear * delta_weight(g, Q) / kPi;
  }
  double acc = 0.0;
  for (int k = 0; k < t.max_order; ++k) {
    acc += per_order[static_cast<size_t>(k)];
    out.by_order[static_cast<size_t>(k)] = acc;
  }
  out.value = acc;
  return out;
}

}  // namespace zs
