#include "shear_field.hpp"

#include "errors.hpp"
#include "moebius.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

double elementary_eval(const Descriptor& e, double x) {
  switch (e.kind) {
    case Support::interval:
      return (x > e.a && x < e.b) ? (x - e.a) * (x - e.b) / (e.a - e.b) : 0.0;
    case Support::right_ray:
      return x > e.a ? x - e.a : 0.0;
    case Support::left_ray:
      return x < e.a ? -(x - e.a) : 0.0;
  }
  return 0.0;
}

Descriptor edge_descriptor(const FareyEdge& e) {
  double u = e.initial.to_double(), v = e.terminal.to_double();
  if (e.terminal.is_inf()) return right_ray(u);
  if (e.initial.is_inf()) return left_ray(v);
  // The arc initial→terminal must not pass through ∞.
  if (!(u < v)) throw Error(Errc::domain, "edge field would wrap through infinity");
  return interval(u, v);
}

Descriptor geodesic_descriptor(double u, double v) {
  if (std::isinf(u) && std::isinf(v)) throw Error(Errc::invalid_argument, "degenerate geodesic");
  if (std::isinf(v)) return right_ray(u);
  if (std::isinf(u)) return right_ray(v);
  if (u == v) throw Error(Errc::invalid_argument, "degenerate geodesic");
  return interval(std::min(u, v), std::max(u, v));
}

double FieldExpr::operator()(double x) const {
  double acc = 0.0;
  for (const auto& [w, e] : terms) acc += w * elementary_eval(e, x);
  return acc + (alpha * x + beta) * x + gamma;
}

std::vector<double> FieldExpr::kinks() const {
  std::vector<double> k;
  for (const auto& [w, e] : terms) {
    k.push_back(e.a);
    if (e.kind == Support::interval) k.push_back(e.b);
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

Field FieldExpr::as_field() const {
  FieldExpr copy = *this;
  return Field{[copy](double x) { return copy(x); }, kinks(), alpha};
}

void ShearFunction::set(const ExtRational& p, const ExtRational& q, double value) {
  if (!farey_adjacent(p, q))
    throw Error(Errc::not_farey, "(" + p.str() + ", " + q.str() + ") is not a Farey edge");
  values_[edge_key(p, q)] = value;
}

bool ShearFunction::contains(const ExtRational& p, const ExtRational& q) const {
  return values_.count(edge_key(p, q)) > 0;
}

double ShearFunction::operator()(const ExtRational& p, const ExtRational& q) const {
  auto it = values_.find(edge_key(p, q));
  return it == values_.end() ? 0.0 : it->second;
}

FanShears fan_shears(const ShearFunction& s, const ExtRational& tip) {
  IntegerMoebius B = fan_moebius(tip);
  FanShears out;
  for (const auto& [key, v] : s.support()) {
    if (key.first == tip)
      out[fan_index(tip, key.second, B)] = v;
    else if (key.second == tip)
      out[fan_index(tip, key.first, B)] = v;
  }
  return out;
}

double fan_field_eval(const FanShears& s, double x) {
  if (x >= 0 && x <= 1) return 0.0;
  double acc = 0.0;
  if (x > 1) {
    long n = static_cast<long>(std::ceil(x)) - 1;  // x in (n, n+1]
    for (auto it = s.lower_bound(1); it != s.end() && it->first <= n; ++it)
      acc += it->second * (x - it->first);
    return acc;
  }
  long n = static_cast<long>(std::ceil(-x)) - 1;  // x in [-n-1, -n)
  for (auto it = s.lower_bound(-n); it != s.end() && it->first <= 0; ++it)
    acc -= it->second * (x - it->first);
  return acc;
}

FieldExpr tip_field(const ExtRational& p, const ShearFunction& s, long window) {
  FieldExpr f;
  IntegerMoebius B = fan_moebius(p);
  for (const auto& [n, v] : fan_shears(s, p)) {
    if (std::labs(n) > window) continue;
    f.terms.emplace_back(0.5 * v, edge_descriptor(fan_edge(p, n, B)));
  }
  return f;
}

namespace {

struct TipLess {
  bool operator()(const std::pair<int, ExtRational>& x, const std::pair<int, ExtRational>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return circular_less(x.second, y.second);
  }
};

}  // namespace

std::vector<FanTerm> fan_terms(const ShearFunction& s, const Truncation& t) {
  if (t.max_order < 1) throw Error(Errc::invalid_argument, "max_order must be >= 1", "max_order");
  if (t.window < 0) throw Error(Errc::invalid_argument, "window must be >= 0", "window");
  std::map<std::pair<int, ExtRational>, std::vector<FanTerm>, TipLess> by_tip;
  std::map<ExtRational, IntegerMoebius, decltype(&circular_less)> cache(&circular_less);
  auto normaliser = [&](const ExtRational& p) -> const IntegerMoebius& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, fan_moebius(p)).first;
    return it->second;
  };
  for (const auto& [key, v] : s.support()) {
    if (v == 0.0) continue;
    for (int side = 0; side < 2; ++side) {
      const ExtRational& tip = side == 0 ? key.first : key.second;
      const ExtRational& other = side == 0 ? key.second : key.first;
      int ord = farey_order(tip);
      if (ord > t.max_order) continue;
      const IntegerMoebius& B = normaliser(tip);
      long n = fan_index(tip, other, B);
      if (std::labs(n) > t.window) continue;
      by_tip[{ord, tip}].push_back({tip, n, fan_edge(tip, n, B), 0.5 * v});
    }
  }
  std::vector<FanTerm> out;
  for (auto& [k, terms] : by_tip) {
    std::sort(terms.begin(), terms.end(),
              [](const FanTerm& a, const FanTerm& b) { return a.n < b.n; });
    out.insert(out.end(), terms.begin(), terms.end());
  }
  return out;
}

FieldExpr sum_field(const ShearFunction& s, const Truncation& t) {
  FieldExpr f;
  for (const FanTerm& term : fan_terms(s, t))
    f.terms.emplace_back(term.half_shear, edge_descriptor(term.edge));
  return f;
}

double sum_field_eval(const ShearFunction& s, const Truncation& t, double x) {
  return sum_field(s, t)(x);
}

double fan_separation() { return 2.0 * std::log1p(std::sqrt(2.0)); }

double tail_bound(int n, double C) {
  if (n < 1) throw Error(Errc::invalid_argument, "tail_bound needs n >= 1", "n");
  const double q = std::exp(-0.5 * fan_separation());
  const double g = 1.0 - q;
  return C * std::pow(q, n - 2) * (n / g + q / (g * g));
}

double zygmund_condition_value(const FanShears& s, long m, long k) {
  auto at = [&](long i) {
    auto it = s.find(i);
    return it == s.end() ? 0.0 : it->second;
  };
  double acc = at(m);
  for (long j = 1; j < k; ++j) acc += double(k - j) / double(k) * (at(m + j) + at(m - j));
  return acc;
}

ZygmundReport zygmund_condition_sup(const FanShears& s, long K) {
  ZygmundReport r;
  if (s.empty() || K < 1) return r;
  long lo = s.begin()->first - K, hi = s.rbegin()->first + K;
  long n = hi - lo + 1;
  std::vector<double> dense(static_cast<size_t>(n + 2 * K + 2), 0.0);
  long off = -lo + K + 1;
  for (const auto& [i, v] : s) dense[static_cast<size_t>(i + off)] = v;
  for (long m = lo; m <= hi; ++m) {
    // Running form: value_k = s(m) + sum_j (k-j)/k * pair_j, with
    // sum_j (k-j) pair_j = k*P_{k-1} - sum_j j*pair_j.
    double P = 0.0, J = 0.0, sm = dense[static_cast<size_t>(m + off)];
    for (long k = 1; k <= K; ++k) {
      double val = sm + (k * P - J) / k;
      if (std::fabs(val) > r.sup) {
        r.sup = std::fabs(val);
        r.m = m;
        r.k = k;
      }
      double pair = dense[static_cast<size_t>(m + k + off)] + dense[static_cast<size_t>(m - k + off)];
      P += pair;
      J += k * pair;
    }
  }
  return r;
}

ZygmundReport zygmund_condition_sup(const ShearFunction& s, const std::vector<ExtRational>& tips,
                                    long K) {
  // Group the support by tip in one pass instead of scanning it per tip.
  std::map<ExtRational, std::pair<IntegerMoebius, FanShears>, decltype(&circular_less)> fans(&circular_less);
  for (const ExtRational& p : tips) fans.try_emplace(p, fan_moebius(p), FanShears{});
  for (const auto& [key, v] : s.support())
    for (int side = 0; side < 2; ++side) {
      auto it = fans.find(side == 0 ? key.first : key.second);
      if (it == fans.end()) continue;
      auto& [B, fan] = it->second;
      fan[fan_index(it->first, side == 0 ? key.second : key.first, B)] = v;
    }
  ZygmundReport best;
  for (const ExtRational& p : tips) {
    ZygmundReport r = zygmund_condition_sup(fans.at(p).second, K);
    if (r.sup > best.sup) {
      best = r;
      best.tip = p;
    }
  }
  return best;
}

ZygmundReport zygmund_condition_sup(const ShearFunction& s, long K) {
  std::vector<ExtRational> tips;
  for (const auto& [key, v] : s.support()) {
    tips.push_back(key.first);
    tips.push_back(key.second);
  }
  std::sort(tips.begin(), tips.end(), circular_less);
  tips.erase(std::unique(tips.begin(), tips.end()), tips.end());
  return zygmund_condition_sup(s, tips, K);
}

double qs_ratio(const FanShears& s, long m, long k) {
  auto at = [&](long i) {
    auto it = s.find(i);
    return it == s.end() ? 0.0 : it->second;
  };
  double num = 1.0, den = 1.0, up = 0.0, down = 0.0;
  for (long j = 1; j <= k; ++j) {
    up += at(m + j);
    down -= at(m - j);
    num += std::exp(up);
    den += std::exp(down);
  }
  return std::exp(at(m)) * num / den;
}

ZygmundReport zygmund_quotient_sup(const Field& V, const std::vector<double>& xs,
                                   const std::vector<double>& ts) {
  ZygmundReport r;
  for (double x : xs) {
    double vx = V(x);
    for (double t : ts) {
      if (!(t > 0)) continue;
      double q = std::fabs(V(x + t) + V(x - t) - 2.0 * vx) / t;
      if (q > r.sup) {
        r.sup = q;
        r.x = x;
        r.t = t;
      }
    }
  }
  return r;
}

namespace {

struct Quadratic {
  double a2, a1, a0;
};

// Quadratic through (x_i, y_i); an infinite x_i fixes the x^2 coefficient to y_i.
Quadratic interpolant(double x1, double x2, double x3, double y1, double y2, double y3) {
  double xs[3] = {x1, x2, x3}, ys[3] = {y1, y2, y3};
  int inf_at = -1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j)
      if (xs[i] == xs[j] || (std::isinf(xs[i]) && std::isinf(xs[j])))
        throw Error(Errc::invalid_argument, "normalisation points must be distinct");
    if (std::isinf(xs[i])) inf_at = i;
  }
  if (inf_at >= 0) {
    double a2 = ys[inf_at];
    double p[2], q[2];
    int w = 0;
    for (int i = 0; i < 3; ++i)
      if (i != inf_at) {
        p[w] = xs[i];
        q[w] = ys[i] - a2 * xs[i] * xs[i];
        ++w;
      }
    double a1 = (q[1] - q[0]) / (p[1] - p[0]);
    return {a2, a1, q[0] - a1 * p[0]};
  }
  // Newton divided differences.
  double d01 = (y2 - y1) / (x2 - x1), d12 = (y3 - y2) / (x3 - x2);
  double a2 = (d12 - d01) / (x3 - x1);
  double a1 = d01 - a2 * (x1 + x2);
  double a0 = y1 - (a2 * x1 + a1) * x1;
  return {a2, a1, a0};
}

}  // namespace

FieldExpr normalize_at(const FieldExpr& V, double x1, double x2, double x3) {
  auto val = [&](double x) { return std::isinf(x) ? V.alpha : V(x); };
  Quadratic q = interpolant(x1, x2, x3, val(x1), val(x2), val(x3));
  FieldExpr out = V;
  out.alpha -= q.a2;
  out.beta -= q.a1;
  out.gamma -= q.a0;
  return out;
}

Field normalize_at(const Field& V, double x1, double x2, double x3) {
  auto val = [&](double x) { return std::isinf(x) ? V.quad_at_inf : V(x); };
  Quadratic q = interpolant(x1, x2, x3, val(x1), val(x2), val(x3));
  Field out;
  out.eval = [V, q](double x) { return V(x) - ((q.a2 * x + q.a1) * x + q.a0); };
  out.kinks = V.kinks;
  out.quad_at_inf = V.quad_at_inf - q.a2;
  return out;
}

double partial_sum_diag(const FanShears& s, long k, long n) {
  double acc = 0.0;
  for (long i = k; i <= k + n; ++i) {
    auto it = s.find(i);
    if (it != s.end()) acc += it->second;
  }
  return acc;
}

}  // namespace zs
