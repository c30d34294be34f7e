#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "errors.hpp"
#include "generators.hpp"
#include "hilbert.hpp"

#include <algorithm>
#include <cmath>

using namespace zs;
using zs::testing::field_of;
using zs::testing::Gen;

namespace {

const ExtRational inf = ExtRational::infinity();
ExtRational q(long long n, long long d = 1) { return ExtRational(BigInt(n), BigInt(d)); }

struct Frozen {
  Descriptor e;
  double x, h;
};

// Cauchy-weight quadrature of the partial-fraction kernel (tests/oracles/freeze_values.py).
const Frozen kFrozen[] = {
    {interval(2, 3), 5.2, 0.118140129341938},
    {interval(2, 3), 0.4, 0.00175719153411547},
    {interval(2, 3), 5.0, 0.116787941914831},
    {interval(-0.3, 0.6), 0.2, 0.0944397222564053},
    {interval(-4, -1.5), 2.5, 0.0267613186360574},
    {right_ray(0), M_E, 0.865255979432264},
    {right_ray(-1.5), -2.3, 1.09502874609203},
    {right_ray(2.5), 0.7, 0.0174880774350539},
    {left_ray(-1.5), -2.3, 1.09502874609202},
    {left_ray(1), -3.0, -1.76508480122121},
    {left_ray(3.5), 1.7, -0.0741820104863081},
};

Field quadratic(double a, double b, double c) {
  return Field{[=](double x) { return a * x * x + b * x + c; }, {}, a};
}

Field sum(const Field& u, const Field& v) {
  Field f{[u, v](double x) { return u(x) + v(x); }, u.kinks, u.quad_at_inf + v.quad_at_inf};
  f.kinks.insert(f.kinks.end(), v.kinks.begin(), v.kinks.end());
  return f;
}

}  // namespace

TEST_CASE("closed forms match frozen Cauchy-weight values") {
  for (const auto& f : kFrozen) CHECK(elementary_hilbert(f.e, f.x) == doctest::Approx(f.h).epsilon(1e-9).scale(1.0));
  CHECK(elementary_hilbert(right_ray(0), M_E) == doctest::Approx(M_E / M_PI).epsilon(1e-14));
}

TEST_CASE("principal-value oracle matches frozen values") {
  for (const auto& f : kFrozen) {
    OracleResult r = hilbert_pv_oracle(field_of(f.e), f.x);
    CHECK(r.value == doctest::Approx(f.h).epsilon(1e-8).scale(1.0));
    CHECK(r.residual < 1e-6);
  }
}

TEST_CASE("closed forms vanish at 0 and 1 and agree with the oracle on random fields") {
  Gen g(31);
  for (int i = 0; i < 40; ++i) {
    double a = g.uniform(-4, 4), b = g.uniform(-4, 4);
    if (std::fabs(a - b) < 0.1) continue;
    Descriptor e = g.coin() ? interval(std::min(a, b), std::max(a, b)) : (g.coin() ? right_ray(a) : left_ray(a));
    CHECK(elementary_hilbert(e, 0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(elementary_hilbert(e, 1.0) == doctest::Approx(0.0).scale(1.0));
    double x = g.uniform(-5, 5);
    CHECK(elementary_hilbert(e, x) == doctest::Approx(hilbert_pv_oracle(field_of(e), x).value).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("oracle stays accurate when x approaches a pole") {
  const Descriptor fields[3] = {right_ray(0.0), interval(0.5, 1.0), left_ray(1.0)};
  for (const Descriptor& e : fields)
    for (double x : {1e-7, -1e-7, 1.0 - 1e-7, 1.0 + 1e-6, 0.5 + 1e-9})
      CHECK(hilbert_pv_oracle(field_of(e), x).value == doctest::Approx(elementary_hilbert(e, x)).epsilon(1e-10).scale(1.0));
}

TEST_CASE("oracle edge cases") {
  Field zero{[](double) { return 0.0; }, {}, 0.0};
  CHECK(hilbert_pv_oracle(zero, 2.5).value == 0.0);
  CHECK(hilbert_pv_oracle(field_of(right_ray(0.3)), 0.0).value == 0.0);
  CHECK(hilbert_pv_oracle(field_of(right_ray(0.3)), 1.0).value == 0.0);
  CHECK_THROWS_AS(hilbert_pv_oracle(quadratic(1, 0, 0), 2.0), Error);
}

TEST_CASE("shear recovery") {
  Gen g(32);
  for (int i = 0; i < 100; ++i) {
    Quadrilateral Q = g.quadrilateral();
    Field p = quadratic(g.uniform(-2, 2), g.uniform(-2, 2), g.uniform(-2, 2));
    CHECK(shear_recover(p, Q) == doctest::Approx(0.0).scale(1.0));
    Field diag = field_of(geodesic_descriptor(Q.b, Q.d));
    CHECK(shear_recover(diag, Q) == doctest::Approx(1.0));
    CHECK(shear_recover(sum(diag, p), Q) == doctest::Approx(1.0));
  }
  Field xlog{[](double x) { return x == 0 ? 0.0 : x * std::log(std::fabs(x)); }, {0.0}, 0.0};
  CHECK(shear_recover(xlog, Quadrilateral{-1, 0, 2, kInf}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("Δ-weight examples") {
  // Edge (0,∞) seen from the quadrilateral of (1,3): the four sides sit at
  // known hyperbolic distances.
  FareyQuad fq = farey_quadrilateral(q(1), inf);
  Quadrilateral Q = to_doubles(fq);
  Geodesic diag{Q.b, Q.d};
  CHECK(delta_weight(diag, Q) == doctest::Approx(delta_weight_hyperbolic(diag, Q)));
  Geodesic far{-5.0, -4.0};
  CHECK(delta_weight(far, Q) == doctest::Approx(delta_weight_hyperbolic(far, Q)));
}

TEST_CASE("Δ-weight: bracket and hyperbolic routes agree") {
  Gen g(33);
  int checked = 0, crossing = 0;
  for (int i = 0; i < 400; ++i) {
    Quadrilateral Q = g.quadrilateral();
    Geodesic e;
    switch (g.integer(0, 3)) {
      case 0: e = {g.uniform(-6, 6), g.uniform(-6, 6)}; break;
      case 1: e = {Q.b, Q.d}; break;
      case 2: e = {Q.a, Q.c}; break;
      default: {
        const double v[4] = {Q.a, Q.b, Q.c, Q.d};
        e = {v[g.integer(0, 3)], g.uniform(-6, 6)};
      }
    }
    if (e.initial == e.terminal || std::fabs(e.initial - e.terminal) < 1e-3) continue;
    double hyp;
    try {
      hyp = delta_weight_hyperbolic(e, Q);
    } catch (const Error& err) {
      CHECK(err.code() == Errc::domain);
      ++crossing;
      continue;
    }
    CHECK(delta_weight(e, Q) == doctest::Approx(hyp).epsilon(1e-8).scale(1.0));
    ++checked;
  }
  CHECK(checked > 200);
  CHECK(crossing > 0);
}

TEST_CASE("Δ-weight is Möbius invariant") {
  Gen g(34);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Quadrilateral Q = g.quadrilateral(0.0, 3.0);
    Geodesic e{g.uniform(-4, 4), g.uniform(-4, 4)};
    if (std::fabs(e.initial - e.terminal) < 1e-2) continue;
    RealMoebius B = g.moebius();
    Quadrilateral BQ{B(Q.a), B(Q.b), B(Q.c), B(Q.d)};
    Geodesic Be{B(e.initial), B(e.terminal)};
    double w;
    try {
      w = delta_weight_hyperbolic(e, Q);
    } catch (const Error&) {
      continue;
    }
    CHECK(delta_weight_hyperbolic(Be, BQ) == doctest::Approx(w).epsilon(1e-8).scale(1.0));
    CHECK(delta_weight(Be, BQ) == doctest::Approx(w).epsilon(1e-7).scale(1.0));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("series evaluation matches edge-by-edge closed form") {
  Gen g(35);
  for (int i = 0; i < 20; ++i) {
    ShearFunction s = zs::testing::random_shear(g, 6, 5);
    for (int k = 0; k < 10; ++k) {
      double x = g.uniform(-4, 4);
      CHECK(hilbert_series_eval(s, Truncation{8, 64}, x) ==
            doctest::Approx(hilbert_closed_eval(s, x)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("series evaluation matches the oracle on the summed field") {
  Gen g(36);
  for (int i = 0; i < 6; ++i) {
    ShearFunction s = zs::testing::random_shear(g, 4, 4);
    Field V = sum_field(s, Truncation{8, 64}).as_field();
    for (double x : {-2.7, 0.35, 1.8, 4.4}) {
      OracleResult r = hilbert_pv_oracle(V, x);
      CHECK(hilbert_series_eval(s, Truncation{8, 64}, x) == doctest::Approx(r.value).epsilon(1e-4).scale(1.0));
    }
  }
}

TEST_CASE("H(s) on a Farey edge") {
  ShearFunction one;
  one.set(q(0), inf, 1.0);
  ShearSeries r = hilbert_shear_series(one, q(0), inf, Truncation{6, 32});
  CHECK(r.by_order.size() == 6);
  CHECK(r.value == doctest::Approx(r.by_order.back()));
  // A single shear is picked up by the order-1 tips already.
  for (double v : r.by_order) CHECK(v == doctest::Approx(r.value));

  Gen g(37);
  const Truncation t{6, 32};
  const auto edges = zs::testing::edges_up_to(4);
  for (int i = 0; i < 10; ++i) {
    ShearFunction s = zs::testing::random_shear(g, 5, 4);
    const auto& [b, d] = g.pick(edges);
    Quadrilateral Q = to_doubles(farey_quadrilateral(b, d));
    double direct = shear_recover(hilbert_series_field(s, t), Q);
    CHECK(hilbert_shear_series(s, b, d, t).value == doctest::Approx(direct).epsilon(1e-6).scale(1.0));
  }
  CHECK_THROWS_AS(hilbert_shear_series(one, q(0), q(2), t), Error);
}
