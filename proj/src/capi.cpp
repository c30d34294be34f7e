#include "zygshear/zygshear.h"

#include "errors.hpp"
#include "fourier.hpp"
#include "hilbert.hpp"
#include "shear_io.hpp"
#include "wp_surface.hpp"

#include <cmath>
#include <limits>
#include <new>
#include <string>

struct zs_shear {
  zs::ShearFunction fn;
};

namespace {

struct LastError {
  std::string message, field;
  long line = 0;
};

thread_local LastError g_error;

zs_status fail(zs_status code, std::string message, std::string field = {}, long line = 0) {
  g_error = {std::move(message), std::move(field), line};
  return code;
}

zs_status map_code(zs::Errc c) {
  switch (c) {
    case zs::Errc::invalid_argument: return ZS_ERR_INVALID_ARG;
    case zs::Errc::not_farey: return ZS_ERR_NOT_FAREY;
    case zs::Errc::duplicate: return ZS_ERR_DUPLICATE;
    case zs::Errc::parse: return ZS_ERR_PARSE;
    case zs::Errc::domain: return ZS_ERR_DOMAIN;
    case zs::Errc::no_convergence: return ZS_ERR_NO_CONVERGENCE;
    case zs::Errc::overflow: return ZS_ERR_OVERFLOW;
  }
  return ZS_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes and the last error.
template <class F>
zs_status guarded(F&& f) {
  g_error = {};
  try {
    return f();
  } catch (const zs::Error& e) {
    return fail(map_code(e.code()), e.what(), e.field(), e.line());
  } catch (const std::bad_alloc&) {
    return fail(ZS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZS_ERR_INTERNAL, e.what());
  }
}

zs::ExtRational from_c(zs_rat r, const char* field) {
  if (r.num == 0 && r.den == 0) throw zs::Error(zs::Errc::invalid_argument, "0/0 is not a point", field);
  return zs::ExtRational(zs::BigInt(r.num), zs::BigInt(r.den));
}

int64_t narrow(const zs::BigInt& v) {
  if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
    throw zs::Error(zs::Errc::overflow, "value does not fit in 64 bits");
  return static_cast<int64_t>(v);
}

zs_rat to_c(const zs::ExtRational& x) { return {narrow(x.num()), narrow(x.den())}; }

zs_edge to_c(const zs::FareyEdge& e) { return {to_c(e.initial), to_c(e.terminal)}; }

zs::Truncation from_c(zs_truncation t) {
  if (t.max_order < 1 || t.max_order > 26)
    throw zs::Error(zs::Errc::invalid_argument, "max_order must be in 1..26", "max_order");
  if (t.window < 0) throw zs::Error(zs::Errc::invalid_argument, "window must be >= 0", "window");
  return {t.max_order, static_cast<long>(t.window)};
}

template <class T>
void need(const T* p, const char* name) {
  if (p == nullptr) throw zs::Error(zs::Errc::invalid_argument, std::string(name) + " is NULL", name);
}

// Two-call buffer protocol.
zs_status deliver(size_t needed, size_t cap, size_t* count, bool has_buffer) {
  *count = needed;
  if (has_buffer && cap < needed)
    return fail(ZS_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + ", need " +
                                             std::to_string(needed));
  return ZS_OK;
}

}  // namespace

extern "C" {

const char* zs_version(void) { return "1.0.0"; }

const char* zs_status_name(zs_status s) {
  switch (s) {
    case ZS_OK: return "ok";
    case ZS_ERR_INVALID_ARG: return "invalid_argument";
    case ZS_ERR_NOT_FAREY: return "not_farey";
    case ZS_ERR_DUPLICATE: return "duplicate";
    case ZS_ERR_PARSE: return "parse";
    case ZS_ERR_DOMAIN: return "domain";
    case ZS_ERR_NO_CONVERGENCE: return "no_convergence";
    case ZS_ERR_OVERFLOW: return "overflow";
    case ZS_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case ZS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* zs_last_error(void) { return g_error.message.c_str(); }
const char* zs_last_error_field(void) { return g_error.field.c_str(); }
long zs_last_error_line(void) { return g_error.line; }

zs_status zs_shear_create(zs_shear** out) {
  return guarded([&] {
    need(out, "out");
    *out = new zs_shear{};
    return ZS_OK;
  });
}

zs_status zs_shear_from_json(const char* text, zs_shear** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    auto fn = zs::parse_shear_json(text);
    *out = new zs_shear{std::move(fn)};
    return ZS_OK;
  });
}

zs_status zs_shear_set(zs_shear* s, zs_rat p, zs_rat q, double value) {
  return guarded([&] {
    need(s, "shear");
    if (!std::isfinite(value)) throw zs::Error(zs::Errc::invalid_argument, "value must be finite", "value");
    s->fn.set(from_c(p, "p"), from_c(q, "q"), value);
    return ZS_OK;
  });
}

zs_status zs_shear_size(const zs_shear* s, size_t* out) {
  return guarded([&] {
    need(s, "shear");
    need(out, "out");
    *out = s->fn.size();
    return ZS_OK;
  });
}

zs_status zs_shear_edges(const zs_shear* s, zs_edge* edges, double* values, size_t cap, size_t* count) {
  return guarded([&] {
    need(s, "shear");
    need(count, "count");
    zs_status st = deliver(s->fn.size(), cap, count, edges != nullptr || values != nullptr);
    if (st != ZS_OK || (edges == nullptr && values == nullptr)) return st;
    size_t i = 0;
    for (const auto& [key, v] : s->fn.support()) {
      if (edges) edges[i] = to_c(zs::orient_from_base(key.first, key.second));
      if (values) values[i] = v;
      ++i;
    }
    return ZS_OK;
  });
}

void zs_shear_destroy(zs_shear* s) { delete s; }

zs_status zs_farey_order(zs_rat p, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = zs::farey_order(from_c(p, "p"));
    return ZS_OK;
  });
}

zs_status zs_farey_vertices(int max_order, zs_rat* out, size_t cap, size_t* count) {
  return guarded([&] {
    need(count, "count");
    auto v = zs::enumerate_vertices(max_order);
    zs_status st = deliver(v.size(), cap, count, out != nullptr);
    if (st != ZS_OK || out == nullptr) return st;
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_c(v[i]);
    return ZS_OK;
  });
}

zs_status zs_fan_edges(zs_rat tip, int64_t n_lo, int64_t n_hi, zs_edge* out, size_t cap, size_t* count) {
  return guarded([&] {
    need(count, "count");
    if (n_hi < n_lo) throw zs::Error(zs::Errc::invalid_argument, "n_hi < n_lo", "n_hi");
    if (n_hi - n_lo > 1000000) throw zs::Error(zs::Errc::invalid_argument, "index range too large", "n_hi");
    auto e = zs::fan_edges(from_c(tip, "tip"), static_cast<long>(n_lo), static_cast<long>(n_hi));
    zs_status st = deliver(e.size(), cap, count, out != nullptr);
    if (st != ZS_OK || out == nullptr) return st;
    for (size_t i = 0; i < e.size(); ++i) out[i] = to_c(e[i]);
    return ZS_OK;
  });
}

zs_status zs_fan_moebius(zs_rat tip, int64_t out[4]) {
  return guarded([&] {
    need(out, "out");
    zs::IntegerMoebius B = zs::fan_moebius(from_c(tip, "tip"));
    out[0] = narrow(B.a);
    out[1] = narrow(B.b);
    out[2] = narrow(B.c);
    out[3] = narrow(B.d);
    return ZS_OK;
  });
}

zs_status zs_field_eval(const zs_shear* s, zs_truncation t, const double* xs, size_t n, double* out) {
  return guarded([&] {
    need(s, "shear");
    if (n > 0) {
      need(xs, "xs");
      need(out, "out");
    }
    zs::FieldExpr f = zs::sum_field(s->fn, from_c(t));
    for (size_t i = 0; i < n; ++i) out[i] = f(xs[i]);
    return ZS_OK;
  });
}

zs_status zs_tail_bound(int n, double C, double* out) {
  return guarded([&] {
    need(out, "out");
    if (!(C >= 0) || !std::isfinite(C)) throw zs::Error(zs::Errc::invalid_argument, "C must be finite and >= 0", "C");
    *out = zs::tail_bound(n, C);
    return ZS_OK;
  });
}

zs_status zs_zygmund_check(const zs_shear* s, int64_t K, zs_zygmund_report* out) {
  return guarded([&] {
    need(s, "shear");
    need(out, "out");
    if (K < 1) throw zs::Error(zs::Errc::invalid_argument, "K must be >= 1", "K");
    zs::ZygmundReport r = zs::zygmund_condition_sup(s->fn, static_cast<long>(K));
    *out = {r.sup, to_c(r.tip), r.m, r.k};
    return ZS_OK;
  });
}

zs_status zs_hilbert_eval(const zs_shear* s, zs_truncation t, zs_hilbert_mode mode, const double* xs,
                          size_t n, double* out, double* residual) {
  return guarded([&] {
    need(s, "shear");
    if (n > 0) {
      need(xs, "xs");
      need(out, "out");
    }
    zs::Truncation tr = from_c(t);
    switch (mode) {
      case ZS_HILBERT_CLOSED:
        for (size_t i = 0; i < n; ++i) {
          out[i] = zs::hilbert_closed_eval(s->fn, xs[i]);
          if (residual) residual[i] = 0.0;
        }
        break;
      case ZS_HILBERT_SERIES: {
        zs::Field h = zs::hilbert_series_field(s->fn, tr);
        for (size_t i = 0; i < n; ++i) {
          out[i] = h(xs[i]);
          if (residual) residual[i] = 0.0;
        }
        break;
      }
      case ZS_HILBERT_ORACLE: {
        zs::Field V = zs::sum_field(s->fn, tr).as_field();
        for (size_t i = 0; i < n; ++i) {
          zs::OracleResult r = zs::hilbert_pv_oracle(V, xs[i]);
          out[i] = r.value;
          if (residual) residual[i] = r.residual;
        }
        break;
      }
      default:
        throw zs::Error(zs::Errc::invalid_argument, "unknown Hilbert mode", "mode");
    }
    return ZS_OK;
  });
}

zs_status zs_hilbert_shear(const zs_shear* s, zs_truncation t, zs_rat b, zs_rat d, double* value,
                           double* by_order) {
  return guarded([&] {
    need(s, "shear");
    need(value, "value");
    zs::ExtRational pb = from_c(b, "b"), pd = from_c(d, "d");
    if (pb == pd || !zs::farey_adjacent(pb, pd))
      throw zs::Error(zs::Errc::not_farey, "(b, d) is not a Farey edge", "edge");
    zs::ShearSeries r = zs::hilbert_shear_series(s->fn, pb, pd, from_c(t));
    *value = r.value;
    if (by_order)
      for (size_t k = 0; k < r.by_order.size(); ++k) by_order[k] = r.by_order[k];
    return ZS_OK;
  });
}

zs_status zs_delta_weight(const double e[2], const double q[4], zs_delta_route route, double* out) {
  return guarded([&] {
    need(e, "e");
    need(q, "q");
    need(out, "out");
    zs::Geodesic g{e[0], e[1]};
    zs::Quadrilateral Q{q[0], q[1], q[2], q[3]};
    if (route == ZS_DELTA_BRACKET)
      *out = zs::delta_weight(g, Q);
    else if (route == ZS_DELTA_HYPERBOLIC)
      *out = zs::delta_weight_hyperbolic(g, Q);
    else
      throw zs::Error(zs::Errc::invalid_argument, "unknown route", "route");
    return ZS_OK;
  });
}

zs_status zs_fourier(const zs_shear* s, zs_truncation t, int64_t n, double* re, double* im) {
  return guarded([&] {
    need(s, "shear");
    need(re, "re");
    need(im, "im");
    zs::cplx c = zs::field_fourier(s->fn, from_c(t), static_cast<long>(n));
    *re = c.real();
    *im = c.imag();
    return ZS_OK;
  });
}

zs_status zs_cusp_condition(const double t[3], int* holds) {
  return guarded([&] {
    need(t, "t");
    need(holds, "holds");
    *holds = zs::cusp_condition_check({t[0], t[1], t[2]}) ? 1 : 0;
    return ZS_OK;
  });
}

zs_status zs_wp_pair(const double t1[3], const double t2[3], int depth, double* out) {
  return guarded([&] {
    need(t1, "t1");
    need(t2, "t2");
    need(out, "out");
    *out = zs::wp_pairing({t1[0], t1[1], t1[2]}, {t2[0], t2[1], t2[2]}, depth);
    return ZS_OK;
  });
}

zs_status zs_wp_gram(int depth, zs_wp_gram_result* out) {
  return guarded([&] {
    need(out, "out");
    zs::WpGram g = zs::wp_gram(depth);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 3; ++j) out->basis[i][j] = g.basis[i][j];
      for (int j = 0; j < 2; ++j) {
        out->gram[i][j] = g.gram[i][j];
        out->gram_prev[i][j] = g.gram_prev[i][j];
      }
      out->eigenvalues[i] = g.eigenvalues[i];
    }
    out->asymmetry = g.asymmetry;
    return ZS_OK;
  });
}

}  // extern "C"
