// Command-line front end over the zygshear C API.
#include "zygshear/zygshear.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

// Raised on any library or input failure; becomes the error JSON on stderr.
struct Failure {
  std::string status, message, field;
  long line = 0;
};

void check(zs_status st) {
  if (st != ZS_OK) throw Failure{zs_status_name(st), zs_last_error(), zs_last_error_field(), zs_last_error_line()};
}

std::string fmt(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Compact JSON with 17 significant digits for every float.
void emit(std::ostream& os, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      os << '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ',';
        first = false;
        os << Json(k).dump() << ':';
        emit(os, v);
      }
      os << '}';
      break;
    }
    case Json::value_t::array: {
      os << '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',';
        emit(os, j[i]);
      }
      os << ']';
      break;
    }
    case Json::value_t::number_float:
      os << fmt(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

std::string rat_str(zs_rat r) {
  if (r.den == 0) return "inf";
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Json rat_json(zs_rat r) { return Json::array({r.num, r.den}); }

zs_rat parse_rat(const std::string& text, const std::string& field) {
  try {
    if (text == "inf" || text == "oo") return {1, 0};
    size_t slash = text.find('/');
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, 1};
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    long long n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    long long d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {n, d};
  } catch (const std::logic_error&) {
    throw Failure{"invalid_argument", "cannot read a rational from '" + text + "'", field};
  }
}

struct Output {
  std::string format = "csv";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure{"invalid_argument", "cannot write '" + path + "'", "--output"};
    f << text;
  }
};

struct Truncation {
  int max_order = 8;
  long long window = 64;
  zs_truncation c() const { return {max_order, window}; }
};

Json meta(const std::string& command) {
  Json m;
  m["version"] = zs_version();
  m["command"] = command;
  return m;
}

void add_truncation(Json& m, const Truncation& t) {
  m["max_order"] = t.max_order;
  m["window"] = t.window;
}

std::string envelope(const Json& m, const Json& data) {
  std::ostringstream os;
  emit(os, Json{{"meta", m}, {"data", data}});
  os << '\n';
  return os.str();
}

struct ShearHandle {
  zs_shear* p = nullptr;
  ~ShearHandle() { zs_shear_destroy(p); }
};

void load_shears(const std::string& path, ShearHandle& h) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{"invalid_argument", "cannot read '" + path + "'", "--shears"};
  std::stringstream ss;
  ss << f.rdbuf();
  check(zs_shear_from_json(ss.str().c_str(), &h.p));
}

std::vector<double> sample_points(const std::vector<double>& xs, const std::string& grid) {
  if (!xs.empty() && !grid.empty())
    throw Failure{"invalid_argument", "give either --x or --grid", "--grid"};
  if (!grid.empty()) {
    double lo, hi;
    long n;
    char c1, c2, extra;
    if (std::sscanf(grid.c_str(), "%lf%c%lf%c%ld%c", &lo, &c1, &hi, &c2, &n, &extra) != 5 || c1 != ':' ||
        c2 != ':' || n < 1 || n > 10000000 || !(hi >= lo))
      throw Failure{"invalid_argument", "grid must be lo:hi:n with lo <= hi and n >= 1", "--grid"};
    std::vector<double> out(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    return out;
  }
  if (xs.empty()) throw Failure{"invalid_argument", "no sample points; use --x or --grid", "--x"};
  return xs;
}

void check_format(const Output& out) {
  if (out.format != "csv" && out.format != "json")
    throw Failure{"invalid_argument", "format must be csv or json", "--format"};
}

std::vector<double> parse_triple(const std::string& text, const std::string& field) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Failure{"invalid_argument", "cannot read a number from '" + item + "'", field};
    }
  }
  if (v.size() != 3) throw Failure{"invalid_argument", "expected three comma-separated numbers", field};
  return v;
}

// ---- subcommands ----

void farey_vertices(int max_order, const Output& out) {
  size_t n = 0;
  check(zs_farey_vertices(max_order, nullptr, 0, &n));
  std::vector<zs_rat> v(n);
  check(zs_farey_vertices(max_order, v.data(), n, &n));
  if (out.format == "csv") {
    std::string s = "index,vertex,num,den,order\n";
    for (size_t i = 0; i < n; ++i) {
      int ord = 0;
      check(zs_farey_order(v[i], &ord));
      s += std::to_string(i) + "," + rat_str(v[i]) + "," + std::to_string(v[i].num) + "," +
           std::to_string(v[i].den) + "," + std::to_string(ord) + "\n";
    }
    out.write(s);
    return;
  }
  Json m = meta("farey vertices");
  m["max_order"] = max_order;
  Json data = Json::array();
  for (const zs_rat& r : v) {
    int ord = 0;
    check(zs_farey_order(r, &ord));
    data.push_back({{"vertex", rat_json(r)}, {"order", ord}});
  }
  out.write(envelope(m, data));
}

void farey_edges(const std::string& tip_text, long long lo, long long hi, const Output& out) {
  zs_rat tip = parse_rat(tip_text, "--tip");
  size_t n = 0;
  check(zs_fan_edges(tip, lo, hi, nullptr, 0, &n));
  std::vector<zs_edge> e(n);
  check(zs_fan_edges(tip, lo, hi, e.data(), n, &n));
  if (out.format == "csv") {
    std::string s = "n,initial,terminal\n";
    for (size_t i = 0; i < n; ++i)
      s += std::to_string(lo + static_cast<long long>(i)) + "," + rat_str(e[i].initial) + "," +
           rat_str(e[i].terminal) + "\n";
    out.write(s);
    return;
  }
  Json m = meta("farey edges");
  m["tip"] = rat_json(tip);
  Json data = Json::array();
  for (size_t i = 0; i < n; ++i) {
    const zs_edge& x = e[i];
    data.push_back({{"n", lo + static_cast<long long>(i)},
                    {"edge", Json::array({x.initial.num, x.initial.den, x.terminal.num, x.terminal.den})}});
  }
  out.write(envelope(m, data));
}

void field_eval(const std::string& shears, const Truncation& t, long long K, const std::vector<double>& xs,
                const Output& out) {
  ShearHandle h;
  load_shears(shears, h);
  std::vector<double> v(xs.size());
  check(zs_field_eval(h.p, t.c(), xs.data(), xs.size(), v.data()));
  zs_zygmund_report rep{};
  double C = 0.0;
  size_t sz = 0;
  check(zs_shear_size(h.p, &sz));
  if (sz > 0) {
    check(zs_zygmund_check(h.p, K, &rep));
    C = rep.sup;
  }
  double bound = 0.0;
  check(zs_tail_bound(t.max_order + 1, C, &bound));
  if (out.format == "csv") {
    std::string s = "x,value,max_order,window,tail_bound\n";
    for (size_t i = 0; i < xs.size(); ++i)
      s += fmt(xs[i]) + "," + fmt(v[i]) + "," + std::to_string(t.max_order) + "," + std::to_string(t.window) +
           "," + fmt(bound) + "\n";
    out.write(s);
    return;
  }
  Json m = meta("field eval");
  add_truncation(m, t);
  m["zygmund_constant"] = C;
  m["tail_bound"] = bound;
  Json data = Json::array();
  for (size_t i = 0; i < xs.size(); ++i) data.push_back({{"x", xs[i]}, {"value", v[i]}});
  out.write(envelope(m, data));
}

void zygmund_check(const std::string& shears, long long K, const Output& out) {
  ShearHandle h;
  load_shears(shears, h);
  size_t sz = 0;
  check(zs_shear_size(h.p, &sz));
  zs_zygmund_report rep{0.0, {0, 1}, 0, 0};
  if (sz > 0) check(zs_zygmund_check(h.p, K, &rep));
  if (out.format == "csv") {
    out.write("sup,tip,m,k,K\n" + fmt(rep.sup) + "," + rat_str(rep.tip) + "," + std::to_string(rep.m) + "," +
              std::to_string(rep.k) + "," + std::to_string(K) + "\n");
    return;
  }
  Json m = meta("zygmund check");
  m["K"] = K;
  out.write(envelope(m, {{"sup", rep.sup}, {"tip", rat_json(rep.tip)}, {"m", rep.m}, {"k", rep.k}}));
}

void hilbert_eval(const std::string& shears, const Truncation& t, const std::string& mode_name,
                  const std::vector<double>& xs, const Output& out) {
  zs_hilbert_mode mode;
  if (mode_name == "closed") mode = ZS_HILBERT_CLOSED;
  else if (mode_name == "series") mode = ZS_HILBERT_SERIES;
  else if (mode_name == "oracle") mode = ZS_HILBERT_ORACLE;
  else throw Failure{"invalid_argument", "mode must be closed, series or oracle", "--mode"};
  ShearHandle h;
  load_shears(shears, h);
  std::vector<double> v(xs.size()), res(xs.size());
  check(zs_hilbert_eval(h.p, t.c(), mode, xs.data(), xs.size(), v.data(), res.data()));
  if (out.format == "csv") {
    std::string s = "x,value,residual,mode,max_order,window\n";
    for (size_t i = 0; i < xs.size(); ++i)
      s += fmt(xs[i]) + "," + fmt(v[i]) + "," + fmt(res[i]) + "," + mode_name + "," + std::to_string(t.max_order) +
           "," + std::to_string(t.window) + "\n";
    out.write(s);
    return;
  }
  Json m = meta("hilbert eval");
  m["mode"] = mode_name;
  add_truncation(m, t);
  Json data = Json::array();
  for (size_t i = 0; i < xs.size(); ++i) data.push_back({{"x", xs[i]}, {"value", v[i]}, {"residual", res[i]}});
  out.write(envelope(m, data));
}

void hilbert_shear(const std::string& shears, const Truncation& t, const std::string& edge, const Output& out) {
  size_t comma = edge.find(',');
  if (comma == std::string::npos) throw Failure{"invalid_argument", "edge must be b,d", "--edge"};
  zs_rat b = parse_rat(edge.substr(0, comma), "--edge"), d = parse_rat(edge.substr(comma + 1), "--edge");
  ShearHandle h;
  load_shears(shears, h);
  double value = 0.0;
  std::vector<double> by_order(static_cast<size_t>(std::max(t.max_order, 1)));
  check(zs_hilbert_shear(h.p, t.c(), b, d, &value, by_order.data()));
  if (out.format == "csv") {
    std::string s = "order,partial_value,b,d,window\n";
    for (size_t k = 0; k < by_order.size(); ++k)
      s += std::to_string(k + 1) + "," + fmt(by_order[k]) + "," + rat_str(b) + "," + rat_str(d) + "," +
           std::to_string(t.window) + "\n";
    out.write(s);
    return;
  }
  Json m = meta("hilbert shear");
  add_truncation(m, t);
  Json partial = Json::array();
  for (double x : by_order) partial.push_back(x);
  out.write(envelope(m, {{"edge", Json::array({rat_json(b), rat_json(d)})},
                         {"value", value},
                         {"partial_by_order", partial}}));
}

void fourier(const std::string& shears, const Truncation& t, const std::string& range, const Output& out) {
  long long lo = 0, hi = 0;
  char extra;
  if (std::sscanf(range.c_str(), "%lld..%lld%c", &lo, &hi, &extra) != 2) {
    if (std::sscanf(range.c_str(), "%lld%c", &lo, &extra) != 1)
      throw Failure{"invalid_argument", "n must be an integer or lo..hi", "--n"};
    hi = lo;
  }
  if (hi < lo || hi - lo > 100000) throw Failure{"invalid_argument", "n range must satisfy lo <= hi", "--n"};
  ShearHandle h;
  load_shears(shears, h);
  std::vector<std::pair<double, double>> c;
  for (long long n = lo; n <= hi; ++n) {
    double re = 0, im = 0;
    check(zs_fourier(h.p, t.c(), n, &re, &im));
    c.emplace_back(re, im);
  }
  if (out.format == "csv") {
    std::string s = "n,re,im,max_order,window\n";
    for (long long n = lo; n <= hi; ++n) {
      const auto& [re, im] = c[static_cast<size_t>(n - lo)];
      s += std::to_string(n) + "," + fmt(re) + "," + fmt(im) + "," + std::to_string(t.max_order) + "," +
           std::to_string(t.window) + "\n";
    }
    out.write(s);
    return;
  }
  Json m = meta("fourier");
  add_truncation(m, t);
  Json data = Json::array();
  for (long long n = lo; n <= hi; ++n) {
    const auto& [re, im] = c[static_cast<size_t>(n - lo)];
    data.push_back({{"n", n},
                    {"re", re},
                    {"im", im},
                    {"truncation", {{"max_order", t.max_order}, {"window", t.window}}}});
  }
  out.write(envelope(m, data));
}

void wp_pair(const std::string& a, const std::string& b, int depth, const Output& out) {
  auto t1 = parse_triple(a, "--t1"), t2 = parse_triple(b, "--t2");
  double v = 0, prev = 0;
  check(zs_wp_pair(t1.data(), t2.data(), depth, &v));
  if (depth > 0) check(zs_wp_pair(t1.data(), t2.data(), depth - 1, &prev));
  if (out.format == "csv") {
    out.write("value,depth,value_prev_depth\n" + fmt(v) + "," + std::to_string(depth) + "," +
              (depth > 0 ? fmt(prev) : std::string()) + "\n");
    return;
  }
  Json m = meta("wp pair");
  m["depth"] = depth;
  Json data{{"t1", t1}, {"t2", t2}, {"value", v}};
  data["value_prev_depth"] = depth > 0 ? Json(prev) : Json(nullptr);
  out.write(envelope(m, data));
}

void wp_gram(int depth, const Output& out) {
  zs_wp_gram_result g{};
  check(zs_wp_gram(depth, &g));
  if (out.format == "csv") {
    std::string s = "depth,i,j,gram,gram_prev_depth\n";
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        s += std::to_string(depth) + "," + std::to_string(i) + "," + std::to_string(j) + "," + fmt(g.gram[i][j]) +
             "," + fmt(g.gram_prev[i][j]) + "\n";
    out.write(s);
    return;
  }
  auto mat = [](const double m[2][2]) {
    return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
  };
  Json basis = Json::array();
  for (const auto& b : g.basis) basis.push_back(Json::array({b[0], b[1], b[2]}));
  Json m = meta("wp gram");
  m["depth"] = depth;
  out.write(envelope(m, {{"basis", basis},
                         {"gram", mat(g.gram)},
                         {"eigenvalues", Json::array({g.eigenvalues[0], g.eigenvalues[1]})},
                         {"asymmetry", g.asymmetry},
                         {"depth_prev_gram", mat(g.gram_prev)}}));
}

void print_failure(const Failure& f) {
  Json e{{"status", f.status}, {"message", f.message}};
  if (!f.field.empty()) e["field"] = f.field;
  if (f.line > 0) e["line"] = f.line;
  std::ostringstream os;
  emit(os, Json{{"error", e}});
  std::cerr << os.str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zygshear: Zygmund fields, Hilbert transforms, Fourier coefficients and the Weil-Petersson pairing "
      "from infinitesimal shears on the Farey tessellation.\n"
      "CSV columns:\n"
      "  farey vertices: index,vertex,num,den,order\n"
      "  farey edges:    n,initial,terminal\n"
      "  field eval:     x,value,max_order,window,tail_bound\n"
      "  zygmund check:  sup,tip,m,k,K\n"
      "  hilbert eval:   x,value,residual,mode,max_order,window\n"
      "  hilbert shear:  order,partial_value,b,d,window\n"
      "  fourier:        n,re,im,max_order,window\n"
      "  wp pair:        value,depth,value_prev_depth\n"
      "  wp gram:        depth,i,j,gram,gram_prev_depth\n"
      "Floats are printed with 17 significant digits."};
  app.require_subcommand(1);

  Output out;
  Truncation trunc;
  std::string shears, grid, mode = "closed", edge, tip = "inf", nrange = "0", t1, t2;
  std::vector<double> xs;
  int max_order = 4, depth = 6;
  long long lo = -5, hi = 5, K = 64;

  auto add_output = [&](CLI::App* c, const std::string& def) {
    c->add_option("--format", out.format, "csv or json")->default_str(def);
    c->add_option("-o,--output", out.path, "output file (default stdout)");
  };
  auto add_trunc = [&](CLI::App* c) {
    c->add_option("--max-order", trunc.max_order, "largest Farey order of fan tips")->capture_default_str();
    c->add_option("--window", trunc.window, "largest |fan index|")->capture_default_str();
  };
  auto add_points = [&](CLI::App* c) {
    c->add_option("--x", xs, "sample points")->delimiter(',');
    c->add_option("--grid", grid, "lo:hi:n evenly spaced sample points");
  };

  auto* farey = app.add_subcommand("farey", "Farey tessellation combinatorics");
  farey->require_subcommand(1);
  auto* fv = farey->add_subcommand("vertices", "vertices by Farey order");
  fv->add_option("--max-order", max_order, "largest order")->capture_default_str();
  add_output(fv, "csv");
  auto* fe = farey->add_subcommand("edges", "fan edges e_n of a tip");
  fe->add_option("--tip", tip, "tip p/q, n or inf")->capture_default_str();
  fe->add_option("--from", lo, "first index")->capture_default_str();
  fe->add_option("--to", hi, "last index")->capture_default_str();
  add_output(fe, "csv");

  auto* field = app.add_subcommand("field", "Zygmund vector field of a shear function");
  field->require_subcommand(1);
  auto* feval = field->add_subcommand("eval", "evaluate the truncated fan series");
  feval->add_option("--shears", shears, "shear JSON file")->required();
  feval->add_option("--k", K, "largest k in the Zygmund condition used for the tail-bound constant")
      ->capture_default_str();
  add_trunc(feval);
  add_points(feval);
  add_output(feval, "csv");

  auto* zyg = app.add_subcommand("zygmund", "Zygmund condition on fans");
  zyg->require_subcommand(1);
  auto* zc = zyg->add_subcommand("check", "sup of the fan second-difference sums");
  zc->add_option("--shears", shears, "shear JSON file")->required();
  zc->add_option("--k", K, "largest k")->capture_default_str();
  add_output(zc, "json");

  auto* hil = app.add_subcommand("hilbert", "Hilbert transform");
  hil->require_subcommand(1);
  auto* heval = hil->add_subcommand("eval", "H(V)(x)");
  heval->add_option("--shears", shears, "shear JSON file")->required();
  heval->add_option("--mode", mode, "closed, series or oracle")->capture_default_str();
  add_trunc(heval);
  add_points(heval);
  add_output(heval, "csv");
  auto* hshear = hil->add_subcommand("shear", "shear of H(V) on a Farey edge, by tip order");
  hshear->add_option("--shears", shears, "shear JSON file")->required();
  hshear->add_option("--edge", edge, "b,d")->required();
  add_trunc(hshear);
  add_output(hshear, "json");

  auto* four = app.add_subcommand("fourier", "Fourier coefficients on the circle");
  four->add_option("--shears", shears, "shear JSON file")->required();
  four->add_option("--n", nrange, "n or lo..hi")->capture_default_str();
  add_trunc(four);
  add_output(four, "json");

  auto* wp = app.add_subcommand("wp", "Weil-Petersson pairing on the once-punctured torus");
  wp->require_subcommand(1);
  auto* wpp = wp->add_subcommand("pair", "g(t1, t2)");
  wpp->add_option("--t1", t1, "a,b,c")->required();
  wpp->add_option("--t2", t2, "d,e,f")->required();
  wpp->add_option("--depth", depth, "word length of the lift")->capture_default_str();
  add_output(wpp, "json");
  auto* wpg = wp->add_subcommand("gram", "Gram matrix on the cusp subspace");
  wpg->add_option("--depth", depth, "word length of the lift")->capture_default_str();
  add_output(wpg, "json");

  std::vector<std::pair<CLI::App*, std::string>> default_formats{
      {fv, "csv"},  {fe, "csv"},     {feval, "csv"}, {zc, "json"},  {heval, "csv"},
      {hshear, "json"}, {four, "json"}, {wpp, "json"}, {wpg, "json"}};

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_failure({"usage", e.what(), ""});
    return 2;
  }

  try {
    for (const auto& [cmd, def] : default_formats)
      if (cmd->parsed() && cmd->count("--format") == 0) out.format = def;
    check_format(out);
    if (fv->parsed()) farey_vertices(max_order, out);
    else if (fe->parsed()) farey_edges(tip, lo, hi, out);
    else if (feval->parsed()) field_eval(shears, trunc, K, sample_points(xs, grid), out);
    else if (zc->parsed()) zygmund_check(shears, K, out);
    else if (heval->parsed()) hilbert_eval(shears, trunc, mode, sample_points(xs, grid), out);
    else if (hshear->parsed()) hilbert_shear(shears, trunc, edge, out);
    else if (four->parsed()) fourier(shears, trunc, nrange, out);
    else if (wpp->parsed()) wp_pair(t1, t2, depth, out);
    else if (wpg->parsed()) wp_gram(depth, out);
  } catch (const Failure& f) {
    print_failure(f);
    return 1;
  }
  return 0;
}
