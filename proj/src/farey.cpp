#include "farey.hpp"

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace zs {

namespace mp = boost::multiprecision;

ExtRational::ExtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 0) {
    if (num_ == 0) throw Error(Errc::invalid_argument, "0/0 is not a point of the extended line");
    num_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtRational ExtRational::parse(const std::string& raw) {
  std::string t;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t == "inf" || t == "oo" || t == "infinity") return infinity();
  auto integer = [&](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw Error(Errc::parse, "malformed rational '" + raw + "'");
    for (size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw Error(Errc::parse, "malformed rational '" + raw + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) return ExtRational(integer(t), 1);
  return ExtRational(integer(t.substr(0, slash)), integer(t.substr(slash + 1)));
}

double ExtRational::to_double() const {
  if (is_inf()) return std::numeric_limits<double>::infinity();
  if (den_ == 1) return num_.convert_to<double>();
  return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::string ExtRational::str() const {
  if (is_inf()) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

int circ_class(const ExtRational& x) {
  if (x.is_inf()) return 1;
  return x.num() >= 0 ? 0 : 2;
}

// Raw representative with ∞ written as sign/0.
struct Frac {
  BigInt n, d;
};

Frac raw(const ExtRational& x, int inf_sign = 1) {
  if (x.is_inf()) return {BigInt(inf_sign), BigInt(0)};
  return {x.num(), x.den()};
}

std::pair<ExtRational, ExtRational> parents(const ExtRational& p) {
  const BigInt& P = p.num();
  const BigInt& Q = p.den();
  if (Q == 1) {
    if (P >= 2) return {ExtRational(P - 1, 1), ExtRational::infinity()};
    return {ExtRational::infinity(), ExtRational(P + 1, 1)};
  }
  // m = P^{-1} mod Q via extended Euclid.
  BigInt r0 = ((P % Q) + Q) % Q, r1 = Q, s0 = 1, s1 = 0;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  BigInt m = ((s0 % Q) + Q) % Q;
  BigInt l = (P * m - 1) / Q;
  return {ExtRational(l, m), ExtRational(P - l, Q - m)};
}

}  // namespace

bool circular_less(const ExtRational& a, const ExtRational& b) {
  int ca = circ_class(a), cb = circ_class(b);
  if (ca != cb) return ca < cb;
  if (ca == 1) return false;
  return a.num() * b.den() < b.num() * a.den();
}

bool cyclic_between(const ExtRational& x, const ExtRational& y, const ExtRational& z) {
  if (y == x || y == z || x == z) return false;
  bool xy = circular_less(x, y), yz = circular_less(y, z), zx = circular_less(z, x);
  return (xy && yz) || (yz && zx) || (zx && xy);
}

bool farey_adjacent(const ExtRational& p, const ExtRational& q) {
  BigInt det = p.num() * q.den() - q.num() * p.den();
  return det == 1 || det == -1;
}

ExtRational mediant(const ExtRational& p, const ExtRational& q, int inf_sign) {
  if (!farey_adjacent(p, q))
    throw Error(Errc::not_farey, "mediant of non-adjacent points " + p.str() + ", " + q.str());
  Frac a = raw(p, inf_sign), b = raw(q, inf_sign);
  return ExtRational(a.n + b.n, a.d + b.d);
}

int farey_order(const ExtRational& p) {
  if (p.is_inf() || p.num() == 0) return 1;
  BigInt a = p.num() < 0 ? BigInt(-p.num()) : p.num();
  BigInt b = p.den();
  BigInt sum = 0;
  while (b != 0) {
    sum += a / b;
    BigInt r = a % b;
    a = b;
    b = r;
  }
  if (sum > 1000000000) throw Error(Errc::overflow, "Farey order too large for " + p.str());
  return 1 + sum.convert_to<int>();
}

std::vector<ExtRational> enumerate_vertices(int max_order) {
  if (max_order < 1) throw Error(Errc::invalid_argument, "max_order must be >= 1");
  if (max_order > 26) throw Error(Errc::invalid_argument, "max_order above 26 is not enumerable");
  std::vector<ExtRational> out{ExtRational(0), ExtRational::infinity()};
  std::vector<Frac> pos{{0, 1}, {1, 0}}, neg{{-1, 0}, {0, 1}};
  for (int k = 2; k <= max_order; ++k) {
    std::vector<ExtRational> fresh;
    auto refine = [&](std::vector<Frac>& side) {
      std::vector<Frac> next;
      next.reserve(2 * side.size());
      for (size_t i = 0; i + 1 < side.size(); ++i) {
        next.push_back(side[i]);
        Frac m{side[i].n + side[i + 1].n, side[i].d + side[i + 1].d};
        fresh.emplace_back(m.n, m.d);
        next.push_back(m);
      }
      next.push_back(side.back());
      side.swap(next);
    };
    refine(pos);
    refine(neg);
    std::sort(fresh.begin(), fresh.end(), circular_less);
    out.insert(out.end(), fresh.begin(), fresh.end());
  }
  return out;
}

ExtRational IntegerMoebius::apply(const ExtRational& x) const {
  if (x.is_inf()) return ExtRational(a, c);
  return ExtRational(a * x.num() + b * x.den(), c * x.num() + d * x.den());
}

double IntegerMoebius::apply(double x) const {
  double A = a.convert_to<double>(), B = b.convert_to<double>();
  double C = c.convert_to<double>(), D = d.convert_to<double>();
  if (std::isinf(x)) return C == 0 ? x : A / C;
  double den = C * x + D;
  if (den == 0) return std::numeric_limits<double>::infinity();
  return (A * x + B) / den;
}

IntegerMoebius IntegerMoebius::operator*(const IntegerMoebius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool IntegerMoebius::is_identity() const {
  return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
}

FareyEdge orient_from_base(const ExtRational& p, const ExtRational& q) {
  if (p == q) throw Error(Errc::invalid_argument, "degenerate edge at " + p.str());
  if (!farey_adjacent(p, q))
    throw Error(Errc::not_farey, "(" + p.str() + ", " + q.str() + ") is not a Farey edge");
  ExtRational w;
  for (const ExtRational& cand : {ExtRational(0), ExtRational(1), ExtRational::infinity()}) {
    if (cand != p && cand != q) {
      w = cand;
      break;
    }
  }
  // Left of p→q is the arc q→p.
  if (cyclic_between(q, w, p)) return {p, q};
  return {q, p};
}

std::pair<ExtRational, ExtRational> edge_key(const ExtRational& p, const ExtRational& q) {
  return circular_less(p, q) ? std::make_pair(p, q) : std::make_pair(q, p);
}

bool edge_key_less(const std::pair<ExtRational, ExtRational>& x,
                   const std::pair<ExtRational, ExtRational>& y) {
  if (x.first != y.first) return circular_less(x.first, y.first);
  return circular_less(x.second, y.second);
}

IntegerMoebius fan_moebius(const ExtRational& p) {
  if (p.is_inf()) return {};
  if (p == ExtRational(0)) return {0, 1, -1, 1};
  if (p == ExtRational(1)) return {1, -1, 1, 0};
  auto [u, v] = parents(p);
  FareyEdge eu = orient_from_base(p, u);
  ExtRational a = eu.initial == p ? u : v;
  Frac pa = raw(p), aa = raw(a);
  IntegerMoebius B{pa.n, aa.n, pa.d, aa.d};
  BigInt det = B.det();
  if (det == -1) {
    B.b = -B.b;
    B.d = -B.d;
  } else if (det != 1) {
    throw Error(Errc::domain, "fan normaliser failed for " + p.str());
  }
  return B;
}

FareyEdge fan_edge(const ExtRational& p, long n, const IntegerMoebius& B) {
  ExtRational q = B.apply(ExtRational(static_cast<long long>(n)));
  if (n >= 1) return {q, p};
  return {p, q};
}

std::vector<FareyEdge> fan_edges(const ExtRational& p, long n_lo, long n_hi) {
  IntegerMoebius B = fan_moebius(p);
  std::vector<FareyEdge> out;
  for (long n = n_lo; n <= n_hi; ++n) out.push_back(fan_edge(p, n, B));
  return out;
}

long fan_index(const ExtRational& p, const ExtRational& q, const IntegerMoebius& B) {
  ExtRational n = B.inverse().apply(q);
  if (n.is_inf() || n.den() != 1)
    throw Error(Errc::not_farey, q.str() + " is not a Farey neighbour of " + p.str());
  if (mp::abs(n.num()) > BigInt(1000000000000LL))
    throw Error(Errc::overflow, "fan index out of range");
  return n.num().convert_to<long>();
}

FareyQuad farey_quadrilateral(const ExtRational& b, const ExtRational& d) {
  if (!farey_adjacent(b, d))
    throw Error(Errc::not_farey, b.str() + " and " + d.str() + " are not Farey neighbours");
  Frac x = raw(b), y = raw(d);
  ExtRational m1(x.n + y.n, x.d + y.d), m2(x.n - y.n, x.d - y.d);
  if (cyclic_between(d, m1, b)) return {m1, b, m2, d};
  return {m2, b, m1, d};
}

}  // namespace zs
