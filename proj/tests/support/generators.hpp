// Seeded generators for property tests.
#pragma once

#include "farey.hpp"
#include "hilbert.hpp"
#include "moebius.hpp"
#include "shear_field.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace zs::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(integer(0, static_cast<long>(v.size()) - 1))];
  }

  // Orientation-preserving map with entries of moderate size.
  RealMoebius moebius() {
    for (;;) {
      RealMoebius B{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
      double det = B.det();
      if (det > 0.2) return B;
      if (det < -0.2) return {-B.a, -B.b, B.c, B.d};
    }
  }

  // Four points in increasing cyclic order, rotated at random; ∞ with probability p_inf.
  Quadrilateral quadrilateral(double p_inf = 0.3, double spread = 5.0) {
    std::vector<double> pts;
    bool with_inf = coin(p_inf);
    size_t finite = with_inf ? 3 : 4;
    while (pts.size() < finite) {
      double x = uniform(-spread, spread);
      bool far = std::all_of(pts.begin(), pts.end(), [&](double y) { return std::fabs(x - y) > 0.05; });
      if (far) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    if (with_inf) pts.push_back(kInf);
    std::rotate(pts.begin(), pts.begin() + integer(0, 3), pts.end());
    return {pts[0], pts[1], pts[2], pts[3]};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Every Farey edge whose endpoints both have order <= max_order.
inline std::vector<std::pair<ExtRational, ExtRational>> edges_up_to(int max_order) {
  auto v = enumerate_vertices(max_order);
  std::vector<std::pair<ExtRational, ExtRational>> out;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (farey_adjacent(v[i], v[j])) out.emplace_back(v[i], v[j]);
  return out;
}

inline ShearFunction random_shear(Gen& g, size_t max_edges, int max_order, double scale = 1.0) {
  static thread_local std::vector<std::vector<std::pair<ExtRational, ExtRational>>> cache(16);
  auto& edges = cache[static_cast<size_t>(max_order)];
  if (edges.empty()) edges = edges_up_to(max_order);
  ShearFunction s;
  size_t n = static_cast<size_t>(g.integer(1, static_cast<long>(max_edges)));
  while (s.size() < n) {
    const auto& e = g.pick(edges);
    s.set(e.first, e.second, g.uniform(-scale, scale));
  }
  return s;
}

inline Field field_of(const Descriptor& d) {
  Field f{[d](double x) { return elementary_eval(d, x); }, {d.a}, 0.0};
  if (d.kind == Support::interval) f.kinks.push_back(d.b);
  return f;
}

}  // namespace zs::testing
