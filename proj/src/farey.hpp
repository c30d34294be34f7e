// Exact Farey tessellation combinatorics over arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace zs {

using BigInt = boost::multiprecision::cpp_int;

// A point of Q ∪ {∞}. Always reduced, den >= 0, and ∞ is stored as 1/0.
class ExtRational {
 public:
  ExtRational() : num_(0), den_(1) {}
  ExtRational(BigInt num, BigInt den);
  ExtRational(long long n) : num_(n), den_(1) {}  // NOLINT: integers convert implicitly

  static ExtRational infinity() { return ExtRational(1, 0); }
  static ExtRational parse(const std::string& text);  // "p/q", "n", "inf"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_inf() const { return den_ == 0; }
  double to_double() const;
  std::string str() const;

  bool operator==(const ExtRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }

 private:
  BigInt num_, den_;
};

// Total order along the circle starting at 0 and moving through increasing
// reals: 0, positives, ∞, negatives (ascending).
bool circular_less(const ExtRational& a, const ExtRational& b);

// Strict cyclic betweenness: true if y lies on the open arc from x to z
// travelled in the increasing direction.
bool cyclic_between(const ExtRational& x, const ExtRational& y, const ExtRational& z);

// |a d - b c| = 1 with ∞ = 1/0.
bool farey_adjacent(const ExtRational& p, const ExtRational& q);

// (a+c)/(b+d) for adjacent p = a/b, q = c/d. A point at ∞ is written with
// numerator inf_sign (so -1/0 picks the negative-side mediant).
ExtRational mediant(const ExtRational& p, const ExtRational& q, int inf_sign = 1);

int farey_order(const ExtRational& p);

std::vector<ExtRational> enumerate_vertices(int max_order);

struct IntegerMoebius {
  BigInt a{1}, b{0}, c{0}, d{1};
  ExtRational apply(const ExtRational& x) const;
  double apply(double x) const;
  IntegerMoebius inverse() const { return {d, -b, -c, a}; }
  IntegerMoebius operator*(const IntegerMoebius& o) const;
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  bool is_identity() const;  // as an element of PSL2
};

// Oriented edge: Δ0 = (0, 1, ∞) lies on its left.
struct FareyEdge {
  ExtRational initial, terminal;
};

// Orders two adjacent points so that Δ0 lies to the left of initial→terminal.
FareyEdge orient_from_base(const ExtRational& p, const ExtRational& q);

// Unordered identity of an edge (smaller endpoint first in circular order).
std::pair<ExtRational, ExtRational> edge_key(const ExtRational& p, const ExtRational& q);
bool edge_key_less(const std::pair<ExtRational, ExtRational>& x,
                   const std::pair<ExtRational, ExtRational>& y);

IntegerMoebius fan_moebius(const ExtRational& p);
FareyEdge fan_edge(const ExtRational& p, long n, const IntegerMoebius& B);
std::vector<FareyEdge> fan_edges(const ExtRational& p, long n_lo, long n_hi);

// Index n with e_n^p = (p, q); q must be a Farey neighbour of p.
long fan_index(const ExtRational& p, const ExtRational& q, const IntegerMoebius& B);

// The two triangles of the tessellation sharing edge (b, d), returned as the
// quadrilateral a, b, c, d in increasing cyclic order.
struct FareyQuad {
  ExtRational a, b, c, d;
};
FareyQuad farey_quadrilateral(const ExtRational& b, const ExtRational& d);

}  // namespace zs
