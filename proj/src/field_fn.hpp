#pragma once

#include <functional>
#include <vector>

namespace zs {

// A real vector field on R given pointwise, with the data numerical
// routines need: where it is non-smooth, and its x^2 coefficient at ∞.
struct Field {
  std::function<double(double)> eval;
  std::vector<double> kinks;
  double quad_at_inf = 0.0;

  double operator()(double x) const { return eval(x); }
};

}  // namespace zs
