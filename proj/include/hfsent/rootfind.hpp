#pragma once

#include <functional>

namespace hfsent {

struct RootOptions {
  double x_rel_tol = 1e-10;
  double f_tol = 1e-12;
  int max_iter = 200;
};

// Brent's method on a bracketing interval [a, b] with f(a), f(b) of opposite
// sign (either endpoint may be an exact root). Throws std::invalid_argument
// if the interval does not bracket a sign change.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  const RootOptions& opt = {});

}  // namespace hfsent
