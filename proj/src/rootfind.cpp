#include "hfsent/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hfsent {

double brent_root(const std::function<double(double)>& f, double a, double b,
                  const RootOptions& opt) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw std::invalid_argument("brent_root: interval does not bracket a root");

  double c = a, fc = fa;
  double d = b - a, e = d;

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                       0.5 * opt.x_rel_tol * std::max(1.0, std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol || std::abs(fb) <= opt.f_tol) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, falling back to secant.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (xm > 0 ? tol : -tol);
    fb = f(b);
    if (fb == 0.0) return b;
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

}  // namespace hfsent
