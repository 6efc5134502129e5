#pragma once

// Adaptive quadrature on finite and half-infinite intervals plus Gauss rule
// construction.  Error control is a nested Gauss pair per interval with
// bisection, in the Gauss-Kronrod spirit; good to ~1e-12 on smooth
// integrands which is all the transform formulas need.

#include <functional>
#include <utility>
#include <vector>

namespace resind {

struct QuadResult {
  double value = 0;
  double error = 0;      // accumulated local error estimates
  bool converged = true;
  operator double() const { return value; }
};

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-11, int max_intervals = 4000);

// integral over (0, infinity) via u = tan(theta)
QuadResult integrate_0inf(const std::function<double(double)>& f, double abs_tol = 1e-11,
                          int max_intervals = 4000);

// nodes/weights for weight exp(-x^2) on the whole line
std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n);

// nodes/weights for weight 1 on [-1, 1]
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace resind
