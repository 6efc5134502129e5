#include "resind/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace resind {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess
    double xi = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (xi * p1 - p0) / (xi * xi - 1);
      double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1, p1 = xi;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (xi * p1 - p0) / (xi * xi - 1);
    x[i] = xi;
    w[i] = 2.0 / ((1 - xi * xi) * dp * dp);
  }
  return {x, w};
}

namespace {

double orthonormal_hermite(int n, double x, double* deriv = nullptr) {
  double h0 = std::pow(std::numbers::pi, -0.25), hm = 0;
  if (n == 0) {
    if (deriv) *deriv = 0;
    return h0;
  }
  double hk = h0;
  for (int k = 0; k < n; ++k) {
    double hn = x * std::sqrt(2.0 / (k + 1)) * hk -
                std::sqrt(static_cast<double>(k) / (k + 1)) * hm;
    hm = hk;
    hk = hn;
  }
  if (deriv) *deriv = std::sqrt(2.0 * n) * hm;
  return hk;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int n) {
  // build roots level by level: roots of successive orthonormal polynomials
  // interlace, so each new root is bracketed and bisection is safe
  std::vector<double> roots{0.0};
  for (int k = 2; k <= n; ++k) {
    std::vector<double> brackets;
    double outer = std::sqrt(2.0 * k + 1.0);
    brackets.push_back(-outer);
    for (double r : roots) brackets.push_back(r);
    brackets.push_back(outer);
    std::vector<double> next;
    for (size_t i = 0; i + 1 < brackets.size(); ++i) {
      double lo = brackets[i], hi = brackets[i + 1];
      double flo = orthonormal_hermite(k, lo);
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = orthonormal_hermite(k, mid);
        if ((flo <= 0) == (fm <= 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      next.push_back(0.5 * (lo + hi));
    }
    roots = std::move(next);
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    // one Newton polish then w = 2 / (h_n'(x))^2
    double d;
    double v = orthonormal_hermite(n, roots[i], &d);
    roots[i] -= v / d;
    orthonormal_hermite(n, roots[i], &d);
    w[i] = 2.0 / (d * d);
  }
  return {roots, w};
}

namespace {

struct Rules {
  std::vector<double> x_lo, w_lo, x_hi, w_hi;
  Rules() {
    std::tie(x_lo, w_lo) = gauss_legendre(12);
    std::tie(x_hi, w_hi) = gauss_legendre(25);
  }
};

const Rules& rules() {
  static Rules r;
  return r;
}

void eval_pair(const std::function<double(double)>& f, double a, double b, double& lo,
               double& hi) {
  const Rules& r = rules();
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  lo = 0;
  hi = 0;
  for (size_t i = 0; i < r.x_lo.size(); ++i) lo += r.w_lo[i] * f(c + h * r.x_lo[i]);
  for (size_t i = 0; i < r.x_hi.size(); ++i) hi += r.w_hi[i] * f(c + h * r.x_hi[i]);
  lo *= h;
  hi *= h;
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           int& budget, QuadResult& out) {
  double lo, hi;
  eval_pair(f, a, b, lo, hi);
  double err = std::abs(hi - lo);
  if (err <= tol || depth >= 48 || budget <= 0) {
    out.value += hi;
    out.error += err;
    if (err > tol && depth >= 48) out.converged = false;
    --budget;
    return;
  }
  --budget;
  double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, budget, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, budget, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_intervals) {
  QuadResult out;
  if (a == b) return out;
  int budget = max_intervals;
  adapt(f, a, b, abs_tol, 0, budget, out);
  if (budget <= 0) out.converged = false;
  return out;
}

QuadResult integrate_0inf(const std::function<double(double)>& f, double abs_tol,
                          int max_intervals) {
  auto g = [&f](double th) {
    double c = std::cos(th);
    double u = std::tan(th);
    return f(u) / (c * c);
  };
  return integrate(g, 0.0, 0.5 * std::numbers::pi - 1e-14, abs_tol, max_intervals);
}

}  // namespace resind
