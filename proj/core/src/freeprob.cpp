#include "resind/freeprob.hpp"

#include "resind/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace resind {

double LevyMeasure::moment(int k, double tol) const {
  double s = 0;
  for (const auto& a : atoms) s += a.mass * std::pow(a.x, k);
  for (const auto& d : densities) {
    auto f = [&](double x) { return std::pow(x, k) * d.pdf(x); };
    QuadResult q = integrate(f, d.lo, d.hi, tol);
    if (!q.converged)
      throw std::runtime_error("moment quadrature failed on component " + d.tag);
    s += q.value;
  }
  return s;
}

std::vector<double> levy_to_r(const LevyMeasure& l, int order, double r1) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  std::vector<double> r(order, 0.0);
  r[0] = r1;
  for (int k = 1; k < order; ++k) r[k] = l.moment(k - 1);
  return r;
}

namespace {

using C = std::complex<double>;

C eval_poly(const std::vector<double>& r, C w) {
  // R(w) = sum_k R_k w^{k-1}
  C acc(0, 0);
  for (size_t k = r.size(); k-- > 0;) acc = acc * w + r[k];
  return acc;
}

C eval_poly_deriv(const std::vector<double>& r, C w) {
  C acc(0, 0);
  for (size_t k = r.size(); k-- > 1;) acc = acc * w + static_cast<double>(k) * r[k];
  return acc;
}

void eval_quotient(const PadeQuotient& q, C w, C& val, C& der) {
  C p = eval_poly(q.num, w), dp = eval_poly_deriv(q.num, w);
  if (q.is_polynomial()) {
    val = p;
    der = dp;
    return;
  }
  C d = eval_poly(q.den, w), dd = eval_poly_deriv(q.den, w);
  val = p / d;
  der = (dp * d - p * dd) / (d * d);
}

template <class REval>
bool newton_solve(const REval& rf, C z, C& g, const StieltjesOptions& opt) {
  auto residual = [&](C w) {
    C v, d;
    rf(w, v, d);
    return v + 1.0 / w - z;
  };
  for (int it = 0; it < opt.max_iter; ++it) {
    C rv, rd;
    rf(g, rv, rd);
    C f = rv + 1.0 / g - z;
    double fn = std::abs(f);
    if (fn <= opt.residual_tol * std::max(1.0, std::abs(z))) return true;
    C df = rd - 1.0 / (g * g);
    if (df == C(0, 0)) return false;
    C step = f / df;
    // damp until the residual shrinks and G stays in the lower half plane
    for (int h = 0; h < 30; ++h) {
      C cand = g - step;
      if (cand != C(0, 0) && cand.imag() < 0 && std::abs(residual(cand)) < fn) {
        g = cand;
        break;
      }
      step *= 0.5;
      if (h == 29) return false;
    }
  }
  return std::abs(residual(g)) <= opt.residual_tol * std::max(1.0, std::abs(z));
}

template <class REval>
C solve_ladder(const REval& rf, C z, double scale, const StieltjesOptions& opt) {
  double top = std::max(8.0 * scale, 2.0 * std::abs(z));
  C g = 1.0 / C(z.real(), top);
  int steps = 24;
  for (int i = 1; i <= steps; ++i) {
    double im = top * std::pow(z.imag() / top, static_cast<double>(i) / steps);
    C zi(z.real(), im);
    if (!newton_solve(rf, zi, g, opt)) {
      g = 1.0 / zi;  // reseed once, then continue
      if (!newton_solve(rf, zi, g, opt))
        throw std::runtime_error("stieltjes solver did not converge");
    }
  }
  return g;
}

}  // namespace

PadeQuotient pade_continuation(const std::vector<double>& series) {
  int K = static_cast<int>(series.size());
  PadeQuotient fallback{series.empty() ? std::vector<double>{0.0} : series, {1.0}};
  double cmax = 0;
  for (double c : series) cmax = std::max(cmax, std::abs(c));
  if (K < 3 || cmax == 0) return fallback;
  auto at = [&](int i) { return (i >= 0 && i < K) ? series[i] : 0.0; };
  double pivot_tol = 1e-12 * std::max(1.0, cmax);
  for (int n = (K - 1) / 2; n >= 1; --n) {
    int m = K - 1 - n;
    // q_0 = 1 and sum_j q_j c_{m+i+1-j} = 0 for i = 0..n-1
    std::vector<std::vector<double>> A(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = at(m + i - j);
      A[i][n] = -at(m + 1 + i);
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      for (int row = col + 1; row < n; ++row)
        if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
      if (std::abs(A[piv][col]) < pivot_tol) {
        singular = true;
        break;
      }
      std::swap(A[col], A[piv]);
      for (int row = col + 1; row < n; ++row) {
        double f = A[row][col] / A[col][col];
        for (int j = col; j <= n; ++j) A[row][j] -= f * A[col][j];
      }
    }
    if (singular) continue;
    std::vector<double> den(n + 1, 0.0);
    den[0] = 1.0;
    for (int row = n - 1; row >= 0; --row) {
      double s = A[row][n];
      for (int j = row + 1; j < n; ++j) s -= A[row][j] * den[j + 1];
      den[row + 1] = s / A[row][row];
    }
    std::vector<double> num(m + 1, 0.0);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= std::min(i, n); ++j) num[i] += den[j] * at(i - j);
    // reject fits that fail to reproduce the series (amplified cancellation)
    std::vector<double> s(K, 0.0);
    bool ok = true;
    for (int i = 0; i < K && ok; ++i) {
      double v = i <= m ? num[i] : 0.0;
      for (int j = 1; j <= std::min(i, n); ++j) v -= den[j] * s[i - j];
      s[i] = v;
      ok = std::abs(s[i] - series[i]) <= 1e-8 * std::max(1.0, cmax);
    }
    if (!ok) continue;
    return {std::move(num), std::move(den)};
  }
  return fallback;
}

std::complex<double> stieltjes_from_cumulants(const std::vector<double>& r,
                                              std::complex<double> z,
                                              const StieltjesOptions& opt) {
  if (z.imag() < opt.eps_min)
    throw std::invalid_argument("stieltjes evaluation needs Im z >= eps_min");
  // scale estimate for the support; start far above and continue down
  double scale = 1.0;
  for (size_t k = 0; k < r.size(); ++k)
    scale = std::max(scale, std::pow(std::abs(r[k]), 1.0 / (k + 1.0)));
  if (opt.rational_r) {
    PadeQuotient pq = pade_continuation(r);
    if (!pq.is_polynomial()) {
      auto rf = [&pq](C w, C& v, C& d) { eval_quotient(pq, w, v, d); };
      try {
        return solve_ladder(rf, z, scale, opt);
      } catch (const std::runtime_error&) {
        // fall through to the raw polynomial
      }
    }
  }
  auto rf = [&r](C w, C& v, C& d) {
    v = eval_poly(r, w);
    d = eval_poly_deriv(r, w);
  };
  return solve_ladder(rf, z, scale, opt);
}

std::complex<double> stieltjes_atomic(const AtomicMeasure& m, std::complex<double> z) {
  C g(0, 0);
  for (const auto& a : m.atoms) g += a.mass / (z - C(a.x, 0));
  return g;
}

namespace {

// monic orthogonal polynomial p_k from the three-term recurrence
double eval_monic(const std::vector<double>& a, const std::vector<double>& b2, int k, double x) {
  double pm1 = 0.0, p = 1.0;
  for (int j = 1; j <= k; ++j) {
    double next = (x - a[j - 1]) * p - (j >= 2 ? b2[j - 1] * pm1 : 0.0);
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace

std::optional<AtomicMeasure> atomic_from_moments(const std::vector<double>& moments,
                                                 double tol) {
  int L = static_cast<int>(moments.size());
  if (L < 2) return std::nullopt;
  std::vector<double> M(L + 1, 0.0);
  M[0] = 1.0;
  for (int i = 0; i < L; ++i) M[i + 1] = moments[i];

  // sigma_{k,l} = integral of p_k(x) x^l; collapse of the squared norm
  // sigma_{k,k} certifies a k-atom measure
  std::vector<double> prev2(L + 1, 0.0), prev = M;
  std::vector<double> a{M[1]}, b2{1.0};
  double h_prev = 1.0;  // sigma_{0,0}
  int depth = -1;
  int maxdepth = L / 2;
  for (int k = 1; k <= maxdepth; ++k) {
    std::vector<double> cur(L + 1, 0.0);
    for (int l = k; l + k <= L; ++l)
      cur[l] = prev[l + 1] - a[k - 1] * prev[l] - (k >= 2 ? b2[k - 1] * prev2[l] : 0.0);
    double h = cur[k];
    double x2 = 1.0;
    for (double aj : a) x2 = std::max(x2, aj * aj);
    for (size_t j = 1; j < b2.size(); ++j) x2 = std::max(x2, b2[j]);
    if (std::abs(h) <= tol * h_prev * x2) {
      depth = k;
      break;
    }
    if (h < 0) return std::nullopt;  // not a moment sequence at working precision
    if (k < maxdepth) {
      a.push_back(cur[k + 1] / h - prev[k] / h_prev);
      b2.push_back(h / h_prev);
      prev2 = std::move(prev);
      prev = std::move(cur);
      h_prev = h;
    }
  }
  if (depth < 0) return std::nullopt;

  // nodes: roots of p_depth by interlacing bisection
  double maxb = 0;
  for (size_t j = 1; j < b2.size(); ++j) maxb = std::max(maxb, std::sqrt(b2[j]));
  double lo = a[0], hi = a[0];
  for (double aj : a) {
    lo = std::min(lo, aj);
    hi = std::max(hi, aj);
  }
  lo -= 2 * maxb + 1;
  hi += 2 * maxb + 1;
  std::vector<double> roots{a[0]};
  for (int k = 2; k <= depth; ++k) {
    std::vector<double> pts;
    pts.push_back(lo);
    pts.insert(pts.end(), roots.begin(), roots.end());
    pts.push_back(hi);
    std::vector<double> next;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      double xl = pts[i], xr = pts[i + 1];
      double fl = eval_monic(a, b2, k, xl), fr = eval_monic(a, b2, k, xr);
      if (fl == 0) {
        next.push_back(xl);
        continue;
      }
      if ((fl > 0) == (fr > 0) && fr != 0) {
        next.push_back(0.5 * (xl + xr));  // interlacing spoiled by roundoff
        continue;
      }
      for (int it = 0; it < 200 && xr - xl > 1e-15 * (1 + std::abs(xl) + std::abs(xr));
           ++it) {
        double xm = 0.5 * (xl + xr);
        double fm = eval_monic(a, b2, k, xm);
        if (fm == 0) {
          xl = xr = xm;
          break;
        }
        if ((fm > 0) == (fl > 0)) {
          xl = xm;
          fl = fm;
        } else {
          xr = xm;
        }
      }
      next.push_back(0.5 * (xl + xr));
    }
    roots = std::move(next);
  }

  // Gauss weights w_i = 1 / sum_k p_k(x_i)^2 / h_k
  std::vector<double> h(depth, 0.0);
  h[0] = 1.0;
  for (int k = 1; k < depth; ++k) h[k] = h[k - 1] * b2[k];
  AtomicMeasure out;
  for (double x : roots) {
    double s = 0;
    for (int k = 0; k < depth; ++k) {
      double p = eval_monic(a, b2, k, x);
      s += p * p / h[k];
    }
    out.atoms.push_back({x, 1.0 / s});
  }
  std::sort(out.atoms.begin(), out.atoms.end(),
            [](const auto& u, const auto& v) { return u.x < v.x; });

  // certify: the Gauss measure must reproduce every supplied moment
  double xs = std::max(1.0, std::abs(lo));
  xs = std::max(xs, std::abs(hi));
  double mscale = 1.0;
  for (int j = 1; j <= L; ++j) {
    mscale *= xs;
    double mj = out.moment(j);
    if (std::abs(mj - M[j]) > 1e-6 * std::max(1.0, mscale)) return std::nullopt;
  }
  return out;
}

namespace {

template <class Cx, class FromEntry>
std::vector<Cx> r_to_gamma_impl(const std::vector<Cx>& r, int k, const FiniteGroupTable& t,
                                FromEntry conv) {
  if (static_cast<int>(r.size()) != t.num_irreps())
    throw std::invalid_argument("per-irrep length does not match table");
  if (k < 1) throw std::invalid_argument("duality order k must be >= 1");
  std::vector<Cx> out(t.num_classes(), Cx(0));
  for (int th = 0; th < t.num_classes(); ++th)
    for (int z = 0; z < t.num_irreps(); ++z) {
      Cx chi = conv(t.values[z][th], false);
      Cx dk = conv(ExactComplex(rat_pow(Rational(t.dims[z]), k)), false);
      out[th] += chi / dk * r[z];
    }
  return out;
}

template <class Cx, class FromEntry>
std::vector<Cx> gamma_to_r_impl(const std::vector<Cx>& gamma, int k, const FiniteGroupTable& t,
                                FromEntry conv) {
  if (static_cast<int>(gamma.size()) != t.num_classes())
    throw std::invalid_argument("per-class length does not match table");
  if (k < 1) throw std::invalid_argument("duality order k must be >= 1");
  std::vector<Cx> out(t.num_irreps(), Cx(0));
  for (int z = 0; z < t.num_irreps(); ++z)
    for (int th = 0; th < t.num_classes(); ++th) {
      Cx chi_conj = conv(t.values[z][th], true);
      Cx dk = conv(ExactComplex(rat_pow(Rational(t.dims[z]), k)), false);
      Cx w = conv(ExactComplex(Rational(t.class_sizes[th], t.order)), false);
      out[z] += w * chi_conj * dk * gamma[th];
    }
  return out;
}

ExactComplex conv_exact(const ExactComplex& v, bool conjugate) {
  return conjugate ? v.conj() : v;
}

std::complex<double> conv_cx(const ExactComplex& v, bool conjugate) {
  double re = to_double(v.re), im = to_double(v.im);
  return {re, conjugate ? -im : im};
}

}  // namespace

std::vector<ExactComplex> dualize_r_to_gamma(const std::vector<ExactComplex>& r, int k,
                                             const FiniteGroupTable& t) {
  return r_to_gamma_impl(r, k, t, conv_exact);
}
std::vector<ExactComplex> dualize_gamma_to_r(const std::vector<ExactComplex>& gamma, int k,
                                             const FiniteGroupTable& t) {
  return gamma_to_r_impl(gamma, k, t, conv_exact);
}
std::vector<std::complex<double>> dualize_r_to_gamma(const std::vector<std::complex<double>>& r,
                                                     int k, const FiniteGroupTable& t) {
  return r_to_gamma_impl(r, k, t, conv_cx);
}
std::vector<std::complex<double>> dualize_gamma_to_r(
    const std::vector<std::complex<double>>& gamma, int k, const FiniteGroupTable& t) {
  return gamma_to_r_impl(gamma, k, t, conv_cx);
}

}  // namespace resind
