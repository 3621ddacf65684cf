#include "nsgf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nsgf::quad {
namespace {

using LD = long double;

// Stable evaluation of P_n(x) by the three-term recurrence. Monomial
// coefficient forms cancel catastrophically beyond degree ~14, so no
// part of the generator goes through monomial coefficients.
LD legendre_eval(int n, LD x) {
  if (n == 0) return 1.0L;
  LD pm1 = 1.0L, p = x;
  for (int k = 1; k < n; ++k) {
    LD next = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

// P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1), |x| != 1.
LD legendre_deriv(int n, LD x) {
  if (n == 0) return 0.0L;
  LD pm1 = 1.0L, p = x;
  for (int k = 1; k < n; ++k) {
    LD next = ((2 * k + 1) * x * p - k * pm1) / (k + 1);
    pm1 = p;
    p = next;
  }
  return n * (x * p - pm1) / (x * x - 1);
}

struct GaussRule {
  std::vector<LD> x;  // nonnegative nodes, ascending; x[0] == 0 for odd n
  std::vector<LD> w;
};

// Gauss-Legendre rule of order n (n even keeps the code below simple for
// the helper; n odd supported for G7).
GaussRule gauss_rule(int n) {
  GaussRule r;
  int pairs = n / 2;
  bool has_center = n % 2 != 0;
  if (has_center) {
    r.x.push_back(0.0L);
    LD d = legendre_deriv(n, 0.0L);
    r.w.push_back(2.0L / (d * d));
  }
  std::vector<LD> pos;
  for (int i = 1; i <= pairs; ++i) {
    LD x = std::cos(static_cast<LD>(M_PI) * (4 * i - 1) / (4 * n + 2));
    for (int it = 0; it < 100; ++it) {
      LD dx = legendre_eval(n, x) / legendre_deriv(n, x);
      x -= dx;
      if (std::abs(dx) < 1e-21L) break;
    }
    pos.push_back(x);
  }
  std::sort(pos.begin(), pos.end());
  for (LD x : pos) {
    LD d = legendre_deriv(n, x);
    r.x.push_back(x);
    r.w.push_back(2.0L / ((1 - x * x) * d * d));
  }
  return r;
}

// Integral over [-1,1] of an even integrand, using a symmetric Gauss rule.
template <class F>
LD integrate_even(const GaussRule& g, F&& f) {
  LD acc = 0;
  std::size_t i = 0;
  if (g.x[0] == 0.0L) {
    acc += g.w[0] * f(0.0L);
    i = 1;
  }
  for (; i < g.x.size(); ++i) acc += g.w[i] * 2 * f(g.x[i]);
  return acc;
}

// Solve a small dense linear system in long double, partial pivoting.
std::vector<LD> solve_dense(std::vector<std::vector<LD>> a, std::vector<LD> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      LD m = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      rhs[r] -= m * rhs[col];
    }
  }
  std::vector<LD> x(n, 0.0L);
  for (std::size_t r = n; r-- > 0;) {
    LD acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

Gk15Rule<LD> build_rule() {
  // Helper Gauss rule, exact through degree 47: covers every integrand
  // below (max degree 23).
  const GaussRule g24 = gauss_rule(24);
  const GaussRule g7 = gauss_rule(7);

  const std::array<LD, 3> g = {g7.x[1], g7.x[2], g7.x[3]};

  // Stieltjes polynomial E8 in the Legendre basis:
  //   E8 = sum_{m in 0,2,4,6} e_m P_m + e8 P_8,  e8 = 128/6435 (monic),
  // determined by  integral P7 E8 P_k = 0  for k = 1,3,5,7
  // (even k vanish by parity).
  const LD e8_lead = 128.0L / 6435.0L;
  auto triple = [&](int m, int k) {
    return integrate_even(g24, [&](LD x) {
      // P7 * P_m * P_k is even for odd k here; integrate_even handles x>=0.
      return legendre_eval(7, x) * legendre_eval(m, x) * legendre_eval(k, x);
    });
  };
  std::vector<std::vector<LD>> mat(4, std::vector<LD>(4));
  std::vector<LD> rhs(4);
  for (int j = 0; j < 4; ++j) {
    int k = 2 * j + 1;
    for (int mi = 0; mi < 4; ++mi) mat[j][mi] = triple(2 * mi, k);
    rhs[j] = -e8_lead * triple(8, k);
  }
  const std::vector<LD> e = solve_dense(mat, rhs);

  auto e8_eval = [&](LD x) {
    return e[0] + e[1] * legendre_eval(2, x) + e[2] * legendre_eval(4, x) +
           e[3] * legendre_eval(6, x) + e8_lead * legendre_eval(8, x);
  };
  auto e8_deriv = [&](LD x) {
    return e[1] * legendre_deriv(2, x) + e[2] * legendre_deriv(4, x) +
           e[3] * legendre_deriv(6, x) + e8_lead * legendre_deriv(8, x);
  };

  // Kronrod nodes interlace the Gauss nodes: one root of E8 in each of
  // (0,g1), (g1,g2), (g2,g3), (g3,1).
  std::array<LD, 4> kn{};
  std::array<LD, 5> brackets = {0.0L, g[0], g[1], g[2], 1.0L};
  for (int i = 0; i < 4; ++i) {
    LD lo = brackets[i] + 1e-10L, hi = brackets[i + 1] - 1e-10L;
    LD flo = e8_eval(lo);
    for (int it = 0; it < 90; ++it) {
      LD mid = (lo + hi) / 2;
      LD fm = e8_eval(mid);
      if ((flo < 0) == (fm < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    LD x = (lo + hi) / 2;
    for (int it = 0; it < 60; ++it) {
      LD dx = e8_eval(x) / e8_deriv(x);
      x -= dx;
      if (std::abs(dx) < 1e-21L) break;
    }
    kn[i] = x;
  }

  std::array<LD, 8> xs = {0.0L, kn[0], g[0], kn[1], g[1], kn[2], g[2], kn[3]};
  std::array<bool, 8> is_gauss = {true, false, true, false, true, false, true, false};

  // Kronrod weights from exactness on even Legendre polynomials P_0..P_14.
  std::vector<std::vector<LD>> wmat(8, std::vector<LD>(8));
  std::vector<LD> wrhs(8, 0.0L);
  for (int j = 0; j <= 7; ++j) {
    for (int i = 0; i < 8; ++i) {
      LD v = legendre_eval(2 * j, xs[i]);
      wmat[j][i] = (i == 0) ? v : 2 * v;
    }
    wrhs[j] = (j == 0) ? 2.0L : 0.0L;
  }
  std::vector<LD> kw = solve_dense(wmat, wrhs);

  Gk15Rule<LD> rule;
  rule.xs = xs;
  for (int i = 0; i < 8; ++i) {
    rule.kronrod_w[i] = kw[i];
    rule.gauss_w[i] = 0.0L;
  }
  for (int i = 0; i < 8; ++i) {
    if (!is_gauss[i]) continue;
    LD x = xs[i];
    LD d = legendre_deriv(7, x);
    rule.gauss_w[i] = (i == 0) ? 2.0L / (d * d) : 2.0L / ((1 - x * x) * d * d);
  }

  // Self-verification: K15 exact through degree 22, G7 through 13
  // (odd degrees vanish by symmetry).
  auto apply = [&](int deg, bool kronrod) {
    LD acc = 0;
    for (int i = 0; i < 8; ++i) {
      LD w = kronrod ? rule.kronrod_w[i] : rule.gauss_w[i];
      LD v = (i == 0) ? legendre_eval(deg, rule.xs[0])
                      : legendre_eval(deg, rule.xs[i]) + legendre_eval(deg, -rule.xs[i]);
      acc += w * v;
    }
    return acc;
  };
  if (std::abs(apply(0, true) - 2.0L) > 5e-18L || std::abs(apply(0, false) - 2.0L) > 5e-18L)
    throw std::logic_error("gk15 rule generation failed unit-weight check");
  for (int deg = 2; deg <= 22; deg += 2)
    if (std::abs(apply(deg, true)) > 1e-16L)
      throw std::logic_error("gk15 rule generation failed Kronrod exactness check");
  for (int deg = 2; deg <= 12; deg += 2)
    if (std::abs(apply(deg, false)) > 1e-16L)
      throw std::logic_error("gk15 rule generation failed Gauss exactness check");
  for (int i = 0; i < 8; ++i)
    if (rule.kronrod_w[i] <= 0)
      throw std::logic_error("gk15 rule generation produced a nonpositive weight");
  return rule;
}

}  // namespace

const Gk15Rule<long double>& gk15_rule_ld() {
  static const Gk15Rule<long double> rule = build_rule();
  return rule;
}

}  // namespace nsgf::quad
