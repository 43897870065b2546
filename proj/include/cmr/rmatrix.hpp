#ifndef CMR_RMATRIX_HPP
#define CMR_RMATRIX_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/algebra.hpp"
#include "cmr/lax.hpp"
#include "cmr/matrix.hpp"
#include "cmr/potentials.hpp"
#include "cmr/tensor.hpp"

namespace cmr {

// ---------------------------------------------------------------------------
// Cartan map: root -> traceless diagonal matrix, subject to
//   C_{-alpha} = -C_alpha  and  beta(C_alpha) = alpha(C_beta).
// Stored as the diagonal vector per ordered root (k,l), 0-based internally.
// ---------------------------------------------------------------------------
class CartanMap {
public:
  explicit CartanMap(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }

  // diagonal entry m of C_alpha for alpha = lambda_{k+1} - lambda_{l+1} (0-based k,l).
  double value(int k, int l, int m) const { return c_[idx(k, l, m)]; }
  double& value(int k, int l, int m) { return c_[idx(k, l, m)]; }

  // alpha(C_beta) with alpha = (k,l), beta = (m,o), all 0-based.
  double pairing(int k, int l, int m, int o) const { return value(m, o, k) - value(m, o, l); }

  static CartanMap zero(int n) { return CartanMap(n); }

  // case I: C_alpha = -H_alpha; case II: C_alpha = +H_alpha.
  static CartanMap case_I(int n) { return scaled_halpha(n, -1.0); }
  static CartanMap case_II(int n) { return scaled_halpha(n, +1.0); }

  // Max violation of the two defining conditions over all root pairs.
  double condition_residual() const {
    double r = 0;
    for (int k = 0; k < n_; ++k)
      for (int l = 0; l < n_; ++l) {
        if (k == l) continue;
        for (int m = 0; m < n_; ++m)
          r = std::max(r, std::abs(value(k, l, m) + value(l, k, m)));
        for (int m = 0; m < n_; ++m)
          for (int o = 0; o < n_; ++o) {
            if (m == o) continue;
            r = std::max(r, std::abs(pairing(m, o, k, l) - pairing(k, l, m, o)));
          }
      }
    return r;
  }

private:
  static CartanMap scaled_halpha(int n, double s) {
    CartanMap c(n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (k == l) continue;
        c.value(k, l, k) = s;
        c.value(k, l, l) = -s;
      }
    return c;
  }

  std::size_t idx(int k, int l, int m) const {
    return (static_cast<std::size_t>(k) * n_ + l) * n_ + m;
  }

  int n_;
  std::vector<double> c_;
};

namespace detail {

// Traceless diagonal vector from its evaluations against the simple roots:
// e_i = c_i - c_{i+1}, sum c = 0.
inline std::vector<double> diag_from_simple_evals(const std::vector<double>& e, int n) {
  std::vector<double> c(n, 0.0);
  for (int j = n - 2; j >= 0; --j) c[j] = c[j + 1] + e[j];
  double mean = 0;
  for (double v : c) mean += v;
  mean /= n;
  for (double& v : c) v -= mean;
  return c;
}

}  // namespace detail

// Extends values prescribed on the simple roots alpha_i = lambda_i - lambda_{i+1}
// to the full root system: for each root alpha, C_alpha is the unique traceless
// diagonal matrix with alpha_i(C_alpha) = alpha(C_{alpha_i}) for every simple
// root. The conditions already tie the simple-root values to each other
// (alpha_i(C_{alpha_j}) must be symmetric in i,j), so the input is validated
// rather than accepted blindly; see random_simple_cartan_values for sampling
// admissible inputs.
inline CartanMap extend_simple_C(const std::vector<std::vector<double>>& simple, int n,
                                 double input_tol = 1e-9) {
  if (static_cast<int>(simple.size()) != n - 1)
    throw std::invalid_argument("extend_simple_C: need n-1 simple-root values");
  for (const auto& v : simple) {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("extend_simple_C: diagonal must have n entries");
    double tr = 0;
    for (double x : v) tr += x;
    if (std::abs(tr) > input_tol)
      throw std::invalid_argument("extend_simple_C: simple-root value is not traceless");
  }
  // alpha_i(C_{alpha_j}) symmetric in (i,j); otherwise no map satisfies the
  // pairing condition on simple pairs.
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) {
      double lhs = simple[j][i] - simple[j][i + 1];
      double rhs = simple[i][j] - simple[i][j + 1];
      if (std::abs(lhs - rhs) > input_tol)
        throw std::invalid_argument(
            "extend_simple_C: simple-root values violate the pairing symmetry");
    }
  CartanMap c(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      std::vector<double> e(n - 1);
      for (int i = 0; i < n - 1; ++i) e[i] = simple[i][k] - simple[i][l];
      auto d = detail::diag_from_simple_evals(e, n);
      for (int m = 0; m < n; ++m) c.value(k, l, m) = d[m];
    }
  return c;
}

// ---------------------------------------------------------------------------
// Dynamical r-matrix family and the linear r-matrix bracket residual.
// ---------------------------------------------------------------------------

enum class CMode { CaseI, CaseII, GeneralC };
enum class QMode { Zero, SlnProjection };

inline const char* cmode_name(CMode c) {
  switch (c) {
    case CMode::CaseI: return "I";
    case CMode::CaseII: return "II";
    case CMode::GeneralC: return "general";
  }
  return "?";
}

// R(q) = sum_alpha (w'_a/w_a) E_a (x) E_{-a}
//      + 1/2 sum_alpha w_a (C_a - K_a) (x) E_a
//      + 1_n (x) Q(q)
inline Two<double> build_dynamical_R(const std::vector<double>& q, const Potential& pot,
                                     const CartanMap& c, QMode qmode) {
  const int n = static_cast<int>(q.size());
  if (c.dim() != n) throw std::invalid_argument("build_dynamical_R: CartanMap dimension");
  Two<double> r(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      auto pv = pair_potential_values(pot, q[k] - q[l], k + 1, l + 1);
      r(k, l, l, k) += pv.wprime / pv.w;
      for (int m = 0; m < n; ++m) {
        double cm = c.value(k, l, m);
        double km = (m == k || m == l) ? 1.0 : 0.0;
        if (cm != 0.0 || km != 0.0) r(m, m, k, l) += 0.5 * pv.w * (cm - km);
      }
      if (qmode == QMode::SlnProjection) {
        // Q = (1/n) sum_alpha w_alpha E_alpha, added as 1_n (x) Q.
        for (int m = 0; m < n; ++m) r(m, m, k, l) += pv.w / n;
      }
    }
  return r;
}

// Max-abs entry of {L1,L2} - [R12, L1] + [R21, L2].
inline double rmatrix_residual(const PhasePoint& x, const Two<double>& r, const Potential& pot) {
  auto pt = lax_poisson_tensor(x, pot);
  CMat L = build_lax(x, pot);
  auto rc = to_complex(r);
  auto res = pt - bracket_action(rc, L, 1) + bracket_action(swap_factors(rc), L, 2);
  return res.max_abs();
}

// ---------------------------------------------------------------------------
// Gauge potentials A_k and the flattening conditions.
// ---------------------------------------------------------------------------

enum class GaugeCase { I, II };

inline const char* gauge_case_name(GaugeCase c) { return c == GaugeCase::I ? "I" : "II"; }

// A_k = sum_l Psi_k^l H_l + sum_alpha w_alpha b_k^alpha E_alpha with
//   case I : b_k^{(m,l)} = delta_km + Omega,  Psi_k^l = -w'(q_l-q_k)/w(q_l-q_k)
//   case II: b_k^{(m,l)} = delta_kl + Omega,  Psi_k^l = +w'(q_l-q_k)/w(q_l-q_k)
// and Psi_k^k = 0 in both cases.
inline std::vector<DMat> build_gauge_potential(const std::vector<double>& q,
                                               const Potential& pot, GaugeCase gcase,
                                               double omega) {
  const int n = static_cast<int>(q.size());
  std::vector<DMat> A(n, DMat(n));
  double psi_sign = (gcase == GaugeCase::I) ? -1.0 : 1.0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      auto pv = pair_potential_values(pot, q[l] - q[k], l + 1, k + 1);
      A[k](l, l) += psi_sign * pv.wprime / pv.w;
    }
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l) {
        if (m == l) continue;
        double b = ((gcase == GaugeCase::I) ? (k == m ? 1.0 : 0.0) : (k == l ? 1.0 : 0.0)) + omega;
        if (b == 0.0) continue;
        auto pv = pair_potential_values(pot, q[m] - q[l], m + 1, l + 1);
        A[k](m, l) += pv.w * b;
      }
  }
  return A;
}

namespace detail {

inline double fd_step(double qk) { return 1e-6 * std::max(1.0, std::abs(qk)); }

template <typename F>
auto central_diff(const std::vector<double>& q, int k, F&& f) {
  double h = fd_step(q[k]);
  std::vector<double> qp = q, qm = q;
  qp[k] += h;
  qm[k] -= h;
  auto plus = f(qp);
  auto minus = f(qm);
  return (1.0 / (2.0 * h)) * (plus - minus);
}

}  // namespace detail

// Max-abs entry of d_k A_l - d_l A_k + [A_l, A_k] over all pairs (k,l);
// derivatives by central differences.
inline double curvature_residual(const std::vector<double>& q, const Potential& pot,
                                 GaugeCase gcase, double omega) {
  const int n = static_cast<int>(q.size());
  auto A = build_gauge_potential(q, pot, gcase, omega);
  double res = 0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      DMat dAl = detail::central_diff(q, k, [&](const std::vector<double>& qq) {
        return build_gauge_potential(qq, pot, gcase, omega)[l];
      });
      DMat dAk = detail::central_diff(q, l, [&](const std::vector<double>& qq) {
        return build_gauge_potential(qq, pot, gcase, omega)[k];
      });
      res = std::max(res, (dAl - dAk + comm(A[l], A[k])).max_abs());
    }
  return res;
}

// Max-abs entry over k of
//   d_k R + sum_l d_l A_k (x) H_l + [R, A_k (x) 1 + 1 (x) A_k]
//         + sum_l A_l (x) [H_l, A_k].
// R is built from the given Cartan map with Q = 0; passing the zero map gives
// the Avan-Talon r-matrix, for which no constant gauge data exists and the
// residual stays bounded away from zero.
inline double gauge_condition_residual(const std::vector<double>& q, const Potential& pot,
                                       const CartanMap& c, GaugeCase gcase, double omega) {
  const int n = static_cast<int>(q.size());
  auto A = build_gauge_potential(q, pot, gcase, omega);
  auto R = build_dynamical_R(q, pot, c, QMode::Zero);
  double res = 0;
  for (int k = 0; k < n; ++k) {
    Two<double> t = detail::central_diff(q, k, [&](const std::vector<double>& qq) {
      return build_dynamical_R(qq, pot, c, QMode::Zero);
    });
    for (int l = 0; l < n; ++l) {
      DMat dAk = detail::central_diff(q, l, [&](const std::vector<double>& qq) {
        return build_gauge_potential(qq, pot, gcase, omega)[k];
      });
      DMat Hl = DMat::elementary(n, l, l);
      t += tensor_product(dAk, Hl);
      t += tensor_product(A[l], comm(Hl, A[k]));
    }
    t += bracket_action(R, A[k], 1);
    t += bracket_action(R, A[k], 2);
    res = std::max(res, t.max_abs());
  }
  return res;
}

// ---------------------------------------------------------------------------
// Rational-case gauge matrix phi(q) and the constant r-matrix.
// ---------------------------------------------------------------------------

inline void check_distinct(const std::vector<double>& q, double tol = 1e-9) {
  for (std::size_t j = 0; j < q.size(); ++j)
    for (std::size_t k = j + 1; k < q.size(); ++k)
      if (std::abs(q[j] - q[k]) < tol)
        throw std::invalid_argument("coincident coordinates q_" + std::to_string(j + 1) +
                                    " = q_" + std::to_string(k + 1));
}

// phi_jk = e_{n-j}(q with q_k omitted), bottom row all ones.
inline DMat build_phi(const std::vector<double>& q) {
  const int n = static_cast<int>(q.size());
  check_distinct(q);
  DMat phi(n);
  for (int k = 0; k < n; ++k) {
    // elementary symmetric polynomials of {q_l : l != k}
    std::vector<double> e(n, 0.0);
    e[0] = 1.0;
    int deg = 0;
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      ++deg;
      for (int m = deg; m >= 1; --m) e[m] += q[l] * e[m - 1];
    }
    for (int j = 1; j <= n; ++j) phi(j - 1, k) = e[n - j];
  }
  return phi;
}

inline double vandermonde_det(const std::vector<double>& q) {
  double d = 1.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    for (std::size_t k = j + 1; k < q.size(); ++k) d *= q[k] - q[j];
  return d;
}

inline double det(const DMat& m) {
  const int n = m.dim();
  DMat a = m;
  double d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      double f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

// Max over k of |d_k phi + phi A_k| for the rational case-I gauge data.
inline double phi_gauge_check(const std::vector<double>& q) {
  const int n = static_cast<int>(q.size());
  check_distinct(q);
  auto pot = Potential::rational();
  auto A = build_gauge_potential(q, pot, GaugeCase::I, 0.0);
  DMat phi = build_phi(q);
  double res = 0;
  for (int k = 0; k < n; ++k) {
    DMat dphi = detail::central_diff(q, k, [](const std::vector<double>& qq) {
      return build_phi(qq);
    });
    res = std::max(res, (dphi + phi * A[k]).max_abs());
  }
  return res;
}

namespace detail {

// (g (x) g) X (g (x) g)^{-1} via slot-wise multiplication. The similarity
// transform squares the conditioning of g, so the contraction runs in
// extended precision to keep the result usable at double tolerances.
inline Two<double> conjugate_both_slots(const DMat& g, const Two<double>& x) {
  const int n = g.dim();
  Mat<long double> gl(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gl(i, j) = g(i, j);
  Mat<long double> gi = inverse(gl);
  Two<double> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          long double s = 0;
          for (int a = 0; a < n; ++a) {
            if (gl(i, a) == 0.0L) continue;
            for (int b = 0; b < n; ++b) {
              for (int c = 0; c < n; ++c) {
                if (gl(k, c) == 0.0L) continue;
                for (int d = 0; d < n; ++d)
                  s += gl(i, a) * static_cast<long double>(x(a, b, c, d)) * gi(b, j) *
                       gl(k, c) * gi(d, l);
              }
            }
          }
          r(i, j, k, l) = static_cast<double>(s);
        }
  return r;
}

}  // namespace detail

// R'(q) = (g (x) g) (R(q) + sum_k A_k (x) H_k) (g (x) g)^{-1}
inline Two<double> gauge_transform_R(const DMat& g, const Two<double>& r,
                                     const std::vector<DMat>& A) {
  const int n = g.dim();
  Two<double> x = r;
  for (int k = 0; k < static_cast<int>(A.size()); ++k)
    x += tensor_product(A[k], DMat::elementary(n, k, k));
  return detail::conjugate_both_slots(g, x);
}

// Quadruples (a,b,c,d), 1-based, with a+c+1 = b+d, 1 <= b <= a < n,
// b <= c < n, 1 <= d <= n.
inline std::vector<std::array<int, 4>> constant_R_index_set(int n) {
  std::vector<std::array<int, 4>> s;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = b; c < n; ++c) {
        int d = a + c + 1 - b;
        if (d >= 1 && d <= n) s.push_back({a, b, c, d});
      }
  return s;
}

// R' = sum_{(a,b,c,d) in S} (e_ab (x) e_cd - e_cd (x) e_ab), integer entries.
inline Two<std::int64_t> constant_R(int n) {
  Two<std::int64_t> r(std::max(n, 1));
  if (n < 2) return r;  // no roots, empty index set
  for (const auto& [a, b, c, d] : constant_R_index_set(n)) {
    r(a - 1, b - 1, c - 1, d - 1) += 1;
    r(c - 1, d - 1, a - 1, b - 1) -= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Path-ordered integration of dg/ds = -g A along straight segments,
// g(q_start) = 1. Path independence follows from zero curvature and is
// exercised in tests rather than assumed.
// ---------------------------------------------------------------------------
inline DMat integrate_gauge(const std::vector<double>& q_start,
                            const std::vector<double>& q_end, const Potential& pot,
                            GaugeCase gcase, double omega, int steps = 400) {
  const int n = static_cast<int>(q_start.size());
  if (q_end.size() != q_start.size())
    throw std::invalid_argument("integrate_gauge: endpoint dimension mismatch");
  std::vector<double> dir(n);
  for (int i = 0; i < n; ++i) dir[i] = q_end[i] - q_start[i];
  auto rhs = [&](double s) {
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = q_start[i] + s * dir[i];
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (std::abs(q[j] - q[k]) < 1e-6)
          throw std::invalid_argument("integrate_gauge: path crosses a singular locus");
    auto A = build_gauge_potential(q, pot, gcase, omega);
    DMat a(n);
    for (int k = 0; k < n; ++k)
      if (dir[k] != 0.0) a += dir[k] * A[k];
    return a;
  };
  DMat g = DMat::identity(n);
  double h = 1.0 / steps;
  for (int s = 0; s < steps; ++s) {
    double t = s * h;
    DMat k1 = -1.0 * (g * rhs(t));
    DMat g2 = g + (h / 2) * k1;
    DMat k2 = -1.0 * (g2 * rhs(t + h / 2));
    DMat g3 = g + (h / 2) * k2;
    DMat k3 = -1.0 * (g3 * rhs(t + h / 2));
    DMat g4 = g + h * k3;
    DMat k4 = -1.0 * (g4 * rhs(t + h));
    g += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g;
}

inline DMat integrate_gauge_path(const std::vector<std::vector<double>>& waypoints,
                                 const Potential& pot, GaugeCase gcase, double omega,
                                 int steps_per_segment = 400) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("integrate_gauge_path: need at least two waypoints");
  DMat g = DMat::identity(static_cast<int>(waypoints.front().size()));
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
    g = g * integrate_gauge(waypoints[i], waypoints[i + 1], pot, gcase, omega,
                            steps_per_segment);
  return g;
}

}  // namespace cmr

#endif
