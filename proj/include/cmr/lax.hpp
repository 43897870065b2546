#ifndef CMR_LAX_HPP
#define CMR_LAX_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmr/matrix.hpp"
#include "cmr/potentials.hpp"
#include "cmr/tensor.hpp"

namespace cmr {

// Canonical convention throughout: {p_k, q_l} = delta_kl, taken verbatim from
// the bracket stated alongside the Hamiltonian. Every Poisson computation in
// this module derives from this single choice.
struct PhasePoint {
  std::vector<double> q;
  std::vector<double> p;

  int n() const { return static_cast<int>(q.size()); }

  PhasePoint() = default;  // empty placeholder; validated construction below
  PhasePoint(std::vector<double> q_, std::vector<double> p_)
      : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size()) throw std::invalid_argument("PhasePoint: |q| != |p|");
    if (q.empty()) throw std::invalid_argument("PhasePoint: empty");
  }
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> states;
};

struct FlowAbortError : std::runtime_error {
  int step;
  int k, l;
  FlowAbortError(int step_, int k_, int l_)
      : std::runtime_error("flow aborted at step " + std::to_string(step_) +
                           ": pair (" + std::to_string(k_) + "," + std::to_string(l_) +
                           ") approaches a singularity"),
        step(step_), k(k_), l(l_) {}
};

// L_kl = p_k delta_kl + i (1 - delta_kl) w(q_k - q_l); Hermitian for real
// phase points since w is odd.
inline CMat build_lax(const PhasePoint& x, const Potential& pot) {
  const int n = x.n();
  CMat L(n);
  for (int k = 0; k < n; ++k) {
    L(k, k) = x.p[k];
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      auto pv = pair_potential_values(pot, x.q[k] - x.q[l], k + 1, l + 1);
      L(k, l) = Complex(0.0, pv.w);
    }
  }
  return L;
}

inline double hamiltonian(const PhasePoint& x, const Potential& pot) {
  const int n = x.n();
  double h = 0;
  for (int k = 0; k < n; ++k) h += 0.5 * x.p[k] * x.p[k];
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      h += pair_potential_values(pot, x.q[k] - x.q[l], k + 1, l + 1).v;
  return h;
}

// {L_1, L_2} computed analytically:
//   {L1,L2} = sum_m (dL/dp_m (x) dL/dq_m - dL/dq_m (x) dL/dp_m)
// with dL/dp_m = H_m and dL/dq_m supported on the off-diagonal rows/columns m.
inline Two<Complex> lax_poisson_tensor(const PhasePoint& x, const Potential& pot) {
  const int n = x.n();
  Two<Complex> t(n);
  std::vector<CMat> dLdq(n, CMat(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      auto pv = pair_potential_values(pot, x.q[k] - x.q[l], k + 1, l + 1);
      Complex d(0.0, pv.wprime);
      dLdq[k](k, l) += d;
      dLdq[l](k, l) -= d;
    }
  for (int m = 0; m < n; ++m) {
    // dL/dp_m = e_mm: only rows (m,m) of slot 1 / slot 2 contribute.
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        Complex d = dLdq[m](k, l);
        if (d == Complex{}) continue;
        t(m, m, k, l) += d;
        t(k, l, m, m) -= d;
      }
  }
  return t;
}

namespace detail {

inline std::vector<double> forces(const std::vector<double>& q, const Potential& pot) {
  const int n = static_cast<int>(q.size());
  std::vector<double> f(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      auto pv = pair_potential_values(pot, q[k] - q[l], k + 1, l + 1);
      double vp = 2.0 * pv.w * pv.wprime;  // v = w^2
      f[k] -= vp;
      f[l] += vp;
    }
  return f;
}

}  // namespace detail

// Classical fixed-step RK4 on Hamilton's equations qdot_k = p_k,
// pdot_k = -sum_{l != k} v'(q_k - q_l).
inline Trajectory integrate_flow(const PhasePoint& x0, const Potential& pot, double dt,
                                 int steps) {
  if (dt <= 0) throw std::invalid_argument("integrate_flow: dt must be positive");
  const int n = x0.n();
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);
  std::vector<double> q = x0.q, p = x0.p;
  std::vector<double> kq(n), kp(n), q2(n), p2(n), aq(n), ap(n);
  for (int s = 0; s < steps; ++s) {
    try {
      auto eval = [&](const std::vector<double>& qq, const std::vector<double>& pp,
                      std::vector<double>& dq, std::vector<double>& dp) {
        dq = pp;
        dp = detail::forces(qq, pot);
      };
      std::vector<double> k1q(n), k1p(n), k2q(n), k2p(n), k3q(n), k3p(n), k4q(n), k4p(n);
      eval(q, p, k1q, k1p);
      for (int i = 0; i < n; ++i) { q2[i] = q[i] + 0.5 * dt * k1q[i]; p2[i] = p[i] + 0.5 * dt * k1p[i]; }
      eval(q2, p2, k2q, k2p);
      for (int i = 0; i < n; ++i) { q2[i] = q[i] + 0.5 * dt * k2q[i]; p2[i] = p[i] + 0.5 * dt * k2p[i]; }
      eval(q2, p2, k3q, k3p);
      for (int i = 0; i < n; ++i) { q2[i] = q[i] + dt * k3q[i]; p2[i] = p[i] + dt * k3p[i]; }
      eval(q2, p2, k4q, k4p);
      for (int i = 0; i < n; ++i) {
        q[i] += dt / 6.0 * (k1q[i] + 2 * k2q[i] + 2 * k3q[i] + k4q[i]);
        p[i] += dt / 6.0 * (k1p[i] + 2 * k2p[i] + 2 * k3p[i] + k4p[i]);
      }
      // guard the new state itself
      detail::forces(q, pot);
    } catch (const SingularityError& e) {
      throw FlowAbortError(s, e.k, e.l);
    }
    traj.times.push_back((s + 1) * dt);
    traj.states.emplace_back(q, p);
  }
  return traj;
}

// Max drift of tr L^m, m = 1..n, over (a subsample of) the trajectory.
inline double spectral_drift(const Trajectory& traj, const Potential& pot,
                             int max_samples = 200) {
  const int n = traj.states.front().n();
  const int count = static_cast<int>(traj.states.size());
  const int stride = std::max(1, count / max_samples);
  CMat L0 = build_lax(traj.states.front(), pot);
  std::vector<Complex> tr0(n);
  {
    CMat acc = L0;
    for (int m = 1; m <= n; ++m) {
      tr0[m - 1] = acc.trace();
      if (m < n) acc = acc * L0;
    }
  }
  double drift = 0;
  for (int s = 0; s < count; s += stride) {
    int idx = (s + stride >= count) ? count - 1 : s;  // always include the endpoint
    CMat L = build_lax(traj.states[idx], pot);
    CMat acc = L;
    for (int m = 1; m <= n; ++m) {
      drift = std::max(drift, std::abs(acc.trace() - tr0[m - 1]));
      if (m < n) acc = acc * L;
    }
  }
  return drift;
}

// Sorted real eigenvalues of a Hermitian Lax matrix.
inline std::vector<double> hermitian_eigenvalues(const CMat& m) {
  const int n = m.dim();
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double eigenvalue_drift(const Trajectory& traj, const Potential& pot) {
  auto ev0 = hermitian_eigenvalues(build_lax(traj.states.front(), pot));
  auto ev1 = hermitian_eigenvalues(build_lax(traj.states.back(), pot));
  double d = 0;
  for (std::size_t i = 0; i < ev0.size(); ++i) d = std::max(d, std::abs(ev0[i] - ev1[i]));
  return d;
}

inline double total_momentum(const PhasePoint& x) {
  double s = 0;
  for (double v : x.p) s += v;
  return s;
}

}  // namespace cmr

#endif
