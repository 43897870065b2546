#ifndef CMR_FROBENIUS_HPP
#define CMR_FROBENIUS_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "cmr/matrix.hpp"
#include "cmr/rational.hpp"
#include "cmr/rmatrix.hpp"
#include "cmr/tensor.hpp"

namespace cmr {

// Basis of the subalgebra F_n of matrices with vanishing last row:
// T_a = e_kl, 1 <= k <= n-1, 1 <= l <= n, row-major order. Indices 0-based.
struct FrobeniusBasis {
  int n;
  std::vector<std::pair<int, int>> elems;
};

inline FrobeniusBasis frobenius_basis(int n) {
  if (n < 2) throw std::invalid_argument("frobenius_basis: n must be >= 2");
  FrobeniusBasis b{n, {}};
  b.elems.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int k = 0; k < n - 1; ++k)
    for (int l = 0; l < n; ++l) b.elems.emplace_back(k, l);
  return b;
}

// J_n = sum_k e_{k+1,k}, the principal nilpotent.
template <typename T = Rat>
Mat<T> jn_matrix(int n) {
  Mat<T> j(n);
  for (int k = 0; k + 1 < n; ++k) j(k + 1, k) = T{1};
  return j;
}

// Lambda_n(T) = tr(J_n T).
template <typename T>
T lambda_functional(const Mat<T>& t, int n) {
  if (t.dim() != n) throw std::invalid_argument("lambda_functional: dimension mismatch");
  return (jn_matrix<T>(n) * t).trace();
}

// Reads off the unique antisymmetric M with
//   Rp = sum_{a,b} M_ab (T_a (x) T_b - T_b (x) T_a),
// i.e. M_ab = (coefficient of T_a (x) T_b in Rp) / 2. Rejects input outside
// F_n (x) F_n or without exact antisymmetry.
inline QMat expansion_matrix(const Two<Rat>& rp, const FrobeniusBasis& basis) {
  const int n = basis.n;
  if (rp.dim() != n) throw std::invalid_argument("expansion_matrix: dimension mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (!(rp(i, j, k, l) == -rp(k, l, i, j)))
            throw std::invalid_argument("expansion_matrix: tensor is not antisymmetric");
          if ((i == n - 1 || k == n - 1) && !rp(i, j, k, l).is_zero())
            throw std::invalid_argument("expansion_matrix: tensor is not in F_n (x) F_n");
        }
  const int dim = static_cast<int>(basis.elems.size());
  QMat m(dim);
  for (int a = 0; a < dim; ++a) {
    auto [ka, la] = basis.elems[a];
    for (int b = 0; b < dim; ++b) {
      auto [kb, lb] = basis.elems[b];
      m(a, b) = rp(ka, la, kb, lb) / Rat(2);
    }
  }
  return m;
}

struct FrobeniusCheck {
  int n = 0;
  QMat M;         // expansion matrix of the constant r-matrix
  QMat Minv;      // exact inverse
  QMat G;         // G_ab = Lambda_n([T_a, T_b])
  Rat kappa;      // scalar with Minv = kappa * G
  Rat residual;   // max |Minv - kappa G|, exact
  bool invertible = false;
};

// Builds M from the constant r-matrix, inverts it exactly, and measures the
// proportionality Minv = kappa * Lambda_n([T_a, T_b]).
inline FrobeniusCheck frobenius_inverse_check(int n) {
  auto basis = frobenius_basis(n);
  const int dim = static_cast<int>(basis.elems.size());
  FrobeniusCheck out;
  out.n = n;
  out.M = expansion_matrix(to_rat(constant_R(n)), basis);
  out.G = QMat(dim);
  for (int a = 0; a < dim; ++a) {
    auto [ka, la] = basis.elems[a];
    QMat Ta = QMat::elementary(n, ka, la);
    for (int b = 0; b < dim; ++b) {
      auto [kb, lb] = basis.elems[b];
      QMat Tb = QMat::elementary(n, kb, lb);
      out.G(a, b) = lambda_functional(comm(Ta, Tb), n);
    }
  }
  try {
    out.Minv = inverse(out.M);
    out.invertible = true;
  } catch (const std::domain_error&) {
    out.invertible = false;  // contradicts the expected non-degeneracy; reported, not thrown
    return out;
  }
  out.kappa = Rat(0);
  for (int a = 0; a < dim && out.kappa.is_zero(); ++a)
    for (int b = 0; b < dim; ++b)
      if (!out.G(a, b).is_zero()) {
        out.kappa = out.Minv(a, b) / out.G(a, b);
        break;
      }
  out.residual = Rat(0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Rat d = (out.Minv(a, b) - out.kappa * out.G(a, b)).abs();
      if (d.to_double() > out.residual.to_double()) out.residual = d;
    }
  return out;
}

}  // namespace cmr

#endif
