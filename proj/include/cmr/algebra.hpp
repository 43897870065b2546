#ifndef CMR_ALGEBRA_HPP
#define CMR_ALGEBRA_HPP

#include <stdexcept>
#include <vector>

#include "cmr/matrix.hpp"
#include "cmr/tensor.hpp"

namespace cmr {

// Root lambda_k - lambda_l of gl_n, 1-based indices, k != l.
struct Root {
  int k;
  int l;

  Root(int k_, int l_) : k(k_), l(l_) {
    if (k == l) throw std::invalid_argument("Root: k and l must differ");
  }
  Root operator-() const { return Root(l, k); }
  friend bool operator==(const Root& a, const Root& b) { return a.k == b.k && a.l == b.l; }
};

// All roots of gl_n in a fixed deterministic order (row-major over (k,l), k != l).
inline std::vector<Root> all_roots(int n) {
  std::vector<Root> r;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      if (k != l) r.emplace_back(k, l);
  return r;
}

inline void check_index(int k, int n) {
  if (k < 1 || k > n) throw std::out_of_range("basis index out of range");
}

inline void check_root(const Root& a, int n) {
  check_index(a.k, n);
  check_index(a.l, n);
}

template <typename T = double>
Mat<T> basis_H(int k, int n) {
  check_index(k, n);
  return Mat<T>::elementary(n, k - 1, k - 1);
}

// E_alpha = e_kl for alpha = lambda_k - lambda_l.
template <typename T = double>
Mat<T> basis_E(const Root& a, int n) {
  check_root(a, n);
  return Mat<T>::elementary(n, a.k - 1, a.l - 1);
}

// H_alpha = e_kk - e_ll.
template <typename T = double>
Mat<T> basis_Halpha(const Root& a, int n) {
  check_root(a, n);
  Mat<T> m(n);
  m(a.k - 1, a.k - 1) = T{1};
  m(a.l - 1, a.l - 1) = T{-1};
  return m;
}

// K_alpha = e_kk + e_ll; symmetric under alpha -> -alpha.
template <typename T = double>
Mat<T> basis_Kalpha(const Root& a, int n) {
  check_root(a, n);
  Mat<T> m(n);
  m(a.k - 1, a.k - 1) = T{1};
  m(a.l - 1, a.l - 1) = T{1};
  return m;
}

// Expansion of an arbitrary matrix in the {H_k} u {E_alpha} basis; since
// that basis is just {e_kl} reshuffled, the coefficients are the entries.
// Returned row-major over e_kl, matching the fixed basis ordering.
template <typename T>
std::vector<T> expand_in_basis(const Mat<T>& m) {
  std::vector<T> c;
  c.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) c.push_back(m(i, j));
  return c;
}

template <typename T>
Mat<T> from_basis_coeffs(const std::vector<T>& c, int n) {
  Mat<T> m(n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = c[idx++];
  return m;
}

}  // namespace cmr

#endif
