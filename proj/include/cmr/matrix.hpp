#ifndef CMR_MATRIX_HPP
#define CMR_MATRIX_HPP

#include <complex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cmr/rational.hpp"

namespace cmr {

using Complex = std::complex<double>;

inline double abs_value(const Complex& z) { return std::abs(z); }

// Dense square matrix over an arbitrary scalar ring. Used with
// Complex (Lax matrices), double (r-matrices, gauge data), int64 and
// Rat (exact-mode checks).
template <typename T>
class Mat {
public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T{}) {
    if (n < 0) throw std::invalid_argument("Mat: negative dimension");
  }

  int dim() const { return n_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  // e_kl: single 1 at row k, col l (0-based).
  static Mat elementary(int n, int k, int l) {
    Mat m(n);
    m(k, l) = T{1};
    return m;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_dims(a, b);
    Mat r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    check_dims(a, b);
    Mat r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    check_dims(a, b);
    Mat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        T aik = a(i, k);
        if (aik == T{}) continue;
        for (int j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, abs_value(v));
    return m;
  }

private:
  static void check_dims(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Mat: dimension mismatch");
  }

  int n_;
  std::vector<T> a_;
};

template <typename T>
Mat<T> comm(const Mat<T>& a, const Mat<T>& b) {
  return a * b - b * a;
}

template <typename T>
Mat<T> matpow(const Mat<T>& a, int m) {
  Mat<T> r = Mat<T>::identity(a.dim());
  for (int i = 0; i < m; ++i) r = r * a;
  return r;
}

// Gauss-Jordan inverse with partial pivoting. Over Rat the arithmetic is
// exact and the pivot is any nonzero entry.
template <typename T>
Mat<T> inverse(const Mat<T>& m) {
  const int n = m.dim();
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    if constexpr (std::is_same_v<T, Rat>) {
      for (int r = col; r < n; ++r)
        if (!a(r, col).is_zero()) { piv = r; break; }
    } else {
      double best = 0;
      for (int r = col; r < n; ++r)
        if (abs_value(a(r, col)) > best) { best = abs_value(a(r, col)); piv = r; }
      if (piv >= 0 && best == 0.0) piv = -1;
    }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      T f = a(r, col);
      if (f == T{}) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <typename T>
Mat<Complex> to_complex(const Mat<T>& m) {
  Mat<Complex> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = Complex(static_cast<double>(m(i, j)), 0.0);
  return r;
}

inline Mat<Rat> to_rat(const Mat<std::int64_t>& m) {
  Mat<Rat> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

using CMat = Mat<Complex>;
using DMat = Mat<double>;
using IMat = Mat<std::int64_t>;
using QMat = Mat<Rat>;

}  // namespace cmr

#endif
