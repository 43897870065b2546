#ifndef CMR_TENSOR_HPP
#define CMR_TENSOR_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmr/matrix.hpp"

namespace cmr {

// Element of gl_n (x) gl_n stored as a dense 4-index array; entry (i,j,k,l)
// is the coefficient of e_ij (x) e_kl.
template <typename T>
class Two {
public:
  Two() : n_(0) {}
  explicit Two(int n) : n_(n), a_(pow4(n), T{}) {}

  int dim() const { return n_; }

  T& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
  const T& operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }

  friend Two operator+(const Two& a, const Two& b) {
    check_dims(a, b);
    Two r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }
  friend Two operator-(const Two& a, const Two& b) {
    check_dims(a, b);
    Two r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }
  friend Two operator*(const T& s, const Two& a) {
    Two r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
  }
  Two operator-() const {
    Two r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }
  Two& operator+=(const Two& o) { return *this = *this + o; }
  Two& operator-=(const Two& o) { return *this = *this - o; }

  friend bool operator==(const Two& a, const Two& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  double max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, abs_value(v));
    return m;
  }

private:
  static std::size_t pow4(int n) {
    std::size_t m = static_cast<std::size_t>(n);
    return m * m * m * m;
  }
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  static void check_dims(const Two& a, const Two& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Two: dimension mismatch");
  }

  int n_;
  std::vector<T> a_;
};

// Element of gl_n (x) gl_n (x) gl_n; entry (i,j,k,l,m,o) is the coefficient
// of e_ij (x) e_kl (x) e_mo.
template <typename T>
class Three {
public:
  Three() : n_(0) {}
  explicit Three(int n) : n_(n), a_(pow6(n), T{}) {}

  int dim() const { return n_; }

  T& operator()(int i, int j, int k, int l, int m, int o) { return a_[idx(i, j, k, l, m, o)]; }
  const T& operator()(int i, int j, int k, int l, int m, int o) const {
    return a_[idx(i, j, k, l, m, o)];
  }

  friend bool operator==(const Three& a, const Three& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  double max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, abs_value(v));
    return m;
  }

private:
  static std::size_t pow6(int n) {
    std::size_t m = static_cast<std::size_t>(n);
    return m * m * m * m * m * m;
  }
  std::size_t idx(int i, int j, int k, int l, int m, int o) const {
    std::size_t s = static_cast<std::size_t>(i);
    s = ((((s * n_ + j) * n_ + k) * n_ + l) * n_ + m) * n_ + o;
    return s;
  }

  int n_;
  std::vector<T> a_;
};

template <typename T>
Two<T> tensor_product(const Mat<T>& a, const Mat<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor_product: dimension mismatch");
  const int n = a.dim();
  Two<T> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T aij = a(i, j);
      if (aij == T{}) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) t(i, j, k, l) = aij * b(k, l);
    }
  return t;
}

// T_21 from T_12: entry (i,j,k,l) of the output is entry (k,l,i,j) of the input.
template <typename T>
Two<T> swap_factors(const Two<T>& t) {
  const int n = t.dim();
  Two<T> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r(i, j, k, l) = t(k, l, i, j);
  return r;
}

// [T, A (x) 1] for slot 1, [T, 1 (x) A] for slot 2.
template <typename T>
Two<T> bracket_action(const Two<T>& t, const Mat<T>& a, int slot) {
  const int n = t.dim();
  if (a.dim() != n) throw std::invalid_argument("bracket_action: dimension mismatch");
  if (slot != 1 && slot != 2) throw std::invalid_argument("bracket_action: slot must be 1 or 2");
  Two<T> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T s{};
          if (slot == 1) {
            for (int c = 0; c < n; ++c) s += t(i, c, k, l) * a(c, j) - a(i, c) * t(c, j, k, l);
          } else {
            for (int c = 0; c < n; ++c) s += t(i, j, k, c) * a(c, l) - a(k, c) * t(i, j, c, l);
          }
          r(i, j, k, l) = s;
        }
  return r;
}

template <typename T>
Two<Complex> to_complex(const Two<T>& t) {
  const int n = t.dim();
  Two<Complex> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r(i, j, k, l) = Complex(static_cast<double>(t(i, j, k, l)), 0.0);
  return r;
}

inline Two<double> to_real(const Two<std::int64_t>& t) {
  const int n = t.dim();
  Two<double> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r(i, j, k, l) = static_cast<double>(t(i, j, k, l));
  return r;
}

inline Two<Rat> to_rat(const Two<std::int64_t>& t) {
  const int n = t.dim();
  Two<Rat> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r(i, j, k, l) = Rat(t(i, j, k, l));
  return r;
}

namespace detail {

// [R12,R13] + [R12,R23] + [R13,R23] with R embedded pairwise in gl_n^(x)3.
// One row-slice of the output; shared by the parallel and serial drivers.
template <typename T>
void cybe_fill_slice(const Two<T>& r, Three<T>& out, int p1) {
  const int n = r.dim();
  for (int p2 = 0; p2 < n; ++p2)
    for (int p3 = 0; p3 < n; ++p3)
      for (int p4 = 0; p4 < n; ++p4)
        for (int p5 = 0; p5 < n; ++p5)
          for (int p6 = 0; p6 < n; ++p6) {
            T s{};
            for (int c = 0; c < n; ++c) {
              // [R12, R13]
              s += r(p1, c, p3, p4) * r(c, p2, p5, p6) - r(c, p2, p3, p4) * r(p1, c, p5, p6);
              // [R12, R23]
              s += r(p1, p2, p3, c) * r(c, p4, p5, p6) - r(p1, p2, c, p4) * r(p3, c, p5, p6);
              // [R13, R23]
              s += r(p1, p2, p5, c) * r(p3, p4, c, p6) - r(p1, p2, c, p6) * r(p3, p4, p5, c);
            }
            out(p1, p2, p3, p4, p5, p6) = s;
          }
}

}  // namespace detail

template <typename T>
std::pair<Three<T>, double> cybe_residual(const Two<T>& r) {
  const int n = r.dim();
  Three<T> out(n);
#pragma omp parallel for schedule(static)
  for (int p1 = 0; p1 < n; ++p1) detail::cybe_fill_slice(r, out, p1);
  double m = out.max_abs();
  return {std::move(out), m};
}

namespace ref {

// Serial reference for the OpenMP kernel above; kept for testing and for the
// benchmark target.
template <typename T>
std::pair<Three<T>, double> cybe_residual(const Two<T>& r) {
  const int n = r.dim();
  Three<T> out(n);
  for (int p1 = 0; p1 < n; ++p1) detail::cybe_fill_slice(r, out, p1);
  double m = out.max_abs();
  return {std::move(out), m};
}

}  // namespace ref

}  // namespace cmr

#endif
