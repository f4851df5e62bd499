// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Minimal dense complex vector/matrix helpers. Everything here targets the
// small problem sizes of this library (n <= a few hundred); no attempt is made
// at blocking or vectorization.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "irsec/errors.hpp"

namespace irsec {

using cxd = std::complex<double>;
using CVec = std::vector<cxd>;

/// Dense row-major complex matrix.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMat identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cxd>& data() const { return data_; }
  std::vector<cxd>& data() { return data_; }

  bool operator==(const CMat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

/// theta^H x style inner product: sum_i conj(a_i) * b_i.
inline cxd dot(const CVec& a, const CVec& b) {
  cxd s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm_sq(const CVec& v) {
  double s = 0.0;
  for (const cxd& x : v) s += std::norm(x);
  return s;
}

inline double norm(const CVec& v) { return std::sqrt(norm_sq(v)); }

/// y = A x
inline CVec mat_vec(const CMat& a, const CVec& x) {
  if (x.size() != a.cols()) throw InvalidInputError("mat_vec: dimension mismatch");
  CVec y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cxd s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

/// y = A^H x
inline CVec adjoint_mat_vec(const CMat& a, const CVec& x) {
  if (x.size() != a.rows())
    throw InvalidInputError("adjoint_mat_vec: dimension mismatch");
  CVec y(a.cols(), 0.0);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    const cxd xj = x[j];
    for (std::size_t k = 0; k < a.cols(); ++k) y[k] += std::conj(a(j, k)) * xj;
  }
  return y;
}

/// A += s * x x^H
inline void add_scaled_outer(CMat& a, const CVec& x, double s) {
  if (a.rows() != x.size() || a.cols() != x.size())
    throw InvalidInputError("add_scaled_outer: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      a(i, j) += s * x[i] * std::conj(x[j]);
}

/// H^H H for an m x n matrix H (result n x n).
inline CMat adjoint_gram(const CMat& h) {
  CMat g(h.cols(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t m = 0; m < h.cols(); ++m)
      for (std::size_t n = 0; n < h.cols(); ++n)
        g(m, n) += std::conj(h(i, m)) * h(i, n);
  return g;
}

inline double frobenius_norm(const CMat& a) {
  double s = 0.0;
  for (const cxd& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

inline double max_abs_entry(const CMat& a) {
  double m = 0.0;
  for (const cxd& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

inline bool all_finite(const CVec& v) {
  for (const cxd& x : v)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

inline bool all_finite(const CMat& a) {
  for (const cxd& x : a.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

/// Entrywise check of A(i,j) == conj(A(j,i)) within an absolute tolerance.
inline bool is_hermitian(const CMat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

/// (A + A^H) / 2
inline CMat hermitian_part(const CMat& a) {
  CMat h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

}  // namespace irsec
