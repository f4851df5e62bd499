// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Dense Hermitian eigensolvers. The problems in this library are tiny
// (n <= 64 reflecting elements, n <= 16 antennas), so a cyclic complex Jacobi
// iteration is used: it is simple, accurate to machine precision, and keeps
// results bit-reproducible across builds without pulling in an external
// LAPACK. Generalized problems are reduced through a Cholesky factor of the
// right-hand matrix.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "irsec/errors.hpp"
#include "irsec/linalg.hpp"

namespace irsec {

/// Absolute entrywise tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;

struct EigPair {
  double value = 0.0;
  CVec vector;
};

/// Full spectrum, eigenvalues ascending, eigenvectors as matching columns.
struct HermitianEigen {
  std::vector<double> values;
  CMat vectors;
};

namespace detail {

inline void validate_hermitian_input(const CMat& a, const char* who) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw InvalidInputError(std::string(who) + ": matrix must be square, n >= 1");
  if (!all_finite(a))
    throw InvalidInputError(std::string(who) + ": matrix has NaN/Inf entries");
  if (!is_hermitian(a, kHermitianTol))
    throw InvalidInputError(std::string(who) + ": matrix is not Hermitian");
}

inline double off_diagonal_norm(const CMat& m) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < m.rows(); ++p)
    for (std::size_t q = p + 1; q < m.rows(); ++q) s += std::norm(m(p, q));
  return std::sqrt(2.0 * s);
}

/// Cyclic Jacobi on a Hermitian matrix already validated by the caller.
/// Each rotation zeroes one off-diagonal pair with a complex Givens rotation.
inline HermitianEigen jacobi_hermitian(CMat m) {
  const std::size_t n = m.rows();
  CMat v = CMat::identity(n);
  const double scale = frobenius_norm(m);
  const double off_tol = 1e-15 * std::max(scale, std::numeric_limits<double>::min());
  const double skip_tol = off_tol / static_cast<double>(8 * n * n);

  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm(m) <= off_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip_tol) continue;
        const cxd phase = apq / mag;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns: M <- M U with U = [[c, s*phase], [-s*conj(phase), c]].
        for (std::size_t k = 0; k < n; ++k) {
          const cxd mp = m(k, p);
          const cxd mq = m(k, q);
          m(k, p) = c * mp - s * std::conj(phase) * mq;
          m(k, q) = s * phase * mp + c * mq;
        }
        // Rows: M <- U^H M.
        for (std::size_t k = 0; k < n; ++k) {
          const cxd mp = m(p, k);
          const cxd mq = m(q, k);
          m(p, k) = c * mp - s * phase * mq;
          m(q, k) = s * std::conj(phase) * mp + c * mq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cxd vp = v(k, p);
          const cxd vq = v(k, q);
          v(k, p) = c * vp - s * std::conj(phase) * vq;
          v(k, q) = s * phase * vp + c * vq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m(a, a).real() < m(b, b).real();
  });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = m(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace detail

/// Rotate a vector by a global phase so its largest-magnitude entry is real
/// and nonnegative (first such entry wins ties). Makes eigenvectors unique.
inline void fix_global_phase(CVec& v) {
  std::size_t best = 0;
  double best_mag = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag == 0.0) return;
  const cxd rot = std::conj(v[best]) / best_mag;
  for (cxd& x : v) x *= rot;
  v[best] = v[best].real();
}

/// Full eigendecomposition of a Hermitian matrix (ascending eigenvalues).
inline HermitianEigen hermitian_eigen(const CMat& a) {
  detail::validate_hermitian_input(a, "hermitian_eigen");
  return detail::jacobi_hermitian(hermitian_part(a));
}

/// Algebraically largest eigenvalue and a unit-norm eigenvector.
inline EigPair hermitian_max_eigpair(const CMat& a) {
  detail::validate_hermitian_input(a, "hermitian_max_eigpair");
  HermitianEigen eig = detail::jacobi_hermitian(hermitian_part(a));
  const std::size_t n = a.rows();
  EigPair out;
  out.value = eig.values[n - 1];
  out.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vector[i] = eig.vectors(i, n - 1);
  const double nn = norm(out.vector);
  for (cxd& x : out.vector) x /= nn;
  fix_global_phase(out.vector);
  return out;
}

/// Lower Cholesky factor of a Hermitian positive definite matrix.
/// A pivot is accepted only if it exceeds 1e-12 * trace(B)/n; otherwise the
/// matrix is treated as a singular pencil member.
inline CMat cholesky_factor(const CMat& b) {
  detail::validate_hermitian_input(b, "cholesky_factor");
  const std::size_t n = b.rows();
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += b(i, i).real();
  const double pivot_floor = 1e-12 * trace / static_cast<double>(n);

  CMat l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = b(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > pivot_floor))
      throw SingularPencilError("cholesky_factor: matrix not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      cxd s = b(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / l(j, j).real();
    }
  }
  return l;
}

namespace detail {

/// Solve L y = b with L lower triangular.
inline CVec forward_solve(const CMat& l, const CVec& b) {
  const std::size_t n = l.rows();
  CVec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cxd s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i).real();
  }
  return y;
}

/// Solve L^H x = b with L lower triangular.
inline CVec adjoint_solve(const CMat& l, const CVec& b) {
  const std::size_t n = l.rows();
  CVec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    cxd s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l(k, ii)) * x[k];
    x[ii] = s / l(ii, ii).real();
  }
  return x;
}

}  // namespace detail

/// Largest eigenvalue and unit-norm eigenvector of the pencil A v = lambda B v
/// with A Hermitian and B Hermitian positive definite. Reduction: B = LL^H,
/// standard problem on L^-1 A L^-H, back-transform, renormalize.
inline EigPair dominant_generalized_eigvec(const CMat& a, const CMat& b) {
  detail::validate_hermitian_input(a, "dominant_generalized_eigvec");
  detail::validate_hermitian_input(b, "dominant_generalized_eigvec");
  if (a.rows() != b.rows())
    throw InvalidInputError("dominant_generalized_eigvec: dimension mismatch");

  const std::size_t n = a.rows();
  const CMat l = cholesky_factor(b);

  // Y = L^-1 A, then C = Y L^-H computed as (L^-1 Y^H)^H.
  CMat y(n, n);
  CVec col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = a(i, j);
    const CVec sol = detail::forward_solve(l, col);
    for (std::size_t i = 0; i < n; ++i) y(i, j) = sol[i];
  }
  CMat c(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = std::conj(y(j, i));
    const CVec sol = detail::forward_solve(l, col);
    for (std::size_t i = 0; i < n; ++i) c(j, i) = std::conj(sol[i]);
  }

  HermitianEigen eig = detail::jacobi_hermitian(hermitian_part(c));
  CVec top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = eig.vectors(i, n - 1);

  EigPair out;
  out.value = eig.values[n - 1];
  out.vector = detail::adjoint_solve(l, top);
  const double nn = norm(out.vector);
  for (cxd& x : out.vector) x /= nn;
  fix_global_phase(out.vector);
  return out;
}

}  // namespace irsec
