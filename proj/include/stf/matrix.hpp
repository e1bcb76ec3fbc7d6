#pragma once

// Exact dense linear algebra on Eigen matrices with an exact field scalar.

#include <Eigen/Core>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stf/errors.hpp"
#include "stf/polynomial.hpp"
#include "stf/rational.hpp"

namespace stf {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<Rational>;
using ExactVector = Vector<Rational>;

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i))) return false;
    }
  }
  return true;
}

namespace detail {
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}
}  // namespace detail

/// Bareiss fraction-free elimination; every division is exact.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "det");
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index piv = k + 1;
      while (piv < n && a(piv, k) == Scalar(0)) ++piv;
      if (piv == n) return Scalar(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return sign < 0 ? Scalar(-d) : d;
}

/// det(xI - M) by Faddeev-LeVerrier (characteristic zero only).
template <typename Derived>
Polynomial<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "charpoly");
  const Eigen::Index n = m.rows();
  const Matrix<Scalar> a = m;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> mk = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    mk = (a * mk).eval();
    c[static_cast<std::size_t>(n - k)] = -mk.trace() / Scalar(static_cast<int>(k));
  }
  return Polynomial<Scalar>(std::move(c));
}

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
template <typename Scalar>
Polynomial<Scalar> interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Polynomial<Scalar> result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial<Scalar> basis = Polynomial<Scalar>::constant(Scalar(1));
    Scalar denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial<Scalar>::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

/// det(cI - M) sampled at c = 0..n and interpolated; independent of charpoly().
template <typename Derived>
Polynomial<typename Derived::Scalar> charpoly_by_interpolation(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(m, "charpoly_by_interpolation");
  const Eigen::Index n = m.rows();
  std::vector<Scalar> xs, ys;
  for (Eigen::Index c = 0; c <= n; ++c) {
    Scalar cs(static_cast<int>(c));
    Matrix<Scalar> shifted = -m;
    shifted.diagonal().array() += cs;
    xs.push_back(cs);
    ys.push_back(det(shifted));
  }
  return interpolate(xs, ys);
}

/// Columns v, Mv, ..., M^(n-1) v. Throws SingularKrylov when they are dependent.
template <typename DerivedM, typename DerivedV>
Matrix<typename DerivedM::Scalar> krylov_matrix(const Eigen::MatrixBase<DerivedM>& m,
                                                const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedM::Scalar;
  detail::require_square(m, "krylov_matrix");
  const Eigen::Index n = m.rows();
  if (v.size() != n) throw std::invalid_argument("krylov_matrix: dimension mismatch");
  Matrix<Scalar> p(n, n);
  Vector<Scalar> col = v;
  for (Eigen::Index k = 0; k < n; ++k) {
    p.col(k) = col;
    if (k + 1 < n) col = (m * col).eval();
  }
  if (det(p) == Scalar(0)) throw SingularKrylov("krylov_matrix: vector is not cyclic");
  return p;
}

template <typename Scalar>
struct CongruenceDiagonalization {
  Matrix<Scalar> q;              // invertible change of basis
  std::vector<Scalar> diagonal;  // q^T * B * q = diag(diagonal)
};

/// Symmetric Gaussian elimination by congruence. A zero pivot is replaced by
/// swapping in a later nonzero diagonal entry, or failing that by e_i -> e_i + e_j.
template <typename Derived>
CongruenceDiagonalization<typename Derived::Scalar> congruence_diagonalize(
    const Eigen::MatrixBase<Derived>& b) {
  using Scalar = typename Derived::Scalar;
  if (!is_symmetric(b)) throw std::invalid_argument("congruence_diagonalize: matrix is not symmetric");
  const Eigen::Index n = b.rows();
  Matrix<Scalar> a = b;
  Matrix<Scalar> q = Matrix<Scalar>::Identity(n, n);
  const Scalar zero(0);

  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == zero) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index i = k + 1; i < n && swap_with < 0; ++i) {
        if (!(a(i, i) == zero)) swap_with = i;
      }
      if (swap_with >= 0) {
        a.row(k).swap(a.row(swap_with));
        a.col(k).swap(a.col(swap_with));
        q.col(k).swap(q.col(swap_with));
      } else {
        Eigen::Index partner = -1;
        for (Eigen::Index j = k + 1; j < n && partner < 0; ++j) {
          if (!(a(k, j) == zero)) partner = j;
        }
        if (partner < 0) continue;  // row k is already zero: a radical direction
        // With a(k,k) = a(j,j) = 0, e_k -> e_k + e_j gives pivot 2*a(k,j) != 0.
        a.row(k) += a.row(partner);
        a.col(k) += a.col(partner);
        q.col(k) += q.col(partner);
      }
    }
    const Scalar pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(k, i) == zero) continue;
      const Scalar factor = a(k, i) / pivot;
      a.row(i) -= factor * a.row(k);
      a.col(i) -= factor * a.col(k);
      q.col(i) -= factor * q.col(k);
    }
  }
  CongruenceDiagonalization<Scalar> out{std::move(q), {}};
  out.diagonal.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

/// Solves m * x = b exactly by Gauss-Jordan elimination.
/// Throws std::domain_error when m is singular.
template <typename DerivedM, typename DerivedB>
Vector<typename DerivedM::Scalar> solve(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  detail::require_square(m, "solve");
  const Eigen::Index n = m.rows();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = b;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    while (piv < n && aug(piv, k) == Scalar(0)) ++piv;
    if (piv == n) throw std::domain_error("solve: singular matrix");
    aug.row(k).swap(aug.row(piv));
    const Scalar pivot = aug(k, k);
    aug.row(k) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || aug(i, k) == Scalar(0)) continue;
      const Scalar factor = aug(i, k);
      aug.row(i) -= factor * aug.row(k);
    }
  }
  return aug.col(n);
}

/// Exact square diagonal matrix from entries.
inline ExactMatrix diagonal_matrix(const std::vector<Rational>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  ExactMatrix m = ExactMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

}  // namespace stf
