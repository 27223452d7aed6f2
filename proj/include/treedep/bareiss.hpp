#pragma once

#include <Eigen/Core>

#include <stdexcept>

namespace treedep {

// Fraction-free (Bareiss) elimination over an exact integral scalar. Every
// division below is exact, so the scalar only needs ring operations plus
// exact operator/. Intermediate entries are minors of the input, which keeps
// their size polynomial instead of exponential.

// Determinant; destroys the argument. Rows are swapped to the first nonzero
// pivot, so singular matrices come out as an honest zero.
template <typename Derived>
typename Derived::Scalar bareiss_determinant_in_place(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);

  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Scalar(-m(n - 1, n - 1));
}

template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
  return bareiss_determinant_in_place(work);
}

// Fraction-free Gauss-Jordan on [A | I]: finishes as [det(A)*I | adj(A)].
// Requires all leading principal minors nonzero (holds for reduced Laplacians
// of connected graphs, whose minors count rooted spanning forests).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> fraction_free_adjugate(
    const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar& det_out) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("adjugate of a non-square matrix");
  if (n == 0) {
    det_out = Scalar(1);
    return Matrix(0, 0);
  }

  Matrix w(n, 2 * n);
  w.leftCols(n) = a;
  w.rightCols(n).setZero();
  w.rightCols(n).diagonal().setConstant(Scalar(1));

  Scalar prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar pivot = w(k, k);
    if (pivot == 0)
      throw std::domain_error("fraction-free Gauss-Jordan hit a zero pivot");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar factor = w(i, k);
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        w(i, j) = (pivot * w(i, j) - factor * w(k, j)) / prev;
      }
      w(i, k) = Scalar(0);
    }
    prev = pivot;
  }

  det_out = w(n - 1, n - 1);
  return w.rightCols(n);
}

}  // namespace treedep
