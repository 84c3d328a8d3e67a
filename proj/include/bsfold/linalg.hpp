#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "bsfold/rational.hpp"

namespace bsfold {

// Exact dense linear algebra over a field scalar (no pivoting by magnitude:
// the first nonzero entry is the pivot, which keeps results deterministic).

template <typename Scalar>
void rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
                   std::vector<Eigen::Index>* pivot_columns = nullptr) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = lead; r < rows; ++r)
      if (m(r, col) != Scalar(0)) { pivot = r; break; }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(lead));
    const Scalar inv = Scalar(1) / m(lead, col);
    for (Eigen::Index c = col; c < cols; ++c) m(lead, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= factor * m(lead, c);
    }
    if (pivot_columns) pivot_columns->push_back(col);
    ++lead;
  }
}

// Basis of {x : m x = 0}, one column per free variable of the rref.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

  Mat basis = Mat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], static_cast<Eigen::Index>(k)) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) =
          -m(static_cast<Eigen::Index>(r), free_cols[k]);
  }
  return basis;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exact_inverse: square matrix required");
  Mat work(n, 2 * n);
  work << m, Mat::Identity(n, n);
  std::vector<Eigen::Index> pivots;
  rref_in_place(work, &pivots);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::invalid_argument("exact_inverse: singular matrix");
  return work.rightCols(n);
}

// Inverse of an integer matrix that is invertible over the integers.
inline LMatrix lattice_inverse(const LMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  QMatrix inv = exact_inverse(q);
  LMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (inv(r, c).get_den() != 1)
        throw std::invalid_argument("lattice_inverse: inverse is not integral");
      out(r, c) = static_cast<std::int64_t>(inv(r, c).get_num().get_si());
    }
  return out;
}

}  // namespace bsfold
