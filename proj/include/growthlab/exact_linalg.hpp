// Copyright 2026 The growthlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact dense linear algebra over Integer and Rational Eigen matrices.

#include <optional>
#include <vector>

#include "growthlab/errors.hpp"
#include "growthlab/integer.hpp"

namespace growthlab {

template <typename Derived>
Matrix<Rational> to_rational(const Eigen::MatrixBase<Derived>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  Scalar prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Scalar v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = v / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Reduced row echelon form over Q. Returns the pivot column of each
/// nonzero row.
inline std::vector<Eigen::Index> rref_in_place(Matrix<Rational>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = 1 / Rational(m(r, c));
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive.
inline IntegerVector primitive_integer_vector(const Vector<Rational>& v) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, Integer(v(i).get_den()));
  IntegerVector out(v.size());
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = v(i).get_num() * (den / v(i).get_den());
    g = gcd(g, out(i));
  }
  if (g == 0) return out;
  int s = 0;
  for (Eigen::Index i = 0; i < v.size() && s == 0; ++i) s = sign(out(i));
  if (s < 0) g = -g;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= g;
  return out;
}

/// Basis of the rational kernel of m, one primitive integer vector per free
/// column in column order.
template <typename Scalar>
std::vector<IntegerVector> integer_nullspace(const Matrix<Scalar>& m) {
  Matrix<Rational> r = to_rational(m);
  std::vector<Eigen::Index> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntegerVector> basis;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<Rational> v = Vector<Rational>::Constant(m.cols(), Rational(0));
    v(f) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v(pivots[row]) = -r(row, f);
    basis.push_back(primitive_integer_vector(v));
  }
  return basis;
}

/// Some rational solution x of a x = b, or nullopt when inconsistent.
template <typename Scalar>
std::optional<Vector<Rational>> solve_exact(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Rational> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = to_rational(a);
  aug.col(a.cols()) = to_rational(b);
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<Rational> x = Vector<Rational>::Constant(a.cols(), Rational(0));
  for (std::size_t row = 0; row < pivots.size(); ++row) x(pivots[row]) = aug(row, a.cols());
  return x;
}

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& m, unsigned long k) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kPrecondition, "matrix power needs a square matrix");
  Matrix<Scalar> result = Matrix<Scalar>::Identity(m.rows(), m.cols());
  Matrix<Scalar> base = m;
  while (k > 0) {
    if (k & 1) result = (result * base).eval();
    k >>= 1;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

/// Coefficients of det(tI - m), highest degree first, by Berkowitz's
/// division-free algorithm.
template <typename Scalar>
std::vector<Scalar> berkowitz(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kPrecondition, "characteristic polynomial needs a square matrix");
  std::vector<Scalar> v{Scalar(1)};
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    // Leading (r+1)x(r+1) block split as [[S, C], [R, a]].
    std::vector<Scalar> q(r + 2);
    q[0] = 1;
    q[1] = -m(r, r);
    Vector<Scalar> sc = m.block(0, r, r, 1);
    for (Eigen::Index k = 0; k < r; ++k) {
      Scalar dot = 0;
      for (Eigen::Index i = 0; i < r; ++i) dot += m(r, i) * sc(i);
      q[k + 2] = -dot;
      if (k + 1 < r) sc = (m.topLeftCorner(r, r) * sc).eval();
    }
    std::vector<Scalar> next(r + 2, Scalar(0));
    for (Eigen::Index i = 0; i < r + 2; ++i) {
      for (Eigen::Index j = 0; j <= std::min<Eigen::Index>(i, r); ++j) next[i] += q[i - j] * v[j];
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace growthlab
