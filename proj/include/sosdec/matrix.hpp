// Copyright 2026 sosdec contributors
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

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sosdec/field.hpp"

namespace sosdec {

// Dense matrix over an exact field, row major.
template <field_of F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  static Matrix from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(std::move(field), r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        if (field_.is_zero(at(i, k))) continue;
        for (int j = 0; j < o.cols_; ++j) {
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(at(i, k), o.at(k, j)));
        }
      }
    }
    return r;
  }

  Matrix operator+(const Matrix& o) const { return zip(o, /*neg=*/false); }
  Matrix operator-(const Matrix& o) const { return zip(o, /*neg=*/true); }

  Matrix operator-() const {
    Matrix r(*this);
    for (Elem& e : r.a_) e = field_.neg(e);
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!field_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  std::vector<Elem> multiply_vector(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<Elem> out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
    return out;
  }

 private:
  void check_field(const Matrix& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("Matrix: field mismatch");
  }

  Matrix zip(const Matrix& o, bool neg) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i)
      r.a_[i] = neg ? field_.sub(a_[i], o.a_[i]) : field_.add(a_[i], o.a_[i]);
    return r;
  }

  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <field_of F>
struct RankNullspace {
  int rank = 0;
  // Basis of the right nullspace; each vector has its first nonzero entry
  // normalized to 1, ordered by free column index.
  std::vector<std::vector<typename F::Elem>> nullspace;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination with full pivoting.  Rows are
// swapped physically; pivot columns are recorded instead of swapped.  Over
// the rationals the division is exact and keeps entries at minor size,
// which controls coefficient blow-up; over a prime field it costs nothing.
template <field_of F>
struct Echelon {
  Matrix<F> w;
  std::vector<int> pivot_cols;  // pivot_cols[t] pairs with row t
  int row_swaps = 0;
};

template <field_of F>
Echelon<F> bareiss_echelon(Matrix<F> w) {
  const F& field = w.field();
  Echelon<F> ech{std::move(w), {}, 0};
  Matrix<F>& m = ech.w;
  std::vector<char> col_used(m.cols(), 0);
  typename F::Elem prev = field.one();
  int t = 0;
  while (t < m.rows()) {
    int pr = -1, pc = -1;
    std::size_t best = 0;
    for (int i = t; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (col_used[j] || field.is_zero(m.at(i, j))) continue;
        std::size_t wgt = field.pivot_weight(m.at(i, j));
        if (pr < 0 || wgt < best) {
          pr = i;
          pc = j;
          best = wgt;
        }
      }
    }
    if (pr < 0) break;
    if (pr != t) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(t, j));
      ++ech.row_swaps;
    }
    col_used[pc] = 1;
    ech.pivot_cols.push_back(pc);
    const typename F::Elem piv = m.at(t, pc);
    for (int i = t + 1; i < m.rows(); ++i) {
      const typename F::Elem head = m.at(i, pc);
      for (int j = 0; j < m.cols(); ++j) {
        if (j == pc) continue;
        typename F::Elem v = field.sub(field.mul(m.at(i, j), piv),
                                       field.mul(head, m.at(t, j)));
        m.at(i, j) = field.div(v, prev);
      }
      m.at(i, pc) = field.zero();
    }
    prev = piv;
    ++t;
  }
  return ech;
}

}  // namespace detail

// Exact rank and right nullspace basis of an arbitrary rectangular matrix.
template <field_of F>
RankNullspace<F> rank_nullspace(const Matrix<F>& m) {
  const F& field = m.field();
  auto ech = detail::bareiss_echelon(m);
  RankNullspace<F> out;
  out.rank = static_cast<int>(ech.pivot_cols.size());

  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : ech.pivot_cols) is_pivot[c] = 1;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> v(m.cols(), field.zero());
    v[fc] = field.one();
    for (int t = out.rank - 1; t >= 0; --t) {
      const int c = ech.pivot_cols[t];
      typename F::Elem s = field.zero();
      for (int j = 0; j < m.cols(); ++j) {
        if (j == c || field.is_zero(v[j]) || field.is_zero(ech.w.at(t, j))) continue;
        s = field.add(s, field.mul(ech.w.at(t, j), v[j]));
      }
      v[c] = field.neg(field.div(s, ech.w.at(t, c)));
    }
    for (const auto& e : v) {
      if (!field.is_zero(e)) {
        typename F::Elem scale = field.inv(e);
        for (auto& x : v) x = field.mul(x, scale);
        break;
      }
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

// Exact determinant via fraction-free elimination.
template <field_of F>
typename F::Elem determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const F& field = m.field();
  if (m.rows() == 0) return field.one();
  auto ech = detail::bareiss_echelon(m);
  if (static_cast<int>(ech.pivot_cols.size()) < m.rows()) return field.zero();
  // Bareiss leaves det(P_row M P_col) in the last pivot entry.
  typename F::Elem d = ech.w.at(m.rows() - 1, ech.pivot_cols.back());
  int parity = ech.row_swaps;
  std::vector<int> perm = ech.pivot_cols;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      ++parity;
    }
  }
  return (parity % 2 == 0) ? d : field.neg(d);
}

// Exact inverse by Gauss-Jordan elimination; throws when singular.
template <field_of F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const F& field = m.field();
  const int n = m.rows();
  Matrix<F> a = m;
  Matrix<F> r = Matrix<F>::identity(field, n);
  for (int t = 0; t < n; ++t) {
    int pr = -1;
    std::size_t best = 0;
    for (int i = t; i < n; ++i) {
      if (field.is_zero(a.at(i, t))) continue;
      std::size_t wgt = field.pivot_weight(a.at(i, t));
      if (pr < 0 || wgt < best) {
        pr = i;
        best = wgt;
      }
    }
    if (pr < 0) throw std::domain_error("inverse: singular matrix");
    if (pr != t) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pr, j), a.at(t, j));
        std::swap(r.at(pr, j), r.at(t, j));
      }
    }
    typename F::Elem s = field.inv(a.at(t, t));
    for (int j = 0; j < n; ++j) {
      a.at(t, j) = field.mul(a.at(t, j), s);
      r.at(t, j) = field.mul(r.at(t, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == t || field.is_zero(a.at(i, t))) continue;
      typename F::Elem f = a.at(i, t);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = field.sub(a.at(i, j), field.mul(f, a.at(t, j)));
        r.at(i, j) = field.sub(r.at(i, j), field.mul(f, r.at(t, j)));
      }
    }
  }
  return r;
}

// Cayley transform Q = (I - S)(I + S)^{-1} of an exactly skew-symmetric S.
// Q is orthogonal with det 1; flip_sign negates the first row afterwards,
// reaching the det = -1 component of the orthogonal group.
template <field_of F>
Matrix<F> cayley_orthogonal(const Matrix<F>& s, bool flip_sign = false) {
  if (s.rows() != s.cols()) throw std::invalid_argument("cayley_orthogonal: S not square");
  const F& field = s.field();
  for (int i = 0; i < s.rows(); ++i)
    for (int j = i; j < s.cols(); ++j)
      if (!field.eq(s.at(i, j), field.neg(s.at(j, i))))
        throw std::invalid_argument("cayley_orthogonal: S not skew-symmetric");
  Matrix<F> id = Matrix<F>::identity(field, s.rows());
  Matrix<F> q = [&] {
    try {
      return (id - s) * inverse(id + s);
    } catch (const std::domain_error&) {
      throw std::domain_error("cayley_orthogonal: I + S is singular");
    }
  }();
  if (flip_sign) {
    for (int j = 0; j < q.cols(); ++j) q.at(0, j) = field.neg(q.at(0, j));
  }
  return q;
}

}  // namespace sosdec
