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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sosdec/matrix.hpp"
#include "sosdec/polynomial.hpp"
#include "sosdec/rational.hpp"
#include "sosdec/rng.hpp"
#include "sosdec/sym_basis.hpp"

namespace sosdec {

// A rank-k sum-of-squares construction: row i of A holds the coefficients of
// f_i in sym_basis(n, d), and f = sum of the f_i^2.
template <field_of F>
struct SosInstance {
  int n = 0;
  int d = 0;
  int k = 0;
  std::uint64_t seed = 0;  // 0 for hand-built instances
  long bound = 0;
  Matrix<F> A;
  Polynomial<F> f;
};

// f_i as a polynomial: the contraction of one coefficient row with the basis.
template <field_of F>
Polynomial<F> row_poly(const Matrix<F>& a, int row, const std::vector<Monomial>& basis,
                       MonomialOrder order = MonomialOrder::grevlex()) {
  if (a.cols() != static_cast<int>(basis.size()))
    throw std::invalid_argument("row_poly: column count != basis size");
  const F& field = a.field();
  const int nv = basis.empty() ? 1 : basis[0].nvars();
  std::vector<typename Polynomial<F>::Term> terms;
  for (int j = 0; j < a.cols(); ++j)
    if (!field.is_zero(a.at(row, j))) terms.push_back({basis[j], a.at(row, j)});
  return Polynomial<F>::from_terms(field, nv, order, std::move(terms));
}

template <field_of F>
std::vector<Polynomial<F>> instance_rows(const SosInstance<F>& inst) {
  auto basis = sym_basis(inst.n, inst.d);
  std::vector<Polynomial<F>> rows;
  rows.reserve(inst.k);
  for (int i = 0; i < inst.k; ++i) rows.push_back(row_poly(inst.A, i, basis, inst.f.order()));
  return rows;
}

// Sum over all entries: poly(W) = sum_{a,b} W_ab * basis_a * basis_b.
template <field_of F>
Polynomial<F> expand_gram(const Matrix<F>& w, const std::vector<Monomial>& basis,
                          MonomialOrder order = MonomialOrder::grevlex()) {
  const F& field = w.field();
  const int nn = static_cast<int>(basis.size());
  if (w.rows() != nn || w.cols() != nn)
    throw std::invalid_argument("expand_gram: matrix shape != basis size");
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b)
      if (!field.eq(w.at(a, b), w.at(b, a)))
        throw std::invalid_argument("expand_gram: matrix not symmetric");
  const int nv = basis.empty() ? 1 : basis[0].nvars();
  const typename F::Elem two = field.from_int(2);
  std::vector<typename Polynomial<F>::Term> terms;
  for (int a = 0; a < nn; ++a) {
    for (int b = a; b < nn; ++b) {
      if (field.is_zero(w.at(a, b))) continue;
      typename F::Elem c = (a == b) ? w.at(a, b) : field.mul(two, w.at(a, b));
      terms.push_back({basis[a].times(basis[b]), c});
    }
  }
  return Polynomial<F>::from_terms(field, nv, order, std::move(terms));
}

template <field_of F>
Matrix<F> gram_of_instance(const SosInstance<F>& inst) {
  return inst.A.transpose() * inst.A;
}

template <field_of F>
SosInstance<F> make_instance(int n, int d, int k, Matrix<F> a, std::uint64_t seed = 0,
                             long bound = 0) {
  const long nn = sym_dim(n, d);
  if (a.rows() != k || a.cols() != nn)
    throw std::invalid_argument("make_instance: A must be k x C(n+d,d)");
  auto basis = sym_basis(n, d);
  const F& field = a.field();
  Polynomial<F> f(field, n + 1);
  for (int i = 0; i < k; ++i) {
    Polynomial<F> fi = row_poly(a, i, basis);
    f = f + fi * fi;
  }
  return SosInstance<F>{n, d, k, seed, bound, std::move(a), std::move(f)};
}

// Deterministic generic instance: integer entries in [-bound, bound] from the
// seeded PRNG, redrawn until the rows are linearly independent.
inline SosInstance<Rationals> random_instance(int n, int d, int k, std::uint64_t seed,
                                              long bound = 10) {
  if (k < 1 || bound < 1) throw std::invalid_argument("random_instance: k, bound >= 1");
  const long nn = sym_dim(n, d);
  if (k > nn) throw std::invalid_argument("random_instance: k exceeds C(n+d,d)");
  Rationals field;
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix<Rationals> a(field, k, static_cast<int>(nn));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < nn; ++j) a.at(i, j) = field.from_int(rng.range(-bound, bound));
    if (rank_nullspace(a).rank == k) return make_instance(n, d, k, std::move(a), seed, bound);
  }
  throw std::runtime_error("random_instance: no rank-k draw in 100 attempts");
}

// The instance with rows x_1^d, ..., x_k^d (requires k <= n so the variables
// exist); its only syzygies are the Koszul ones.
inline SosInstance<Rationals> powers_instance(int n, int d, int k) {
  if (k < 1 || k > n || d < 1) throw std::invalid_argument("powers_instance: need 1 <= k <= n, d >= 1");
  Rationals field;
  auto basis = sym_basis(n, d);
  BasisIndex index(basis);
  Matrix<Rationals> a(field, k, static_cast<int>(basis.size()));
  for (int i = 1; i <= k; ++i) {
    a.at(i - 1, index.at(Monomial::var(i, n + 1, d))) = field.one();
  }
  return make_instance(n, d, k, std::move(a));
}

// Basis of the complement C with Sym^2(Sym^d V) = Sym^{2d} V + C: for every
// degree-2d monomial e, all pairs (a <= b) with basis_a * basis_b = e beyond
// the first contribute w_a w_b - w_{a0} w_{b0}.  Supports are disjoint across
// distinct e, and within one e the elements share the pivot pair, so the set
// is linearly independent of the full expected size by construction.
template <field_of F>
std::vector<Polynomial<F>> c_space(F field, int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("c_space: need n >= 0, d >= 1");
  auto basis = sym_basis(n, d);
  const int nn = static_cast<int>(basis.size());
  auto basis2d = sym_basis(n, 2 * d);
  BasisIndex idx2d(basis2d);
  std::vector<std::vector<std::pair<int, int>>> buckets(basis2d.size());
  for (int a = 0; a < nn; ++a)
    for (int b = a; b < nn; ++b)
      buckets[idx2d.at(basis[a].times(basis[b]))].push_back({a, b});
  auto pair_monomial = [&](std::pair<int, int> ab) {
    std::vector<int> e(nn, 0);
    e[ab.first] += 1;
    e[ab.second] += 1;
    return Monomial(std::move(e));
  };
  std::vector<Polynomial<F>> out;
  for (const auto& bucket : buckets) {
    for (std::size_t t = 1; t < bucket.size(); ++t) {
      std::vector<typename Polynomial<F>::Term> terms;
      terms.push_back({pair_monomial(bucket[t]), field.one()});
      terms.push_back({pair_monomial(bucket[0]), field.neg(field.one())});
      out.push_back(Polynomial<F>::from_terms(field, nn, MonomialOrder::grevlex(),
                                              std::move(terms)));
    }
  }
  return out;
}

// Catalecticant of a homogeneous f of degree d' at split m: rows indexed by
// sym_basis(n, m), columns by sym_basis(n, d'-m); the (alpha, beta) entry is
// the coefficient of x^beta in the derivative of f by x^alpha, with the raw
// multinomial scaling of repeated differentiation.
template <field_of F>
Matrix<F> catalecticant(const Polynomial<F>& f, int m) {
  if (f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("catalecticant: f must be nonzero homogeneous");
  const int dp = f.degree();
  if (m <= 0 || m >= dp) throw std::invalid_argument("catalecticant: need 0 < m < deg f");
  const int n = f.nvars() - 1;
  auto rows = sym_basis(n, m);
  auto cols = sym_basis(n, dp - m);
  BasisIndex col_index(cols);
  const F& field = f.field();
  Matrix<F> cat(field, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (const auto& term : f.terms()) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Monomial& alpha = rows[r];
      if (!alpha.divides(term.mono)) continue;
      long factor = 1;
      for (int v = 0; v < f.nvars(); ++v) {
        for (int s = 0; s < alpha.exp(v); ++s) factor *= term.mono.exp(v) - s;
      }
      const int c = col_index.at(alpha.quotient_of(term.mono));
      cat.at(static_cast<int>(r), c) = field.add(
          cat.at(static_cast<int>(r), c), field.mul(term.coeff, field.from_int(factor)));
    }
  }
  return cat;
}

// Index of entry (a, b), a <= b, in the row-major upper triangle of an N x N
// symmetric matrix.
inline int sym_upper_index(int a, int b, int nn) {
  if (a > b) std::swap(a, b);
  return a * nn - a * (a - 1) / 2 + (b - a);
}

namespace detail {

inline void for_each_combination(int n, int r,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = i;
  if (r > n) return;
  while (true) {
    fn(c);
    int i = r - 1;
    while (i >= 0 && c[i] == n - r + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

inline int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Appends every (k+1)x(k+1) minor of the symmetric nn x nn matrix whose
// upper-triangle entries are the unknowns w_{ab}; the (I,J) ~ (J,I)
// duplicates (equal for symmetric W) are emitted once.
template <field_of F>
void append_rank_minors(std::vector<Polynomial<F>>& out, const F& field, int nn, int nunk,
                        int k) {
  const int r = k + 1;
  if (r > nn) return;
  std::vector<std::vector<int>> subsets;
  for_each_combination(nn, r, [&](const std::vector<int>& c) { subsets.push_back(c); });
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    for (std::size_t sj = si; sj < subsets.size(); ++sj) {
      const std::vector<int>& rows = subsets[si];
      const std::vector<int>& cols = subsets[sj];
      std::vector<int> perm(r);
      for (int t = 0; t < r; ++t) perm[t] = t;
      std::vector<typename Polynomial<F>::Term> terms;
      do {
        std::vector<int> e(nunk, 0);
        for (int t = 0; t < r; ++t) e[sym_upper_index(rows[t], cols[perm[t]], nn)] += 1;
        int sign = permutation_sign(perm);
        terms.push_back({Monomial(std::move(e)),
                         sign > 0 ? field.one() : field.neg(field.one())});
      } while (std::next_permutation(perm.begin(), perm.end()));
      Polynomial<F> minor = Polynomial<F>::from_terms(field, nunk, MonomialOrder::grevlex(),
                                                      std::move(terms));
      if (!minor.is_zero()) out.push_back(std::move(minor));
    }
  }
}

}  // namespace detail

// Defining equations of SOS_k(f) in the kN entries of A (row-major unknowns
// a_{i,j} at index i*N+j): for each monomial of Sym^{2d}V, the coefficient of
// that monomial in x A^t A x^t - f.
template <field_of F>
std::vector<Polynomial<F>> sos_variety_system(const Polynomial<F>& f, int n, int d, int k) {
  if (f.nvars() != n + 1 || f.is_zero() || !f.is_homogeneous() || f.degree() != 2 * d)
    throw std::invalid_argument("sos_variety_system: f must be homogeneous of degree 2d");
  if (k < 1) throw std::invalid_argument("sos_variety_system: k >= 1");
  const F& field = f.field();
  auto basis = sym_basis(n, d);
  const int nn = static_cast<int>(basis.size());
  auto basis2d = sym_basis(n, 2 * d);
  BasisIndex idx2d(basis2d);
  const int nunk = k * nn;
  const typename F::Elem two = field.from_int(2);
  std::vector<std::vector<typename Polynomial<F>::Term>> eq(basis2d.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < nn; ++j) {
      for (int jp = j; jp < nn; ++jp) {
        std::vector<int> e(nunk, 0);
        e[i * nn + j] += 1;
        e[i * nn + jp] += 1;
        eq[idx2d.at(basis[j].times(basis[jp]))].push_back(
            {Monomial(std::move(e)), j == jp ? field.one() : two});
      }
    }
  }
  for (std::size_t r = 0; r < basis2d.size(); ++r) {
    typename F::Elem c = f.coefficient_of(basis2d[r]);
    if (!field.is_zero(c)) eq[r].push_back({Monomial::one(nunk), field.neg(c)});
  }
  std::vector<Polynomial<F>> out;
  out.reserve(eq.size());
  for (auto& terms : eq)
    out.push_back(Polynomial<F>::from_terms(field, nunk, MonomialOrder::grevlex(),
                                            std::move(terms)));
  return out;
}

// Defining equations of the rank-<=k Gram fiber over f, in the C(N+1,2)
// upper-triangle unknowns w_{ab}: the linear system poly(W) = f followed by
// all (k+1)x(k+1) minors of W, with the (I,J) ~ (J,I) duplicates (equal for
// symmetric W) emitted once.
template <field_of F>
std::vector<Polynomial<F>> gram_fiber_system(const Polynomial<F>& f, int n, int d, int k) {
  if (f.nvars() != n + 1 || f.is_zero() || !f.is_homogeneous() || f.degree() != 2 * d)
    throw std::invalid_argument("gram_fiber_system: f must be homogeneous of degree 2d");
  if (k < 1) throw std::invalid_argument("gram_fiber_system: k >= 1");
  const F& field = f.field();
  auto basis = sym_basis(n, d);
  const int nn = static_cast<int>(basis.size());
  auto basis2d = sym_basis(n, 2 * d);
  BasisIndex idx2d(basis2d);
  const int nunk = nn * (nn + 1) / 2;
  const typename F::Elem two = field.from_int(2);
  std::vector<Polynomial<F>> out;

  std::vector<std::vector<typename Polynomial<F>::Term>> eq(basis2d.size());
  for (int a = 0; a < nn; ++a) {
    for (int b = a; b < nn; ++b) {
      eq[idx2d.at(basis[a].times(basis[b]))].push_back(
          {Monomial::var(sym_upper_index(a, b, nn), nunk), a == b ? field.one() : two});
    }
  }
  for (std::size_t r = 0; r < basis2d.size(); ++r) {
    typename F::Elem c = f.coefficient_of(basis2d[r]);
    if (!field.is_zero(c)) eq[r].push_back({Monomial::one(nunk), field.neg(c)});
    out.push_back(Polynomial<F>::from_terms(field, nunk, MonomialOrder::grevlex(),
                                            std::move(eq[r])));
  }

  detail::append_rank_minors(out, field, nn, nunk, k);
  return out;
}

// The homogeneous system cutting out (rank <= k cone) \cap C inside the
// symmetric-matrix space: the full linear system poly(W) = 0 followed by all
// (k+1)x(k+1) minors of W.
template <field_of F>
std::vector<Polynomial<F>> cone_c_intersection_system(const F& field, int n, int d, int k) {
  if (n < 1 || d < 1 || k < 1)
    throw std::invalid_argument("cone_c_intersection_system: n, d, k >= 1");
  auto basis = sym_basis(n, d);
  const int nn = static_cast<int>(basis.size());
  auto basis2d = sym_basis(n, 2 * d);
  BasisIndex idx2d(basis2d);
  const int nunk = nn * (nn + 1) / 2;
  const typename F::Elem two = field.from_int(2);
  std::vector<Polynomial<F>> out;

  std::vector<std::vector<typename Polynomial<F>::Term>> eq(basis2d.size());
  for (int a = 0; a < nn; ++a) {
    for (int b = a; b < nn; ++b) {
      eq[idx2d.at(basis[a].times(basis[b]))].push_back(
          {Monomial::var(sym_upper_index(a, b, nn), nunk), a == b ? field.one() : two});
    }
  }
  for (auto& terms : eq)
    out.push_back(Polynomial<F>::from_terms(field, nunk, MonomialOrder::grevlex(),
                                            std::move(terms)));

  detail::append_rank_minors(out, field, nn, nunk, k);
  return out;
}

}  // namespace sosdec
