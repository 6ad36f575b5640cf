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

#include <stdexcept>
#include <string>
#include <vector>

#include "sosdec/matrix.hpp"
#include "sosdec/sosring.hpp"

namespace sosdec {

// Matrix of the differential of A |-> x A^t A x^t at the instance: the image
// of the elementary direction V = E_{ij} is 2 f_i w_j, written in the
// monomial basis of Sym^{2d}V.  Rows follow sym_basis(n, 2d); columns follow
// the row-major entries of V.
template <field_of F>
Matrix<F> jacobian_matrix(const SosInstance<F>& inst) {
  const F& field = inst.A.field();
  auto basis = sym_basis(inst.n, inst.d);
  auto basis2d = sym_basis(inst.n, 2 * inst.d);
  BasisIndex idx2d(basis2d);
  const int nn = static_cast<int>(basis.size());
  Matrix<F> jac(field, static_cast<int>(basis2d.size()), inst.k * nn);
  auto rows = instance_rows(inst);
  const typename F::Elem two = field.from_int(2);
  for (int i = 0; i < inst.k; ++i) {
    for (int j = 0; j < nn; ++j) {
      const int col = i * nn + j;
      for (const auto& t : rows[i].terms()) {
        const int r = idx2d.at(t.mono.times(basis[j]));
        jac.at(r, col) = field.add(jac.at(r, col), field.mul(two, t.coeff));
      }
    }
  }
  return jac;
}

namespace detail {

// The C(k,2) Koszul tuples (.., g_i = f_j, .., g_j = -f_i, ..) without any
// genericity checks.
template <field_of F>
std::vector<std::vector<Polynomial<F>>> koszul_tuples(const SosInstance<F>& inst) {
  auto rows = instance_rows(inst);
  std::vector<std::vector<Polynomial<F>>> out;
  for (int i = 0; i < inst.k; ++i) {
    for (int j = i + 1; j < inst.k; ++j) {
      std::vector<Polynomial<F>> tuple;
      tuple.reserve(inst.k);
      for (int l = 0; l < inst.k; ++l) {
        if (l == i)
          tuple.push_back(rows[j]);
        else if (l == j)
          tuple.push_back(-rows[i]);
        else
          tuple.push_back(Polynomial<F>(inst.A.field(), inst.n + 1));
      }
      out.push_back(std::move(tuple));
    }
  }
  return out;
}

// Flatten a syzygy tuple into the row-major coefficient vector matching the
// jacobian column order.
template <field_of F>
std::vector<typename F::Elem> tuple_vector(const std::vector<Polynomial<F>>& tuple,
                                           const std::vector<Monomial>& basis) {
  std::vector<typename F::Elem> v;
  for (const auto& g : tuple) {
    auto part = coefficient_vector(g, basis);
    v.insert(v.end(), part.begin(), part.end());
  }
  return v;
}

}  // namespace detail

// The Koszul syzygies of (f_1..f_k); requires linearly independent rows, and
// verifies sum f_i g_i = 0 exactly for each returned tuple.
template <field_of F>
std::vector<std::vector<Polynomial<F>>> koszul_basis(const SosInstance<F>& inst) {
  if (rank_nullspace(inst.A).rank != inst.k)
    throw std::invalid_argument("koszul_basis: rows of A are linearly dependent");
  auto rows = instance_rows(inst);
  auto tuples = detail::koszul_tuples(inst);
  for (const auto& tuple : tuples) {
    Polynomial<F> acc(inst.A.field(), inst.n + 1);
    for (int l = 0; l < inst.k; ++l) acc = acc + rows[l] * tuple[l];
    if (!acc.is_zero()) throw std::logic_error("koszul_basis: defining relation violated");
  }
  return tuples;
}

template <field_of F>
int tangent_nullity(const SosInstance<F>& inst) {
  auto jac = jacobian_matrix(inst);
  return jac.cols() - rank_nullspace(jac).rank;
}

template <field_of F>
int image_dimension(const SosInstance<F>& inst) {
  return rank_nullspace(jacobian_matrix(inst)).rank;
}

// For k <= n and a generic instance the Koszul span is the whole nullspace,
// which at the dimension level is nullity == C(k,2).
template <field_of F>
bool only_koszul(const SosInstance<F>& inst) {
  if (inst.k > inst.n) throw std::invalid_argument("only_koszul: requires k <= n");
  return tangent_nullity(inst) == inst.k * (inst.k - 1) / 2;
}

struct TangentReport {
  int nullity = 0;
  int expected = 0;  // C(k,2)
  bool generic = false;
  // When non-generic: one exact nullspace vector outside the Koszul span
  // (empty if the whole nullspace happens to be Koszul-spanned).
  std::vector<std::string> extra_vector;
};

inline TangentReport tangent_report(const SosInstance<Rationals>& inst) {
  Rationals field;
  auto jac = jacobian_matrix(inst);
  auto rn = rank_nullspace(jac);
  TangentReport rep;
  rep.nullity = static_cast<int>(rn.nullspace.size());
  rep.expected = inst.k * (inst.k - 1) / 2;
  rep.generic = rep.nullity == rep.expected;
  if (rep.generic) return rep;

  auto basis = sym_basis(inst.n, inst.d);
  auto tuples = detail::koszul_tuples(inst);
  Matrix<Rationals> kmat(field, jac.cols(), static_cast<int>(tuples.size()));
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    auto v = detail::tuple_vector(tuples[t], basis);
    for (int r = 0; r < jac.cols(); ++r) kmat.at(r, static_cast<int>(t)) = v[r];
  }
  const int krank = rank_nullspace(kmat).rank;
  for (const auto& v : rn.nullspace) {
    Matrix<Rationals> ext(field, jac.cols(), static_cast<int>(tuples.size()) + 1);
    for (int r = 0; r < jac.cols(); ++r) {
      for (std::size_t t = 0; t < tuples.size(); ++t) ext.at(r, static_cast<int>(t)) = kmat.at(r, static_cast<int>(t));
      ext.at(r, static_cast<int>(tuples.size())) = v[r];
    }
    if (rank_nullspace(ext).rank > krank) {
      for (const auto& e : v) rep.extra_vector.push_back(field.to_string(e));
      break;
    }
  }
  return rep;
}

}  // namespace sosdec
