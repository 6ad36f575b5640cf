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

#include <gmpxx.h>

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sosdec/monomial.hpp"
#include "sosdec/polynomial.hpp"

namespace sosdec {

// dim Sym^d of an (n+1)-dimensional space: C(n+d, d).
inline long sym_dim(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("sym_dim: negative parameter");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n) + d,
               static_cast<unsigned long>(d));
  if (!b.fits_slong_p()) throw std::overflow_error("sym_dim: basis too large");
  return b.get_si();
}

// Monomial basis of Sym^d V, V spanned by x0..xn, in descending lexicographic
// order on exponent vectors: x0^d first, xn^d last.
inline std::vector<Monomial> sym_basis(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("sym_basis: negative parameter");
  const int m = n + 1;
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(sym_dim(n, d)));
  std::vector<int> e(m, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == m - 1) {
      e[pos] = rem;
      out.push_back(Monomial(e));
      e[pos] = 0;
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Position lookup for a monomial basis.
class BasisIndex {
 public:
  explicit BasisIndex(const std::vector<Monomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      map_.emplace(basis[i], static_cast<int>(i));
  }

  // Returns -1 when absent.
  int find(const Monomial& m) const {
    auto it = map_.find(m);
    return it == map_.end() ? -1 : it->second;
  }

  int at(const Monomial& m) const {
    int i = find(m);
    if (i < 0) throw std::invalid_argument("BasisIndex: monomial not in basis");
    return i;
  }

 private:
  std::unordered_map<Monomial, int, MonomialHash> map_;
};

// Veronese substitution w_j -> basis[j]: maps a polynomial in N = |basis|
// variables w_1..w_N to a polynomial in n+1 variables.  Monomials map to
// monomials (exponent vectors combine additively), so no expansion occurs.
template <field_of F>
Polynomial<F> veronese_substitute(const Polynomial<F>& p,
                                  const std::vector<Monomial>& basis,
                                  int target_nvars,
                                  MonomialOrder order = MonomialOrder::grevlex()) {
  if (p.nvars() != static_cast<int>(basis.size()))
    throw std::invalid_argument("veronese_substitute: variable count != basis size");
  for (const Monomial& b : basis)
    if (b.nvars() != target_nvars)
      throw std::invalid_argument("veronese_substitute: basis variable count mismatch");
  const F& field = p.field();
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<int> e(target_nvars, 0);
    for (int j = 0; j < p.nvars(); ++j) {
      const int pw = t.mono.exp(j);
      if (pw == 0) continue;
      for (int v = 0; v < target_nvars; ++v) e[v] += pw * basis[j].exp(v);
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<F>::from_terms(field, target_nvars, order, std::move(terms));
}

}  // namespace sosdec
