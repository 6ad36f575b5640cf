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

#include "sosdec/matrix.hpp"
#include "sosdec/rational.hpp"
#include "sosdec/sym_basis.hpp"

namespace sosdec {

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// deg O(k) = 2^k * det( C(2k-2i-2j, k-2i) ), i, j = 1..floor(k/2).
inline mpz_class deg_orthogonal(int k) {
  if (k < 1) throw std::invalid_argument("deg_orthogonal: k >= 1");
  const int m = k / 2;
  Rationals field;
  Matrix<Rationals> b(field, m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      b.at(i - 1, j - 1) = mpq_class(binomial(2 * k - 2 * i - 2 * j, k - 2 * i));
  mpq_class det = m == 0 ? mpq_class(1) : determinant(b);
  if (det.get_den() != 1) throw std::logic_error("deg_orthogonal: non-integer determinant");
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return pow2 * det.get_num();
}

inline mpz_class deg_special_orthogonal(int k) {
  if (k < 2) throw std::invalid_argument("deg_special_orthogonal: k >= 2");
  mpz_class o = deg_orthogonal(k);
  if (o % 2 != 0) throw std::logic_error("deg_special_orthogonal: odd deg O(k)");
  return o / 2;
}

// Degree of the j-th secant variety of the quadratic Veronese of P^{N-1}:
// product over i = 0..N-1-j of C(N+i, N-j-i) / C(2i+1, i).  The factors are
// rational; the full product must clear to an integer.
inline mpz_class secant_veronese2_degree(int nn, int j) {
  if (j < 1 || j > nn) throw std::invalid_argument("secant_veronese2_degree: need 1 <= j <= N");
  mpq_class prod(1);
  for (int i = 0; i <= nn - 1 - j; ++i) {
    prod *= mpq_class(binomial(nn + i, nn - j - i), binomial(2 * i + 1, i));
  }
  prod.canonicalize();
  if (prod.get_den() != 1)
    throw std::logic_error("secant_veronese2_degree: product not integral");
  return prod.get_num();
}

// Degrees of the varieties of squares (k=1) and sums of two squares (k=2)
// inside Sym^{2d}V with N = dim Sym^d V: 2^{N-1} and the k=2 secant product.
inline mpz_class deg_sos(int nn, int k) {
  if (k == 1) {
    if (nn < 2) throw std::invalid_argument("deg_sos: k=1 needs N >= 2");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(nn - 1));
    return p;
  }
  if (k == 2) {
    if (nn < 3) throw std::invalid_argument("deg_sos: k=2 needs N >= 3");
    mpq_class prod(1);
    for (int i = 0; i <= nn - 3; ++i)
      prod *= mpq_class(binomial(nn + i, nn - 2 - i), binomial(2 * i + 1, i));
    prod.canonicalize();
    if (prod.get_den() != 1) throw std::logic_error("deg_sos: product not integral");
    return prod.get_num();
  }
  throw std::invalid_argument("deg_sos: k must be 1 or 2");
}

// Upper bound k*C(n+d,n) - C(k,2) for dim SOS_k, attained for k <= n.
inline mpz_class dim_sos_upper(int n, int d, int k) {
  if (k < 1) throw std::invalid_argument("dim_sos_upper: k >= 1");
  return k * binomial(n + d, n) - binomial(k, 2);
}

struct LemmaGap {
  mpz_class dim_sik;   // (2N+1-k)k/2 with N = C(n+d,d)
  mpz_class codim_c;   // C(n+2d,2d)
  bool holds = false;  // dim_sik < codim_c
};

inline LemmaGap lemma_gap(int n, int d, int k) {
  if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("lemma_gap: n, d, k >= 1");
  if (k > n) throw std::invalid_argument("lemma_gap: k <= n required");
  mpz_class nn = binomial(n + d, d);
  mpz_class dim = (2 * nn + 1 - k) * k;
  if (dim % 2 != 0) throw std::logic_error("lemma_gap: odd product");
  dim /= 2;
  mpz_class codim = binomial(n + 2 * d, 2 * d);
  return LemmaGap{dim, codim, dim < codim};
}

}  // namespace sosdec
