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
#include <utility>
#include <vector>

#include "sosdec/rational.hpp"

namespace sosdec {

// Element of QQ(i): re + im*i with exact rational parts.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r, mpq_class i)
      : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }
};

// The Gaussian rationals QQ(i), the smallest field where a sum of two
// squares splits as (g + i h)(g - i h).
class GaussianRationals {
 public:
  using Elem = GaussianRational;

  static const char* name() { return "gaussian"; }

  Elem zero() const { return Elem(); }
  Elem one() const { return Elem(1, 0); }
  Elem imaginary_unit() const { return Elem(0, 1); }
  Elem from_int(long v) const { return Elem(v, 0); }
  Elem from_rational(const mpq_class& q) const { return Elem(q, 0); }

  Elem add(const Elem& a, const Elem& b) const {
    return Elem(a.re + b.re, a.im + b.im);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return Elem(a.re - b.re, a.im - b.im);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    return Elem(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Elem neg(const Elem& a) const { return Elem(-a.re, -a.im); }

  Elem div(const Elem& a, const Elem& b) const {
    mpq_class n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussianRationals: division by zero");
    return Elem((a.re * b.re + a.im * b.im) / n,
                (a.im * b.re - a.re * b.im) / n);
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a.re == 0 && a.im == 0; }
  bool is_one(const Elem& a) const { return a.re == 1 && a.im == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  // Exact string form, re-parseable by the polynomial grammar: "3", "-i",
  // "1/2+3/4*i", "1/2-3/4*i".
  std::string to_string(const Elem& a) const {
    if (a.im == 0) return a.re.get_str();
    std::string imag;
    if (a.im == 1) {
      imag = "i";
    } else if (a.im == -1) {
      imag = "-i";
    } else {
      imag = a.im.get_str() + "*i";
    }
    if (a.re == 0) return imag;
    if (a.im > 0) return a.re.get_str() + "+" + imag;
    return a.re.get_str() + imag;  // imag already carries the minus sign
  }

  // A mixed coefficient prints as two separate grammar terms (the grammar
  // has no parentheses), e.g. (1/2 - i)*x0 prints as "1/2*x0 - i*x0".
  std::vector<std::pair<std::string, bool>> term_atoms(const Elem& a) const {
    std::vector<std::pair<std::string, bool>> out;
    if (a.re != 0) out.emplace_back(mpq_class(abs(a.re)).get_str(), a.re < 0);
    if (a.im != 0) {
      mpq_class m = abs(a.im);
      out.emplace_back(m == 1 ? "i" : m.get_str() + "*i", a.im < 0);
    }
    return out;
  }

  std::size_t pivot_weight(const Elem& a) const {
    Rationals q;
    return q.pivot_weight(a.re) + q.pivot_weight(a.im);
  }

  bool operator==(const GaussianRationals&) const { return true; }
};

// Explicit promotion QQ -> QQ(i).  A Gaussian rational with zero imaginary
// part compares equal to the promoted plain rational.
inline GaussianRational promote(const mpq_class& a) {
  return GaussianRational(a, 0);
}

}  // namespace sosdec
