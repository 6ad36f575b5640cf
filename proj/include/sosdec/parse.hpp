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

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "sosdec/polynomial.hpp"

namespace sosdec {

// Parser for the polynomial text grammar:
//
//   poly    :=  [sign] term (sign term)*
//   term    :=  factor ('*' factor)*
//   factor  :=  number | 'i' | variable
//   variable:=  'x' index ['^' exponent]
//   number  :=  digits ['/' digits]
//
// Whitespace is insignificant.  Variables are x0 .. x{nvars-1}; 'i' is the
// imaginary unit and is only accepted over the Gaussian rationals.  Each
// term accumulates an exact Gaussian-rational coefficient and an exponent
// vector; the coefficient is converted into the target field at the end.
namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(const std::string& s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    skip_space();
    if (pos_ >= s_.size()) throw std::invalid_argument("polynomial parse: unexpected end of input");
    return s_[pos_++];
  }
  std::string digits() {
    skip_space();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      d += s_[pos_++];
    if (d.empty()) throw std::invalid_argument("polynomial parse: expected digits at position " + std::to_string(pos_));
    return d;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

template <field_of F>
struct coeff_from_gaussian;

template <>
struct coeff_from_gaussian<Rationals> {
  static mpq_class get(const Rationals&, const GaussianRational& c) {
    if (c.im != 0)
      throw std::invalid_argument("polynomial parse: 'i' needs the Gaussian rationals");
    return c.re;
  }
};

template <>
struct coeff_from_gaussian<GaussianRationals> {
  static GaussianRational get(const GaussianRationals&, const GaussianRational& c) {
    return c;
  }
};

template <>
struct coeff_from_gaussian<PrimeField> {
  static FpElem get(const PrimeField& f, const GaussianRational& c) {
    if (c.im != 0)
      throw std::invalid_argument("polynomial parse: 'i' needs the Gaussian rationals");
    return f.from_rational(c.re);
  }
};

}  // namespace detail

template <field_of F>
Polynomial<F> parse_polynomial(const std::string& text, F field, int nvars,
                               MonomialOrder order = MonomialOrder::grevlex()) {
  detail::PolyLexer lx(text);
  GaussianRationals gq;
  std::vector<typename Polynomial<F>::Term> terms;

  bool first = true;
  while (!lx.done()) {
    // sign
    bool negative = false;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      negative = (c == '-');
    } else if (!first) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-'");
    }
    first = false;

    GaussianRational coeff(1, 0);
    std::vector<int> exps(nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
      char f0 = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(f0))) {
        std::string num = lx.digits();
        std::string lit = num;
        if (lx.peek() == '/') {
          lx.take();
          lit += "/" + lx.digits();
        }
        coeff = gq.mul(coeff, promote(rational_from_string(lit)));
      } else if (f0 == 'i') {
        lx.take();
        coeff = gq.mul(coeff, gq.imaginary_unit());
      } else if (f0 == 'x') {
        lx.take();
        int idx = std::stoi(lx.digits());
        if (idx < 0 || idx >= nvars)
          throw std::invalid_argument("polynomial parse: variable x" + std::to_string(idx) +
                                      " outside ring with " + std::to_string(nvars) + " variables");
        int e = 1;
        if (lx.peek() == '^') {
          lx.take();
          e = std::stoi(lx.digits());
        }
        exps[idx] += e;
      } else {
        throw std::invalid_argument(std::string("polynomial parse: unexpected character '") + f0 + "'");
      }
      if (lx.peek() == '*') {
        lx.take();
      } else {
        expect_factor = false;
      }
    }
    if (negative) coeff = gq.neg(coeff);
    terms.push_back({Monomial(std::move(exps)),
                     detail::coeff_from_gaussian<F>::get(field, coeff)});
  }
  return Polynomial<F>::from_terms(std::move(field), nvars, order, std::move(terms));
}

}  // namespace sosdec
