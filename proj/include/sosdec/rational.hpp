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
#include <string>
#include <utility>
#include <vector>

namespace sosdec {

// The rational field QQ.  Elements are GMP rationals, which are always kept
// canonical: reduced fraction, positive denominator, zero stored as 0/1.
//
// All field classes in this library share one shape: a cheap value object
// that owns whatever runtime context the field needs (here none, for the
// prime field the modulus) and exposes arithmetic as member functions.
// Generic code over a field F never constructs elements directly; it asks
// the field object, so elements of context-dependent fields are always born
// with the right context.
class Rationals {
 public:
  using Elem = mpq_class;

  static const char* name() { return "rational"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("Rationals: division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  // Sign-split pieces for polynomial printing: (unsigned text, is_negative).
  std::vector<std::pair<std::string, bool>> term_atoms(const Elem& a) const {
    return {{mpq_class(abs(a)).get_str(), a < 0}};
  }

  // Pivot selection weight for exact elimination: total limb count of
  // numerator and denominator.  Smaller pivots keep Bareiss entries small.
  std::size_t pivot_weight(const Elem& a) const {
    return mpz_size(a.get_num().get_mpz_t()) +
           mpz_size(a.get_den().get_mpz_t());
  }

  bool operator==(const Rationals&) const { return true; }
};

// Parses an integer or "a/b" literal; validates shape and canonicalizes.
inline mpq_class rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in literal: " + text);
  q.canonicalize();
  return q;
}

}  // namespace sosdec
