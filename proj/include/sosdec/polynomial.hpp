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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sosdec/field.hpp"
#include "sosdec/monomial.hpp"

namespace sosdec {

// Multivariate polynomial over an exact field F.  Terms are kept sorted
// strictly descending under the active monomial order with no zero
// coefficients and no duplicate monomials, so equal polynomials have equal
// representations.
template <field_of F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Polynomial(F field, int nvars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars < 1) throw std::invalid_argument("Polynomial: need >= 1 variable");
  }

  static Polynomial from_terms(F field, int nvars, MonomialOrder order,
                               std::vector<Term> terms) {
    Polynomial p(std::move(field), nvars, order);
    for (const Term& t : terms)
      if (t.mono.nvars() != nvars)
        throw std::invalid_argument("Polynomial: monomial variable count mismatch");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return p.order_.greater(a.mono, b.mono);
    });
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.field_.add(p.terms_.back().coeff, t.coeff);
        if (p.field_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!p.field_.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial constant(F field, int nvars, Elem c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, nvars, order);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial::one(nvars), c});
    return p;
  }

  static Polynomial variable(F field, int i, int nvars,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(field, nvars, order);
    p.terms_.push_back({Monomial::var(i, nvars), field.one()});
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }

  // Everything below the leading term; terms stay canonical.
  Polynomial tail() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: zero polynomial has no tail");
    Polynomial r(field_, nvars_, order_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_, order_);
    r.terms_ = merge(o, /*negate_rhs=*/false);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(field_, nvars_, order_);
    r.terms_ = merge(o, /*negate_rhs=*/true);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        acc.push_back({a.mono.times(b.mono), field_.mul(a.coeff, b.coeff)});
    return from_terms(field_, nvars_, order_, std::move(acc));
  }

  bool operator==(const Polynomial& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono) ||
          !field_.eq(terms_[i].coeff, o.terms_[i].coeff))
        return false;
    }
    return true;
  }

  Polynomial scaled(const Elem& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_, order_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  // this - c * m * g, the reduction step of polynomial division, done as a
  // single sorted merge.
  Polynomial sub_scaled(const Elem& c, const Monomial& m,
                        const Polynomial& g) const {
    check_compatible(g);
    Polynomial r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = m.times(g.terms_[j].mono);
      if (i == terms_.size()) {
        Elem v = field_.neg(field_.mul(c, g.terms_[j].coeff));
        if (!field_.is_zero(v)) r.terms_.push_back({std::move(gm), std::move(v)});
        ++j;
        continue;
      }
      int cmp = order_.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Elem v = field_.neg(field_.mul(c, g.terms_[j].coeff));
        if (!field_.is_zero(v)) r.terms_.push_back({std::move(gm), std::move(v)});
        ++j;
      } else {
        Elem v = field_.sub(terms_[i].coeff, field_.mul(c, g.terms_[j].coeff));
        if (!field_.is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.mono = t.mono.times(m);
    return r;  // multiplying by a fixed monomial preserves every order here
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("Polynomial: evaluation point has wrong length");
    Elem acc = field_.zero();
    for (const Term& t : terms_) {
      Elem v = t.coeff;
      for (int i = 0; i < nvars_; ++i) {
        for (int e = 0; e < t.mono.exp(i); ++e) v = field_.mul(v, point[i]);
      }
      acc = field_.add(acc, v);
    }
    return acc;
  }

  // Substitutes g for variable v.  Used to eliminate variables pinned by
  // linear equations; g must live in the same ring.
  Polynomial substitute(int v, const Polynomial& g) const {
    check_compatible(g);
    if (v < 0 || v >= nvars_) throw std::invalid_argument("Polynomial: bad variable");
    Polynomial result(field_, nvars_, order_);
    std::vector<Polynomial> pow{constant(field_, nvars_, field_.one(), order_)};
    for (const Term& t : terms_) {
      int e = t.mono.exp(v);
      while (static_cast<int>(pow.size()) <= e) pow.push_back(pow.back() * g);
      std::vector<int> rest = t.mono.exponents();
      rest[v] = 0;
      Polynomial piece = pow[e].scaled(t.coeff).times_monomial(Monomial(std::move(rest)));
      result = result + piece;
    }
    return result;
  }

  // Same polynomial re-sorted under a different order.
  Polynomial with_order(const MonomialOrder& order) const {
    return from_terms(field_, nvars_, order, terms_);
  }

  Elem coefficient_of(const Monomial& m) const {
    for (const Term& t : terms_)
      if (t.mono == m) return t.coeff;
    return field_.zero();
  }

  // Exact text form in the polynomial grammar, e.g. "3*x0^2*x1 - 1/2*x1^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      for (const auto& [body, negative] : field_.term_atoms(t.coeff)) {
        if (out.empty()) {
          if (negative) out += "-";
        } else {
          out += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
          out += body;
        } else if (body == "1") {
          out += t.mono.to_string();
        } else {
          out += body + "*" + t.mono.to_string();
        }
      }
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_))
      throw std::invalid_argument("Polynomial: field mismatch");
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("Polynomial: variable count mismatch");
    if (!(order_ == o.order_))
      throw std::invalid_argument("Polynomial: monomial order mismatch");
  }

  std::vector<Term> merge(const Polynomial& o, bool negate_rhs) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (i == terms_.size()) {
        Elem v = negate_rhs ? field_.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
        out.push_back({o.terms_[j].mono, std::move(v)});
        ++j;
      } else if (j == o.terms_.size()) {
        out.push_back(terms_[i++]);
      } else {
        int cmp = order_.compare(terms_[i].mono, o.terms_[j].mono);
        if (cmp > 0) {
          out.push_back(terms_[i++]);
        } else if (cmp < 0) {
          Elem v = negate_rhs ? field_.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
          out.push_back({o.terms_[j].mono, std::move(v)});
          ++j;
        } else {
          Elem v = negate_rhs ? field_.sub(terms_[i].coeff, o.terms_[j].coeff)
                              : field_.add(terms_[i].coeff, o.terms_[j].coeff);
          if (!field_.is_zero(v)) out.push_back({terms_[i].mono, std::move(v)});
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  F field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Coefficient of p on each basis monomial, in basis order.  Errors when p
// has support outside the basis.
template <field_of F>
std::vector<typename F::Elem> coefficient_vector(
    const Polynomial<F>& p, const std::vector<Monomial>& basis) {
  std::vector<typename F::Elem> out(basis.size(), p.field().zero());
  for (const auto& t : p.terms()) {
    bool found = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[j] == t.mono) {
        out[j] = t.coeff;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("coefficient_vector: monomial outside basis: " +
                                  t.mono.to_string());
  }
  return out;
}

// Coefficient-wise field change, e.g. reduction of a rational system mod p.
template <field_of G, field_of F, class Fn>
Polynomial<G> map_coefficients(const Polynomial<F>& p, G target, Fn fn) {
  std::vector<typename Polynomial<G>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, fn(t.coeff)});
  return Polynomial<G>::from_terms(std::move(target), p.nvars(), p.order(),
                                   std::move(terms));
}

}  // namespace sosdec
