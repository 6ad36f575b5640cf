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

#include <concepts>
#include <string>

#include "sosdec/gaussian.hpp"
#include "sosdec/prime_field.hpp"
#include "sosdec/rational.hpp"

namespace sosdec {

// Contract satisfied by Rationals, GaussianRationals and PrimeField.
// Arithmetic is exact; div throws on zero divisors; eq is exact equality of
// canonical forms.
template <class F>
concept field_of = requires(const F f, const typename F::Elem a,
                            const typename F::Elem b) {
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(0L) } -> std::same_as<typename F::Elem>;
  { f.add(a, b) } -> std::same_as<typename F::Elem>;
  { f.sub(a, b) } -> std::same_as<typename F::Elem>;
  { f.mul(a, b) } -> std::same_as<typename F::Elem>;
  { f.div(a, b) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.is_one(a) } -> std::same_as<bool>;
  { f.eq(a, b) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.pivot_weight(a) } -> std::same_as<std::size_t>;
  { f == f } -> std::same_as<bool>;
  { F::name() };
};

static_assert(field_of<Rationals>);
static_assert(field_of<GaussianRationals>);
static_assert(field_of<PrimeField>);

// Compares a rational against a Gaussian rational after explicit promotion.
inline bool eq_promoted(const mpq_class& a, const GaussianRational& b) {
  return GaussianRationals{}.eq(promote(a), b);
}

}  // namespace sosdec
