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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sosdec/rng.hpp"

namespace sosdec {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the fixed witness set below is exact for all
// 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Residue in [0, p).  The modulus lives in the PrimeField object, not in
// the element, so elements stay one machine word.
struct FpElem {
  std::uint64_t v = 0;
  bool operator==(const FpElem& o) const { return v == o.v; }
};

// F_p for an odd prime p < 2^62 (default working prime 2^31 - 1; degree
// computations cross-check against a second random 30-bit prime).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1
  static constexpr std::uint64_t kMaxPrime = 1ull << 62;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= kMaxPrime || !is_prime_u64(p))
      throw std::invalid_argument("PrimeField: modulus must be an odd prime below 2^62");
  }

  using Elem = FpElem;

  static const char* name() { return "prime_field"; }
  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }

  Elem from_int(long v) const {
    long long r = static_cast<long long>(v) % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return {static_cast<std::uint64_t>(r)};
  }

  // Reduction of an exact rational: num * den^{-1} mod p.  Throws when the
  // denominator vanishes mod p; callers then pick a different prime.
  Elem from_rational(const mpq_class& q) const {
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p_);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p_);
    if (den == 0)
      throw std::domain_error("PrimeField: denominator divisible by modulus");
    return mul({num}, inv({den}));
  }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = a.v + b.v;  // p < 2^62 so no overflow
    if (s >= p_) s -= p_;
    return {s};
  }
  Elem sub(Elem a, Elem b) const {
    return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
  }
  Elem mul(Elem a, Elem b) const { return {detail::mulmod_u64(a.v, b.v, p_)}; }
  Elem neg(Elem a) const { return {a.v == 0 ? 0 : p_ - a.v}; }

  Elem inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("PrimeField: division by zero");
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p_, nr = a.v;
    while (nr != 0) {
      std::uint64_t qu = r / nr;
      std::int64_t tmp = t - static_cast<std::int64_t>(qu) * nt;
      t = nt;
      nt = tmp;
      std::uint64_t rr = r - qu * nr;
      r = nr;
      nr = rr;
    }
    return {t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_))
                  : static_cast<std::uint64_t>(t)};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a.v == 0; }
  bool is_one(Elem a) const { return a.v == 1; }
  bool eq(Elem a, Elem b) const { return a.v == b.v; }

  std::string to_string(Elem a) const { return std::to_string(a.v); }

  std::vector<std::pair<std::string, bool>> term_atoms(Elem a) const {
    return {{std::to_string(a.v), false}};
  }

  std::size_t pivot_weight(Elem) const { return 1; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

// Random 30-bit prime drawn from the splitmix64 stream; used as the
// cross-check modulus in degree computations.
inline std::uint64_t random_prime_30bit(SplitMix64& rng) {
  for (;;) {
    std::uint64_t c = (1ull << 29) + rng.below(1ull << 29);
    c |= 1;
    if (is_prime_u64(c)) return c;
  }
}

}  // namespace sosdec
