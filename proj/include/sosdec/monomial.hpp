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

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sosdec {

// Power product x0^e0 * ... * x{n-1}^e{n-1}, stored as a dense exponent
// vector with the total degree cached.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)), deg_(0) {
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
      deg_ += e;
    }
  }

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  static Monomial var(int i, int nvars, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return deg_; }
  int exp(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const {
    check_same_ring(o);
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& o) const {
    check_same_ring(o);
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Exact quotient o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const {
    check_same_ring(o);
    std::vector<int> e(o.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (b.exps_[i] > e[i]) e[i] = b.exps_[i];
    return Monomial(std::move(e));
  }

  bool coprime_with(const Monomial& o) const {
    check_same_ring(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  std::string to_string() const {
    if (deg_ == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : exps_) {
      h ^= static_cast<std::size_t>(e);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  void check_same_ring(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw std::invalid_argument("Monomial: variable count mismatch");
  }

  std::vector<int> exps_;
  int deg_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Total, multiplicative well-orderings on monomials.  grevlex is the
// default everywhere; the elimination order is a block order whose first
// block (variables [0, split)) dominates, used to project ideals onto the
// remaining variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, grlex, lex, elim_block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::grlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(int split) {
    if (split < 0) throw std::invalid_argument("MonomialOrder: bad split");
    return MonomialOrder(Kind::elim_block, split);
  }

  Kind kind() const { return kind_; }
  int split() const { return split_; }

  // Returns +1 when a > b, -1 when a < b, 0 on equality.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw std::invalid_argument("MonomialOrder: variable count mismatch");
    switch (kind_) {
      case Kind::grevlex:
        return cmp_grevlex(a, b, 0, a.nvars());
      case Kind::grlex:
        return cmp_grlex(a, b);
      case Kind::lex:
        return cmp_lex(a, b, 0, a.nvars());
      case Kind::elim_block: {
        const int s = split_ < a.nvars() ? split_ : a.nvars();
        if (int c = cmp_grevlex(a, b, 0, s)) return c;
        return cmp_grevlex(a, b, s, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::elim_block || split_ == o.split_);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::grevlex:
        return "grevlex";
      case Kind::grlex:
        return "grlex";
      case Kind::lex:
        return "lex";
      case Kind::elim_block:
        return "elim(" + std::to_string(split_) + ")";
    }
    return "";
  }

 private:
  MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}

  static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
  }

  static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.exp(i);
      db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    // equal block degree: the last variable where they differ decides,
    // smaller exponent wins
    for (int i = hi - 1; i >= lo; --i) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
  }

  int cmp_grlex(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return cmp_lex(a, b, 0, a.nvars());
  }

  Kind kind_;
  int split_;
};

}  // namespace sosdec
