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

#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sosdec/polynomial.hpp"
#include "sosdec/prime_field.hpp"
#include "sosdec/rational.hpp"
#include "sosdec/rng.hpp"

namespace sosdec {

// Resource caps for basis computations.  Exceeding one raises BudgetExceeded;
// there is no silent truncation.
struct Budget {
  std::size_t max_pairs = 500000;  // S-pairs taken off the queue
  int max_degree = 64;             // degree of any basis element
  std::size_t max_basis = 20000;   // intermediate basis size
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositiveDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SliceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <field_of F>
struct Ideal {
  F field;
  int nvars = 0;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> gens;

  static Ideal make(F field, int nvars, MonomialOrder order,
                    const std::vector<Polynomial<F>>& gens) {
    Ideal ideal{std::move(field), nvars, order, {}};
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.nvars() != nvars) throw std::invalid_argument("Ideal: variable count mismatch");
      if (!(g.field() == ideal.field)) throw std::invalid_argument("Ideal: field mismatch");
      ideal.gens.push_back(g.order() == order ? g : g.with_order(order));
    }
    return ideal;
  }
};

template <field_of F>
struct GroebnerBasis {
  F field;
  int nvars = 0;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial<F>> basis;  // reduced: monic, minimal, tails reduced

  bool is_unit() const { return basis.size() == 1 && basis[0].degree() == 0; }
};

// Remainder of p under full division by gs: no term of the result is
// divisible by any leading monomial of gs.  Deterministic (first divisor in
// list order wins).
template <field_of F>
Polynomial<F> normal_form(const Polynomial<F>& p0, const std::vector<Polynomial<F>>& gs) {
  const F& field = p0.field();
  Polynomial<F> p = p0;
  std::vector<typename Polynomial<F>::Term> rem;
  while (!p.is_zero()) {
    const auto lt = p.leading_term();
    const Polynomial<F>* red = nullptr;
    for (const auto& g : gs) {
      if (!g.is_zero() && g.leading_term().mono.divides(lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red) {
      const auto& glt = red->leading_term();
      p = p.sub_scaled(field.div(lt.coeff, glt.coeff), glt.mono.quotient_of(lt.mono), *red);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial<F>::from_terms(field, p0.nvars(), p0.order(), std::move(rem));
}

template <field_of F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  return normal_form(p, gb.basis);
}

namespace detail {

template <field_of F>
Polynomial<F> monic(const Polynomial<F>& p) {
  const F& field = p.field();
  if (p.is_zero() || field.is_one(p.leading_term().coeff)) return p;
  return p.scaled(field.inv(p.leading_term().coeff));
}

// Inter-reduce a generating set: repeat full normal forms until stable.  The
// result generates the same ideal with pairwise non-redundant leading terms.
template <field_of F>
std::vector<Polynomial<F>> autoreduce(std::vector<Polynomial<F>> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Polynomial<F> gi = g[i];
      std::vector<Polynomial<F>> others;
      others.reserve(g.size() - 1);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Polynomial<F> h = normal_form(gi, others);
      if (!(h == gi)) {
        changed = true;
        if (h.is_zero()) {
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          g[i] = monic(h);
        }
      }
    }
  }
  return g;
}

struct SPair {
  int deg = 0;
  Monomial lcm = Monomial(std::vector<int>{0});
  int i = 0, j = 0;
};

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy and the product
// and chain criteria; returns the unique reduced basis for the ideal's order.
template <field_of F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const Budget& budget = {}) {
  const F& field = ideal.field;
  const MonomialOrder order = ideal.order;

  std::vector<Polynomial<F>> g;
  for (const auto& p : ideal.gens)
    if (!p.is_zero()) g.push_back(detail::monic(p));
  g = detail::autoreduce(std::move(g));

  auto pair_less = [order](const detail::SPair& a, const detail::SPair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<detail::SPair, decltype(pair_less)> queue(pair_less);
  std::unordered_set<std::uint64_t> treated;
  auto key = [](int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  };
  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      Monomial l = Monomial::lcm(g[i].leading_term().mono, g[t].leading_term().mono);
      queue.insert({l.degree(), std::move(l), i, t});
    }
  };
  for (int t = 1; t < static_cast<int>(g.size()); ++t) push_pairs(t);

  std::size_t pops = 0;
  while (!queue.empty()) {
    detail::SPair pr = *queue.begin();
    queue.erase(queue.begin());
    if (++pops > budget.max_pairs) throw BudgetExceeded("buchberger: pair budget exceeded");
    treated.insert(key(pr.i, pr.j));

    const Monomial& lmi = g[pr.i].leading_term().mono;
    const Monomial& lmj = g[pr.j].leading_term().mono;
    if (lmi.coprime_with(lmj)) continue;  // product criterion
    bool chained = false;
    for (int l = 0; l < static_cast<int>(g.size()); ++l) {
      if (l == pr.i || l == pr.j) continue;
      if (!g[l].leading_term().mono.divides(pr.lcm)) continue;
      if (treated.count(key(std::min(pr.i, l), std::max(pr.i, l))) &&
          treated.count(key(std::min(pr.j, l), std::max(pr.j, l)))) {
        chained = true;
        break;
      }
    }
    if (chained) continue;  // chain criterion

    Polynomial<F> s = g[pr.i].times_monomial(lmi.quotient_of(pr.lcm)) -
                      g[pr.j].times_monomial(lmj.quotient_of(pr.lcm));
    Polynomial<F> r = normal_form(s, g);
    if (r.is_zero()) continue;
    if (r.degree() > budget.max_degree)
      throw BudgetExceeded("buchberger: degree budget exceeded");
    g.push_back(detail::monic(r));
    if (g.size() > budget.max_basis) throw BudgetExceeded("buchberger: basis budget exceeded");
    push_pairs(static_cast<int>(g.size()) - 1);
  }

  // Minimalize: keep only leading monomials not divisible by another kept one.
  std::vector<int> idx(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return order.less(g[a].leading_term().mono, g[b].leading_term().mono);
  });
  std::vector<Polynomial<F>> minimal;
  for (int i : idx) {
    const Monomial& lm = g[i].leading_term().mono;
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_term().mono.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Tail-reduce each element against the others; leading terms are already
  // pairwise non-divisible, so this yields the reduced basis.
  std::vector<Polynomial<F>> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = detail::monic(normal_form(reduced[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.greater(a.leading_term().mono, b.leading_term().mono);
  });
  return GroebnerBasis<F>{field, ideal.nvars, order, std::move(reduced)};
}

// Exhaustive S-pair check (Buchberger's criterion); used by tests.
template <field_of F>
bool all_spairs_reduce(const GroebnerBasis<F>& gb) {
  const auto& g = gb.basis;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Monomial& lmi = g[i].leading_term().mono;
      const Monomial& lmj = g[j].leading_term().mono;
      Monomial l = Monomial::lcm(lmi, lmj);
      Polynomial<F> s = g[i].times_monomial(lmi.quotient_of(l)) -
                        g[j].times_monomial(lmj.quotient_of(l));
      if (!normal_form(s, g).is_zero()) return false;
    }
  }
  return true;
}

// Krull dimension of the quotient ring from the leading-term staircase:
// nvars minus a minimum hitting set of the leading-term supports.  Returns
// -1 for the unit ideal and nvars for the zero ideal.
template <field_of F>
int staircase_dimension(const GroebnerBasis<F>& gb) {
  if (gb.nvars > 63) throw std::invalid_argument("staircase_dimension: too many variables");
  for (const auto& b : gb.basis)
    if (b.degree() == 0) return -1;
  if (gb.basis.empty()) return gb.nvars;

  std::vector<std::uint64_t> supports;
  for (const auto& b : gb.basis) {
    const Monomial& lm = b.leading_term().mono;
    std::uint64_t mask = 0;
    for (int v = 0; v < gb.nvars; ++v)
      if (lm.exp(v) > 0) mask |= (1ull << v);
    supports.push_back(mask);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // Drop supersets: hitting a subset hits every superset.
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t s : supports) {
    bool has_subset = false;
    for (std::uint64_t t : supports)
      if (t != s && (t & s) == t) {
        has_subset = true;
        break;
      }
    if (!has_subset) minimal.push_back(s);
  }

  int best = gb.nvars;
  auto rec = [&](auto&& self, const std::vector<std::uint64_t>& rem, int chosen) -> void {
    if (chosen >= best) return;
    if (rem.empty()) {
      best = chosen;
      return;
    }
    std::uint64_t pick = rem[0];
    for (std::uint64_t s : rem)
      if (__builtin_popcountll(s) < __builtin_popcountll(pick)) pick = s;
    for (int v = 0; v < 64; ++v) {
      if (!(pick & (1ull << v))) continue;
      std::vector<std::uint64_t> next;
      next.reserve(rem.size());
      for (std::uint64_t s : rem)
        if (!(s & (1ull << v))) next.push_back(s);
      self(self, next, chosen + 1);
    }
  };
  rec(rec, minimal, 0);
  return gb.nvars - best;
}

// Number of monomials outside the leading-term ideal; finite exactly in the
// zero-dimensional case, where it counts solutions with multiplicity.
template <field_of F>
long standard_monomial_count(const GroebnerBasis<F>& gb, long cap = 2000000) {
  for (const auto& b : gb.basis)
    if (b.degree() == 0) return 0;
  std::vector<Monomial> lms;
  for (const auto& b : gb.basis) lms.push_back(b.leading_term().mono);
  auto is_standard = [&](const Monomial& m) {
    for (const auto& lm : lms)
      if (lm.divides(m)) return false;
    return true;
  };
  Monomial one = Monomial::one(gb.nvars);
  if (!is_standard(one)) return 0;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> frontier;
  seen.insert(one);
  frontier.push_back(one);
  while (!frontier.empty()) {
    Monomial m = frontier.front();
    frontier.pop_front();
    for (int v = 0; v < gb.nvars; ++v) {
      Monomial child = m.times(Monomial::var(v, gb.nvars));
      if (!is_standard(child) || seen.count(child)) continue;
      seen.insert(child);
      frontier.push_back(child);
      if (static_cast<long>(seen.size()) > cap)
        throw PositiveDimensional("standard_monomial_count: enumeration exceeded cap");
    }
  }
  return static_cast<long>(seen.size());
}

namespace detail {

template <field_of F>
Polynomial<F> permute_vars(const Polynomial<F>& p, const std::vector<int>& new_of_old,
                           int new_nvars, MonomialOrder order) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<int> e(new_nvars, 0);
    for (int v = 0; v < p.nvars(); ++v) {
      if (t.mono.exp(v) == 0) continue;
      if (new_of_old[v] < 0)
        throw std::logic_error("permute_vars: dropped variable still present");
      e[new_of_old[v]] += t.mono.exp(v);
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<F>::from_terms(p.field(), new_nvars, order, std::move(terms));
}

}  // namespace detail

// Result of pre-solving the affine-linear generators by substitution: an
// equivalent system in fewer variables (the quotient algebras are isomorphic,
// so dimension and standard-monomial counts are preserved).
template <field_of F>
struct LinearReduction {
  std::vector<Polynomial<F>> sys;
  int nvars = 0;
  bool feasible = true;  // false when the linear part is inconsistent
  int eliminated = 0;
};

template <field_of F>
LinearReduction<F> eliminate_linear(std::vector<Polynomial<F>> sys, int nvars, const F& field) {
  LinearReduction<F> out;
  out.nvars = nvars;
  while (true) {
    std::vector<Polynomial<F>> linear, rest;
    for (auto& p : sys) {
      if (p.is_zero()) continue;
      (p.degree() <= 1 ? linear : rest).push_back(std::move(p));
    }
    if (linear.empty()) {
      out.sys = std::move(rest);
      return out;
    }
    // Row-reduce the affine part: row = (coeff of each variable, constant).
    std::vector<std::vector<typename F::Elem>> rows;
    for (const auto& p : linear) {
      std::vector<typename F::Elem> row(out.nvars + 1, field.zero());
      for (const auto& t : p.terms()) {
        if (t.mono.is_one()) {
          row[out.nvars] = t.coeff;
        } else {
          for (int v = 0; v < out.nvars; ++v)
            if (t.mono.exp(v) > 0) row[v] = t.coeff;
        }
      }
      rows.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < out.nvars && rank < rows.size(); ++c) {
      std::size_t sel = rank;
      std::size_t best = 0;
      bool found = false;
      for (std::size_t r = rank; r < rows.size(); ++r) {
        if (field.is_zero(rows[r][c])) continue;
        std::size_t w = field.pivot_weight(rows[r][c]);
        if (!found || w < best) {
          found = true;
          sel = r;
          best = w;
        }
      }
      if (!found) continue;
      std::swap(rows[rank], rows[sel]);
      typename F::Elem s = field.inv(rows[rank][c]);
      for (auto& x : rows[rank]) x = field.mul(x, s);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || field.is_zero(rows[r][c])) continue;
        typename F::Elem f = rows[r][c];
        for (int cc = 0; cc <= out.nvars; ++cc)
          rows[r][cc] = field.sub(rows[r][cc], field.mul(f, rows[rank][cc]));
      }
      pivot_col.push_back(c);
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (!field.is_zero(rows[r][out.nvars])) {
        out.feasible = false;
        out.sys.clear();
        return out;
      }
    }
    // Substitute each pivot variable by its affine expression in free
    // variables; in reduced row echelon form the expressions involve no
    // pivot variables, so single-variable substitutions are independent.
    for (std::size_t r = 0; r < rank; ++r) {
      const int pc = pivot_col[r];
      std::vector<typename Polynomial<F>::Term> terms;
      for (int v = 0; v < out.nvars; ++v) {
        if (v == pc || field.is_zero(rows[r][v])) continue;
        terms.push_back({Monomial::var(v, out.nvars), field.neg(rows[r][v])});
      }
      if (!field.is_zero(rows[r][out.nvars]))
        terms.push_back({Monomial::one(out.nvars), field.neg(rows[r][out.nvars])});
      Polynomial<F> expr = Polynomial<F>::from_terms(field, out.nvars,
                                                     MonomialOrder::grevlex(), std::move(terms));
      for (auto& p : rest) p = p.substitute(pc, expr);
    }
    // Renumber the surviving (non-pivot) variables.
    std::vector<int> new_of_old(out.nvars, -1);
    int next = 0;
    std::vector<char> is_pivot(out.nvars, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int v = 0; v < out.nvars; ++v)
      if (!is_pivot[v]) new_of_old[v] = next++;
    std::vector<Polynomial<F>> compressed;
    for (const auto& p : rest) {
      if (p.is_zero()) continue;
      compressed.push_back(detail::permute_vars(p, new_of_old, next, MonomialOrder::grevlex()));
    }
    out.eliminated += static_cast<int>(rank);
    out.nvars = next;
    sys = std::move(compressed);
    if (rank == 0) {
      out.sys = std::move(sys);
      return out;
    }
  }
}

inline std::vector<Polynomial<PrimeField>> reduce_mod_p(
    const std::vector<Polynomial<Rationals>>& sys, const PrimeField& fp) {
  std::vector<Polynomial<PrimeField>> out;
  out.reserve(sys.size());
  for (const auto& p : sys)
    out.push_back(map_coefficients(p, fp, [&](const mpq_class& q) { return fp.from_rational(q); }));
  return out;
}

// Count of solutions (with multiplicity) of a zero-dimensional system over
// the given prime field; 0 when the system is inconsistent.
inline long solution_count(const std::vector<Polynomial<Rationals>>& system, std::uint64_t prime,
                           const Budget& budget = {}) {
  if (system.empty()) throw std::invalid_argument("solution_count: empty system");
  PrimeField fp(prime);
  auto sys_p = reduce_mod_p(system, fp);
  auto red = eliminate_linear(std::move(sys_p), system.front().nvars(), fp);
  if (!red.feasible) return 0;
  if (red.sys.empty()) {
    if (red.nvars == 0) return 1;
    throw PositiveDimensional("solution_count: system is positive-dimensional");
  }
  auto gb = buchberger(Ideal<PrimeField>::make(fp, red.nvars, MonomialOrder::grevlex(), red.sys),
                       budget);
  int dim = staircase_dimension(gb);
  if (dim > 0) throw PositiveDimensional("solution_count: system is positive-dimensional");
  if (dim == -1) return 0;
  return standard_monomial_count(gb);
}

// Degree of the variety of a system of expected dimension expected_dim via a
// random affine-linear slice mod prime: the sliced system must become
// zero-dimensional and its standard-monomial count is returned.  Unlucky
// slices (empty or not zero-dimensional) are retried with derived seeds.
inline long sliced_degree(const std::vector<Polynomial<Rationals>>& system, int expected_dim,
                          std::uint64_t seed, std::uint64_t prime, const Budget& budget = {},
                          int max_attempts = 8) {
  if (system.empty()) throw std::invalid_argument("sliced_degree: empty system");
  if (expected_dim < 0) throw std::invalid_argument("sliced_degree: expected_dim >= 0");
  const int nvars = system.front().nvars();
  PrimeField fp(prime);
  auto sys_p = reduce_mod_p(system, fp);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ull);
    std::vector<Polynomial<PrimeField>> sliced = sys_p;
    for (int s = 0; s < expected_dim; ++s) {
      std::vector<typename Polynomial<PrimeField>::Term> terms;
      for (int v = 0; v < nvars; ++v) {
        FpElem c{rng.below(prime)};
        if (!fp.is_zero(c)) terms.push_back({Monomial::var(v, nvars), c});
      }
      terms.push_back({Monomial::one(nvars), FpElem{1 + rng.below(prime - 1)}});
      sliced.push_back(Polynomial<PrimeField>::from_terms(fp, nvars, MonomialOrder::grevlex(),
                                                          std::move(terms)));
    }
    auto red = eliminate_linear(std::move(sliced), nvars, fp);
    if (!red.feasible) continue;
    if (red.sys.empty()) {
      if (red.nvars == 0) return 1;
      continue;
    }
    auto gb = buchberger(
        Ideal<PrimeField>::make(fp, red.nvars, MonomialOrder::grevlex(), red.sys), budget);
    int dim = staircase_dimension(gb);
    if (dim == 0) return standard_monomial_count(gb);
    // dim == -1: the slice missed the variety mod p; dim > 0: degenerate
    // slice.  Both warrant a retry with fresh slice coefficients.
  }
  throw SliceFailure("sliced_degree: no zero-dimensional slice found");
}

enum class RunStatus { ok, unstable, budget_exceeded };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::unstable: return "unstable";
    case RunStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

// Two independent (seed, prime) runs of an integer-valued computation; the
// value is accepted only when both agree.
struct StableCount {
  RunStatus status = RunStatus::ok;
  long value = -1;
  std::array<std::uint64_t, 2> seeds{0, 0};
  std::array<std::uint64_t, 2> primes{0, 0};
  std::array<long, 2> counts{-1, -1};
};

inline StableCount stable_sliced_degree(const std::vector<Polynomial<Rationals>>& system,
                                        int expected_dim, std::uint64_t seed1, std::uint64_t prime1,
                                        std::uint64_t seed2, std::uint64_t prime2,
                                        const Budget& budget = {}) {
  StableCount out;
  out.seeds = {seed1, seed2};
  out.primes = {prime1, prime2};
  try {
    out.counts[0] = sliced_degree(system, expected_dim, seed1, prime1, budget);
    out.counts[1] = sliced_degree(system, expected_dim, seed2, prime2, budget);
  } catch (const BudgetExceeded&) {
    out.status = RunStatus::budget_exceeded;
    return out;
  }
  if (out.counts[0] == out.counts[1]) {
    out.status = RunStatus::ok;
    out.value = out.counts[0];
  } else {
    out.status = RunStatus::unstable;
  }
  return out;
}

inline StableCount stable_solution_count(const std::vector<Polynomial<Rationals>>& system,
                                         std::uint64_t prime1, std::uint64_t prime2,
                                         const Budget& budget = {}) {
  StableCount out;
  out.primes = {prime1, prime2};
  try {
    out.counts[0] = solution_count(system, prime1, budget);
    out.counts[1] = solution_count(system, prime2, budget);
  } catch (const BudgetExceeded&) {
    out.status = RunStatus::budget_exceeded;
    return out;
  }
  if (out.counts[0] == out.counts[1]) {
    out.status = RunStatus::ok;
    out.value = out.counts[0];
  } else {
    out.status = RunStatus::unstable;
  }
  return out;
}

// Whether a homogeneous system cuts out only the origin: true exactly when
// the staircase dimension mod the given prime is zero.
inline bool cone_is_origin(const std::vector<Polynomial<Rationals>>& system, std::uint64_t prime,
                           const Budget& budget = {}) {
  if (system.empty()) throw std::invalid_argument("cone_is_origin: empty system");
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() == 0)
      throw std::invalid_argument("cone_is_origin: system must be homogeneous of positive degree");
  }
  PrimeField fp(prime);
  auto sys_p = reduce_mod_p(system, fp);
  auto red = eliminate_linear(std::move(sys_p), system.front().nvars(), fp);
  if (!red.feasible) throw std::logic_error("cone_is_origin: homogeneous system inconsistent");
  if (red.sys.empty()) return red.nvars == 0;
  auto gb = buchberger(Ideal<PrimeField>::make(fp, red.nvars, MonomialOrder::grevlex(), red.sys),
                       budget);
  int dim = staircase_dimension(gb);
  if (dim == -1) throw std::logic_error("cone_is_origin: unit ideal from homogeneous input");
  return dim == 0;
}

// Elimination ideal: Groebner basis under a block order with the dropped
// variables in the leading block, intersected with the kept subring.  The
// returned ideal lives in |keep| variables (in the original relative order).
template <field_of F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<int>& keep,
                   const Budget& budget = {}) {
  std::vector<char> kept(ideal.nvars, 0);
  for (int v : keep) {
    if (v < 0 || v >= ideal.nvars) throw std::invalid_argument("eliminate: bad variable index");
    if (kept[v]) throw std::invalid_argument("eliminate: duplicate variable index");
    kept[v] = 1;
  }
  const int split = ideal.nvars - static_cast<int>(keep.size());
  std::vector<int> new_of_old(ideal.nvars, -1);
  int next_elim = 0, next_keep = split;
  for (int v = 0; v < ideal.nvars; ++v)
    new_of_old[v] = kept[v] ? next_keep++ : next_elim++;

  MonomialOrder elim_order = MonomialOrder::elimination(split);
  std::vector<Polynomial<F>> permuted;
  for (const auto& p : ideal.gens)
    permuted.push_back(detail::permute_vars(p, new_of_old, ideal.nvars, elim_order));
  auto gb = buchberger(Ideal<F>::make(ideal.field, ideal.nvars, elim_order, permuted), budget);

  std::vector<int> restrict_map(ideal.nvars, -1);
  for (int v = split; v < ideal.nvars; ++v) restrict_map[v] = v - split;
  std::vector<Polynomial<F>> out;
  for (const auto& p : gb.basis) {
    bool in_subring = true;
    for (const auto& t : p.terms()) {
      for (int v = 0; v < split && in_subring; ++v)
        if (t.mono.exp(v) > 0) in_subring = false;
      if (!in_subring) break;
    }
    if (in_subring)
      out.push_back(detail::permute_vars(p, restrict_map, static_cast<int>(keep.size()),
                                         MonomialOrder::grevlex()));
  }
  return Ideal<F>::make(ideal.field, static_cast<int>(keep.size()), MonomialOrder::grevlex(), out);
}

}  // namespace sosdec
