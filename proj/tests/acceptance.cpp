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
//
// Acceptance checks: one PASS/FAIL line per numbered criterion.  Exit code is
// nonzero when any line fails.  The long (4,1,4) degree cell only runs with
// --stretch; it has no completion guarantee and an exceeded budget is
// reported rather than waited out.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sosdec/formulas.hpp"
#include "sosdec/groebner.hpp"
#include "sosdec/parse.hpp"
#include "sosdec/rng.hpp"
#include "sosdec/sos2.hpp"
#include "sosdec/sosring.hpp"
#include "sosdec/tangent.hpp"

namespace {

using namespace sosdec;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPrimeA = PrimeField::kDefaultPrime;  // 2^31 - 1
constexpr std::uint64_t kPrimeB = 1073741789ull;              // below 2^30

int failures = 0;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string& detail, long ms) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << detail << " [" << ms
            << " ms]" << std::endl;
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int idx, Fn&& fn) {
  auto t0 = Clock::now();
  try {
    std::string detail;
    bool ok = fn(detail);
    report(idx, ok, detail, ms_since(t0));
  } catch (const std::exception& e) {
    report(idx, false, std::string("unexpected exception: ") + e.what(), ms_since(t0));
  }
}

// ---- criterion 1: orthogonal group degrees ---------------------------------

bool orthogonal_degrees(std::string& detail) {
  const long expected[] = {4, 16, 80, 768, 9536, 223232, 6867200, 393936896};
  bool ok = true;
  std::ostringstream vals;
  for (int k = 2; k <= 9; ++k) {
    mpz_class o = deg_orthogonal(k);
    mpz_class so = deg_special_orthogonal(k);
    if (o != expected[k - 2] || o != 2 * so) ok = false;
    vals << (k > 2 ? ", " : "") << o.get_str();
  }
  detail = "deg O(k), k = 2..9: " + vals.str() +
           "; each equals twice deg SO(k); the frequently quoted 9356 (k=6) and 233232 (k=7) "
           "are digit transpositions of the computed 9536 and 223232";
  return ok;
}

// ---- criterion 2: squares and two-square degrees ---------------------------

bool sos_degrees(std::string& detail) {
  bool ok = true;
  for (int nn = 3; nn <= 12; ++nn) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(nn - 1));
    if (deg_sos(nn, 1) != p || deg_sos(nn, 1) != secant_veronese2_degree(nn, 1)) ok = false;
    if (deg_sos(nn, 2) != secant_veronese2_degree(nn, 2)) ok = false;
  }
  if (deg_sos(6, 1) != 32 || deg_sos(6, 2) != 126) ok = false;
  detail = "deg SOS_1(N) = 2^(N-1) and deg SOS_2(N) matches the secant product for N = 3..12; "
           "N = 6 gives 32 and 126";
  return ok;
}

// ---- criterion 3: sliced degrees of decomposition varieties ----------------

struct DegreeCell {
  int n, d, k;
  long expected;
};

bool sliced_degrees(std::string& detail, bool stretch) {
  const std::vector<DegreeCell> cells = {
      {2, 1, 2, 4}, {3, 1, 2, 4}, {2, 2, 2, 4}, {3, 1, 3, 16}};
  bool ok = true;
  std::ostringstream parts;
  for (const auto& c : cells) {
    auto t0 = Clock::now();
    auto inst = random_instance(c.n, c.d, c.k, 1);
    auto sys = sos_variety_system(inst.f, inst.n, inst.d, inst.k);
    auto sc = stable_sliced_degree(sys, c.k * (c.k - 1) / 2, 1, kPrimeA, 2, kPrimeB);
    long cell_ms = ms_since(t0);
    bool cell_ok = sc.status == RunStatus::ok && sc.value == c.expected &&
                   mpz_class(sc.value) % deg_orthogonal(c.k) == 0 && cell_ms < 300000;
    if (!cell_ok) ok = false;
    parts << "(" << c.n << "," << c.d << "," << c.k << ")=" << (sc.status == RunStatus::ok
                                                                    ? std::to_string(sc.value)
                                                                    : to_string(sc.status));
    parts << (cell_ok ? " ok" : " BAD") << "; ";
  }
  std::string stretch_note;
  if (stretch) {
    Budget big;
    big.max_pairs = 5000000;
    big.max_basis = 200000;
    auto inst = random_instance(4, 1, 4, 1);
    auto sys = sos_variety_system(inst.f, inst.n, inst.d, inst.k);
    auto sc = stable_sliced_degree(sys, 6, 1, kPrimeA, 2, kPrimeB, big);
    if (sc.status == RunStatus::ok) {
      if (sc.value != 80) ok = false;
      stretch_note = "stretch (4,1,4)=" + std::to_string(sc.value) +
                     (sc.value == 80 ? " ok" : " BAD (expected 80)");
    } else if (sc.status == RunStatus::budget_exceeded) {
      stretch_note = "stretch (4,1,4) budget_exceeded, tolerated (expected 80 when complete)";
    } else {
      ok = false;
      stretch_note = "stretch (4,1,4) unstable";
    }
  } else {
    stretch_note = "stretch cell (4,1,4) skipped (pass --stretch)";
  }
  detail = "two (seed, prime) runs agree: " + parts.str() +
           "each completed degree is divisible by deg O(k); " + stretch_note;
  return ok;
}

// ---- criteria 4 and 5: tangent nullity and image dimension -----------------

// One pass over the grid 1 <= d <= 3, 1 <= k <= n <= 4 computes each jacobian
// rank once; nullity feeds criterion 4 and rank feeds criterion 5.
struct TangentGridResult {
  bool nullity_ok = true;
  bool image_ok = true;
  int instances = 0;
  long ms = 0;
};

TangentGridResult tangent_grid() {
  TangentGridResult res;
  auto t0 = Clock::now();
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= n; ++k) {
        const long nn = sym_dim(n, d);
        const int expected_nullity = k * (k - 1) / 2;
        for (int trial = 0; trial <= 20; ++trial) {
          auto inst = trial == 0 ? powers_instance(n, d, k)
                                 : random_instance(n, d, k,
                                                   static_cast<std::uint64_t>(trial));
          auto rn = rank_nullspace(jacobian_matrix(inst));
          const int nullity = static_cast<int>(k * nn) - rn.rank;
          if (nullity != expected_nullity) res.nullity_ok = false;
          if (rn.rank != k * nn - expected_nullity) res.image_ok = false;
          ++res.instances;
        }
      }
    }
  }
  res.ms = ms_since(t0);
  return res;
}

// ---- criterion 6: two-square orbit ------------------------------------------

bool two_square_orbit(std::string& detail) {
  GaussianRationals gq;
  SplitMix64 rng(20260814);
  auto random_lambda = [&]() {
    while (true) {
      mpq_class re(rng.range(-4, 4), 1 + rng.below(3));
      mpq_class im(rng.range(-4, 4), 1 + rng.below(3));
      re.canonicalize();
      im.canonicalize();
      if (!(re == 0 && im == 0)) return GaussianRational(re, im);
    }
  };
  auto random_form = [&](int nvars) {
    std::vector<GaussianPoly::Term> terms;
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(nvars, 0);
      for (int b = 0; b < 2; ++b) e[rng.below(nvars)] += 1;
      terms.push_back({Monomial(std::move(e)),
                       GaussianRational(mpq_class(rng.range(-5, 5)), mpq_class(rng.range(-5, 5)))});
    }
    return GaussianPoly::from_terms(gq, nvars, MonomialOrder::grevlex(), std::move(terms));
  };
  auto proportional = [&](const GaussianPoly& u, const GaussianPoly& v) {
    if (u.is_zero() || v.is_zero()) return true;
    if (!(u.leading_term().mono == v.leading_term().mono)) return false;
    return v == u.scaled(gq.div(v.leading_term().coeff, u.leading_term().coeff));
  };

  bool ok = true;
  for (int round = 0; round < 100; ++round) {
    int nvars = 2 + static_cast<int>(rng.below(2));
    GaussianPoly g(gq, nvars), h(gq, nvars);
    do {
      g = random_form(nvars);
      h = random_form(nvars);
    } while (proportional(g + h.scaled(gq.imaginary_unit()), g - h.scaled(gq.imaginary_unit())));
    auto lambda = random_lambda();
    auto comp = rng.below(2) == 0 ? Sos2Component::plus : Sos2Component::minus;
    auto [gp, hp] = orbit_element(g, h, lambda, comp);
    if (!(gp * gp + hp * hp == g * g + h * h)) ok = false;
    auto res = classify(g, h, gp, hp);
    if (res.status != ClassifyResult::Status::ok || res.component != comp ||
        !(res.lambda == lambda))
      ok = false;
  }
  for (int round = 0; round < 100; ++round) {
    auto l1 = random_lambda();
    auto l2 = random_lambda();
    auto lhs = transform_matrix(l1, Sos2Component::plus) * transform_matrix(l2, Sos2Component::plus);
    if (!(lhs == transform_matrix(gq.mul(l1, l2), Sos2Component::plus))) ok = false;
  }
  detail = "100 random (g, h, lambda, component): the orbit element preserves g^2 + h^2 exactly "
           "and classification returns the applied component and lambda; the plus-component "
           "group law holds for 100 parameter pairs";
  return ok;
}

// ---- criterion 7: gram fiber counts -----------------------------------------

bool gram_counts(std::string& detail) {
  bool ok = true;
  std::ostringstream parts;

  auto inst1 = random_instance(2, 2, 2, 1);
  auto sys1 = gram_fiber_system(inst1.f, inst1.n, inst1.d, inst1.k);
  auto sc1 = stable_solution_count(sys1, kPrimeA, kPrimeB);
  if (sc1.status != RunStatus::ok || sc1.value != 1) ok = false;
  parts << "(2,2,2) count="
        << (sc1.status == RunStatus::ok ? std::to_string(sc1.value) : to_string(sc1.status));

  auto inst2 = random_instance(2, 2, 3, 1);
  auto sys2 = gram_fiber_system(inst2.f, inst2.n, inst2.d, inst2.k);
  auto sc2 = stable_solution_count(sys2, kPrimeA, kPrimeB);
  if (sc2.status == RunStatus::ok) {
    if (sc2.value != 63) ok = false;
    parts << "; (2,2,3) count=" << sc2.value << (sc2.value == 63 ? "" : " BAD (expected 63)");
  } else if (sc2.status == RunStatus::budget_exceeded) {
    parts << "; (2,2,3) budget_exceeded, tolerated (expected 63 when complete)";
  } else {
    ok = false;
    parts << "; (2,2,3) unstable";
  }
  detail = "rank-bounded Gram matrices over a fixed random instance: " + parts.str();
  return ok;
}

// ---- criterion 8: cone intersection -----------------------------------------

bool cone_intersections(std::string& detail) {
  Rationals qq;
  bool ok = true;
  std::ostringstream parts;
  for (int k = 1; k <= 3; ++k) {
    auto sys = cone_c_intersection_system(qq, 2, 2, k);
    bool origin = cone_is_origin(sys, kPrimeA);
    bool expected = k <= 2;
    if (origin != expected) ok = false;
    parts << "k=" << k << (origin ? " origin-only" : " meets C nontrivially")
          << (origin == expected ? "" : " BAD") << (k < 3 ? "; " : "");
  }
  detail = "rank-<=k cone against the quadric relations at (n, d) = (2, 2): " + parts.str();
  return ok;
}

// ---- criterion 9: the dimension-gap lemma ------------------------------------

bool lemma_grid(std::string& detail) {
  bool strict = true, gap_pattern = true;
  int cells = 0;
  for (int d = 1; d <= 6; ++d)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        auto g = lemma_gap(n, d, k);
        ++cells;
        if (!g.holds) strict = false;
        if ((g.codim_c - g.dim_sik == 1) != (d == 1 && k == n)) gap_pattern = false;
      }
  detail = "dim S/I_k < codim C on all " + std::to_string(cells) +
           " cells with 1 <= d <= 6, 1 <= k <= n <= 6; the gap is exactly 1 precisely at "
           "d = 1, k = n";
  return strict && gap_pattern;
}

// ---- criterion 10: randomized property suites --------------------------------

bool property_suites(std::string& detail) {
  bool ok = true;
  Rationals qq;
  PrimeField fp(kPrimeA);
  SplitMix64 rng(424242);

  auto rand_qpoly = [&](int nvars, int maxdeg, int nterms) {
    std::vector<Polynomial<Rationals>::Term> terms;
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> e(nvars, 0);
      int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg) + 1));
      for (int b = 0; b < deg; ++b) e[rng.below(nvars)] += 1;
      long c = rng.range(-9, 9);
      terms.push_back({Monomial(std::move(e)), mpq_class(c == 0 ? 1 : c)});
    }
    return Polynomial<Rationals>::from_terms(qq, nvars, MonomialOrder::grevlex(),
                                             std::move(terms));
  };

  // ring axioms on random rational polynomials
  for (int round = 0; round < 50; ++round) {
    auto a = rand_qpoly(3, 3, 4);
    auto b = rand_qpoly(3, 3, 4);
    auto c = rand_qpoly(3, 3, 4);
    if (!(a * b == b * a) || !((a + b) * c == a * c + b * c) || !((a * b) * c == a * (b * c)))
      ok = false;
  }

  // Buchberger criterion on freshly computed bases mod p
  for (int round = 0; round < 5; ++round) {
    std::vector<Polynomial<PrimeField>> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(map_coefficients(rand_qpoly(3, 2, 4), fp,
                                      [&](const mpq_class& q) { return fp.from_rational(q); }));
    auto gb = buchberger(Ideal<PrimeField>::make(fp, 3, MonomialOrder::grevlex(), gens));
    if (!all_spairs_reduce(gb)) ok = false;
  }

  // Koszul syzygies live in the jacobian nullspace
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = random_instance(3, 1, 3, seed);
    auto jac = jacobian_matrix(inst);
    auto basis = sym_basis(inst.n, inst.d);
    for (const auto& tuple : koszul_basis(inst)) {
      std::vector<mpq_class> vec;
      for (const auto& g : tuple) {
        auto part = coefficient_vector(g, basis);
        vec.insert(vec.end(), part.begin(), part.end());
      }
      for (const auto& y : jac.multiply_vector(vec))
        if (y != 0) ok = false;
    }
  }

  // the orthogonal action through Cayley transforms fixes the form
  for (int round = 0; round < 25; ++round) {
    int n = 2 + static_cast<int>(rng.below(2));
    int k = 2 + static_cast<int>(rng.below(2));
    if (k > n) k = n;
    auto inst = random_instance(n, 1, k, 900 + static_cast<std::uint64_t>(round));
    Matrix<Rationals> s(qq, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        mpq_class e(rng.range(-6, 6));
        s.at(i, j) = e;
        s.at(j, i) = -e;
      }
    auto q = cayley_orthogonal(s);
    auto moved = make_instance(inst.n, inst.d, inst.k, q * inst.A);
    if (!(moved.f == inst.f)) ok = false;
  }

  // rank-nullity on random jacobians
  for (int round = 0; round < 10; ++round) {
    int n = 1 + static_cast<int>(rng.below(3));
    int d = 1 + static_cast<int>(rng.below(2));
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    auto inst = random_instance(n, d, k, 700 + static_cast<std::uint64_t>(round));
    auto rn = rank_nullspace(jacobian_matrix(inst));
    if (rn.rank + static_cast<int>(rn.nullspace.size()) != k * sym_dim(n, d)) ok = false;
  }

  // each Gram point contributes one orthogonal-group orbit to the degree
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto inst = random_instance(2, 1, 2, seed);
    auto gram = stable_solution_count(gram_fiber_system(inst.f, inst.n, inst.d, inst.k), kPrimeA,
                                      kPrimeB);
    auto var = sos_variety_system(inst.f, inst.n, inst.d, inst.k);
    auto deg = stable_sliced_degree(var, 1, 1, kPrimeA, 2, kPrimeB);
    if (gram.status != RunStatus::ok || deg.status != RunStatus::ok ||
        mpz_class(gram.value) * deg_orthogonal(inst.k) != deg.value)
      ok = false;
  }

  detail = "fixed-seed property suites: polynomial ring axioms (50 rounds), Buchberger S-pair "
           "criterion on computed bases (5 systems), Koszul syzygies inside the jacobian "
           "nullspace (5 instances), Cayley orthogonal action fixes the form (25 rounds), "
           "rank plus nullity equals the unknown count (10 rounds), Gram count times deg O(k) "
           "equals the sliced degree (3 instances)";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

  criterion(1, [](std::string& d) { return orthogonal_degrees(d); });
  criterion(2, [](std::string& d) { return sos_degrees(d); });
  criterion(3, [&](std::string& d) { return sliced_degrees(d, stretch); });

  {
    auto t0 = Clock::now();
    TangentGridResult grid;
    std::string note;
    bool grid_threw = false;
    try {
      grid = tangent_grid();
    } catch (const std::exception& e) {
      grid_threw = true;
      note = std::string("unexpected exception: ") + e.what();
    }
    const std::string shared =
        "grid 1 <= d <= 3, 1 <= k <= n <= 4, powers instance plus 20 random instances per "
        "cell (" +
        std::to_string(grid.instances) + " rational jacobians)";
    long ms = ms_since(t0);
    if (grid_threw) {
      report(4, false, note, ms);
      report(5, false, note, ms);
    } else {
      report(4, grid.nullity_ok && grid.ms < 60000,
             "tangent nullity equals C(k,2) over the " + shared, ms);
      report(5, grid.image_ok, "image dimension equals k C(n+d, n) - C(k,2) over the " + shared,
             ms);
    }
  }

  criterion(6, [](std::string& d) { return two_square_orbit(d); });
  criterion(7, [](std::string& d) { return gram_counts(d); });
  criterion(8, [](std::string& d) { return cone_intersections(d); });
  criterion(9, [](std::string& d) { return lemma_grid(d); });
  criterion(10, [](std::string& d) { return property_suites(d); });

  if (failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " acceptance criteria failed" << std::endl;
  return 1;
}
