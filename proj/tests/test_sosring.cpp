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

#include <catch2/catch_amalgamated.hpp>

#include "sosdec/field.hpp"
#include "sosdec/parse.hpp"
#include "sosdec/sosring.hpp"
#include "test_util.hpp"

namespace {

using namespace sosdec;
using sosdec_test::random_poly;

// Symmetric matrix of a quadratic form in N variables: off-diagonal
// coefficients split evenly across the two mirror entries.
Matrix<Rationals> to_sym_matrix(const Polynomial<Rationals>& q, int nn) {
  Rationals field;
  Matrix<Rationals> m(field, nn, nn);
  for (const auto& t : q.terms()) {
    int a = -1, b = -1;
    for (int v = 0; v < nn; ++v) {
      for (int s = 0; s < t.mono.exp(v); ++s) {
        if (a < 0)
          a = v;
        else
          b = v;
      }
    }
    REQUIRE(b >= 0);  // degree exactly 2
    if (a == b) {
      m.at(a, a) = t.coeff;
    } else {
      mpq_class half = t.coeff / 2;
      m.at(a, b) = half;
      m.at(b, a) = half;
    }
  }
  return m;
}

TEST_CASE("sym_dim golden values") {
  REQUIRE(sym_dim(1, 1) == 2);
  REQUIRE(sym_dim(2, 1) == 3);
  REQUIRE(sym_dim(2, 2) == 6);
  REQUIRE(sym_dim(3, 2) == 10);
  REQUIRE(sym_dim(3, 3) == 20);
  REQUIRE(sym_dim(4, 3) == 35);
  REQUIRE(sym_dim(4, 6) == 210);
}

TEST_CASE("sym_basis ordering and size") {
  auto b21 = sym_basis(2, 1);
  REQUIRE(b21.size() == 3);
  REQUIRE(b21[0] == Monomial({1, 0, 0}));
  REQUIRE(b21[1] == Monomial({0, 1, 0}));
  REQUIRE(b21[2] == Monomial({0, 0, 1}));

  auto b12 = sym_basis(1, 2);
  REQUIRE(b12.size() == 3);
  REQUIRE(b12[0] == Monomial({2, 0}));
  REQUIRE(b12[1] == Monomial({1, 1}));
  REQUIRE(b12[2] == Monomial({0, 2}));

  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      auto basis = sym_basis(n, d);
      REQUIRE(static_cast<long>(basis.size()) == sym_dim(n, d));
      // first is x0^d, last is xn^d, all degree d, strictly descending lex
      REQUIRE(basis.front() == Monomial::var(0, n + 1, d));
      REQUIRE(basis.back() == Monomial::var(n, n + 1, d));
      auto lex = MonomialOrder::lex();
      for (std::size_t t = 0; t < basis.size(); ++t) {
        REQUIRE(basis[t].degree() == d);
        if (t > 0) REQUIRE(lex.compare(basis[t - 1], basis[t]) > 0);
      }
    }
}

TEST_CASE("basis index inverts sym_basis") {
  auto basis = sym_basis(3, 2);
  BasisIndex idx(basis);
  for (std::size_t t = 0; t < basis.size(); ++t)
    REQUIRE(idx.at(basis[t]) == static_cast<int>(t));
  REQUIRE(idx.find(Monomial::var(0, 4, 3)) == -1);
}

TEST_CASE("expand_gram golden cases") {
  Rationals qq;
  auto basis = sym_basis(1, 1);

  auto id = Matrix<Rationals>::identity(qq, 2);
  REQUIRE(expand_gram(id, basis, MonomialOrder::grevlex()) ==
          parse_polynomial("x0^2 + x1^2", qq, 2));

  mpq_class half(1, 2);
  auto w = Matrix<Rationals>::from_rows(qq, {{0, half}, {half, 0}});
  REQUIRE(expand_gram(w, basis, MonomialOrder::grevlex()) == parse_polynomial("x0*x1", qq, 2));

  // asymmetric input is rejected
  auto bad = Matrix<Rationals>::from_rows(qq, {{0, 1}, {0, 0}});
  REQUIRE_THROWS_AS(expand_gram(bad, basis, MonomialOrder::grevlex()), std::invalid_argument);
}

TEST_CASE("gram matrix of an instance expands to f") {
  SplitMix64 seeds(70);
  for (int round = 0; round < 10; ++round) {
    int n = 1 + static_cast<int>(seeds.below(3));
    int d = 1 + static_cast<int>(seeds.below(2));
    int k = 1 + static_cast<int>(seeds.below(2));
    auto inst = random_instance(n, d, k, seeds.next());
    auto gram = gram_of_instance(inst);
    auto basis = sym_basis(inst.n, inst.d);
    REQUIRE(expand_gram(gram, basis, inst.f.order()) == inst.f);

    // oracle: the rows as polynomials, squared and summed
    auto rows = instance_rows(inst);
    Polynomial<Rationals> acc(inst.f.field(), inst.f.nvars(), inst.f.order());
    for (const auto& r : rows) acc = acc + r * r;
    REQUIRE(acc == inst.f);
  }
}

TEST_CASE("veronese substitution is a ring map") {
  SplitMix64 rng(71);
  Rationals qq;
  auto basis = sym_basis(2, 2);
  const int nn = static_cast<int>(basis.size());
  for (int round = 0; round < 100; ++round) {
    auto p = random_poly(qq, nn, 2, 4, rng);
    auto q = random_poly(qq, nn, 2, 4, rng);
    auto sub = [&](const Polynomial<Rationals>& f) {
      return veronese_substitute(f, basis, 3);
    };
    REQUIRE(sub(p * q) == sub(p) * sub(q));
    REQUIRE(sub(p + q) == sub(p) + sub(q));
  }
}

TEST_CASE("c_space structural basis") {
  Rationals qq;
  // d = 1: Sym^2(Sym^1) = Sym^2 exactly, no complement
  REQUIRE(c_space(qq, 1, 1).empty());
  REQUIRE(c_space(qq, 3, 1).empty());

  // binary quadrics: single relation w1^2 - w0 w2
  auto cs12 = c_space(qq, 1, 2);
  REQUIRE(cs12.size() == 1);
  REQUIRE(cs12[0] == parse_polynomial("x1^2 - x0*x2", qq, 3));

  // ternary quadrics: C(7,2) - C(6,4) = 21 - 15 = 6
  REQUIRE(c_space(qq, 2, 2).size() == 6);

  // dimension identity dim C + C(n+2d,2d) = C(N+1,2)
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      long nn = sym_dim(n, d);
      long expect = nn * (nn + 1) / 2 - sym_dim(n, 2 * d);
      REQUIRE(static_cast<long>(c_space(qq, n, d).size()) == expect);
    }
}

TEST_CASE("c_space elements vanish under the veronese substitution") {
  Rationals qq;
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto basis = sym_basis(n, d);
      for (const auto& rel : c_space(qq, n, d))
        REQUIRE(veronese_substitute(rel, basis, n + 1).is_zero());
    }
}

TEST_CASE("c_space elements expand to zero as gram perturbations") {
  Rationals qq;
  auto basis = sym_basis(2, 2);
  const int nn = static_cast<int>(basis.size());
  for (const auto& rel : c_space(qq, 2, 2)) {
    auto m = to_sym_matrix(rel, nn);
    REQUIRE(expand_gram(m, basis, MonomialOrder::grevlex()).is_zero());
  }
}

TEST_CASE("catalecticant golden cases") {
  Rationals qq;
  // pure square x0^2 at m=1: only the x0 row survives
  auto cat1 = catalecticant(parse_polynomial("x0^2", qq, 2), 1);
  REQUIRE(cat1 == Matrix<Rationals>::from_rows(qq, {{2, 0}, {0, 0}}));

  // x0^4 + x1^4 at m=2: diagonal 12s on the pure-power columns
  auto cat2 = catalecticant(parse_polynomial("x0^4 + x1^4", qq, 2), 2);
  REQUIRE(cat2 ==
          Matrix<Rationals>::from_rows(qq, {{12, 0, 0}, {0, 0, 0}, {0, 0, 12}}));
  REQUIRE(rank_nullspace(cat2).rank == 2);

  REQUIRE_THROWS_AS(catalecticant(parse_polynomial("x0^2", qq, 2), 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(catalecticant(parse_polynomial("x0^2 + x1", qq, 2), 1),
                    std::invalid_argument);
}

TEST_CASE("catalecticant of a squared quadric has full rank three") {
  // (x0^2 + x1^2)^2 is a single square, yet its middle catalecticant has rank
  // 3: the rank bound k holds for powers of linear forms, not for squares of
  // higher-degree forms.
  Rationals qq;
  auto f = parse_polynomial("x0^4 + 2*x0^2*x1^2 + x1^4", qq, 2);
  auto cat = catalecticant(f, 2);
  REQUIRE(cat == Matrix<Rationals>::from_rows(qq, {{12, 0, 4}, {0, 8, 0}, {4, 0, 12}}));
  REQUIRE(rank_nullspace(cat).rank == 3);
}

TEST_CASE("catalecticant rank is subadditive and one on powers of linear forms") {
  Rationals qq;
  SplitMix64 rng(72);
  for (int round = 0; round < 20; ++round) {
    // random linear form to the 4th power: rank 1 at every split
    long a = rng.range(-4, 4), b = rng.range(-4, 4);
    if (a == 0 && b == 0) a = 1;
    auto ell = Polynomial<Rationals>::from_terms(
        qq, 2, MonomialOrder::grevlex(),
        {{Monomial::var(0, 2), mpq_class(a)}, {Monomial::var(1, 2), mpq_class(b)}});
    auto f = ell * ell * ell * ell;
    for (int m = 1; m <= 3; ++m) REQUIRE(rank_nullspace(catalecticant(f, m)).rank == 1);
  }

  // subadditivity rank(cat(f+g)) <= rank(cat f) + rank(cat g)
  for (int round = 0; round < 20; ++round) {
    std::vector<Polynomial<Rationals>::Term> ft, gt;
    for (const auto& mono : sym_basis(2, 4)) {
      long cf = rng.range(-3, 3), cg = rng.range(-3, 3);
      if (cf != 0) ft.push_back({mono, mpq_class(cf)});
      if (cg != 0) gt.push_back({mono, mpq_class(cg)});
    }
    if (ft.empty() || gt.empty()) continue;
    auto ff = Polynomial<Rationals>::from_terms(qq, 3, MonomialOrder::grevlex(), std::move(ft));
    auto gg = Polynomial<Rationals>::from_terms(qq, 3, MonomialOrder::grevlex(), std::move(gt));
    auto sum = ff + gg;
    if (sum.is_zero()) continue;
    int rf = rank_nullspace(catalecticant(ff, 2)).rank;
    int rg = rank_nullspace(catalecticant(gg, 2)).rank;
    int rs = rank_nullspace(catalecticant(sum, 2)).rank;
    REQUIRE(rs <= rf + rg);
  }

  // sums of k fourth powers of linear forms have middle rank <= k
  for (int k = 1; k <= 3; ++k) {
    Polynomial<Rationals> acc(qq, 3);
    SplitMix64 r2(100 + k);
    for (int i = 0; i < k; ++i) {
      auto ell = Polynomial<Rationals>::from_terms(
          qq, 3, MonomialOrder::grevlex(),
          {{Monomial::var(0, 3), mpq_class(r2.range(1, 4))},
           {Monomial::var(1, 3), mpq_class(r2.range(-4, 4))},
           {Monomial::var(2, 3), mpq_class(r2.range(-4, 4))}});
      acc = acc + ell * ell * ell * ell;
    }
    REQUIRE(rank_nullspace(catalecticant(acc, 2)).rank <= k);
  }
}

TEST_CASE("random_instance is deterministic and rank k") {
  auto a = random_instance(3, 2, 2, 99);
  auto b = random_instance(3, 2, 2, 99);
  REQUIRE(a.A == b.A);
  REQUIRE(a.f == b.f);
  REQUIRE(rank_nullspace(a.A).rank == 2);
  REQUIRE(a.f.degree() == 4);
  REQUIRE(a.f.is_homogeneous());

  auto c = random_instance(3, 2, 2, 100);
  REQUIRE(!(a.A == c.A));

  REQUIRE_THROWS_AS(random_instance(1, 1, 3, 1), std::invalid_argument);
}

TEST_CASE("powers instance squares the first k variables") {
  auto inst = powers_instance(3, 2, 2);
  Rationals qq;
  REQUIRE(inst.f == parse_polynomial("x1^4 + x2^4", qq, 4));
  REQUIRE_THROWS_AS(powers_instance(2, 1, 3), std::invalid_argument);
}

TEST_CASE("sos_variety_system golden case and plug-in checks") {
  Rationals qq;
  // n=1, d=1, k=1, f = x0^2: unknowns a0, a1
  auto f = parse_polynomial("x0^2", qq, 2);
  auto sys = sos_variety_system(f, 1, 1, 1);
  REQUIRE(sys.size() == 3);
  REQUIRE(sys[0] == parse_polynomial("x0^2 - 1", qq, 2));  // a0^2 - 1
  REQUIRE(sys[1] == parse_polynomial("2*x0*x1", qq, 2));   // 2 a0 a1
  REQUIRE(sys[2] == parse_polynomial("x1^2", qq, 2));      // a1^2

  // equation count is C(n+2d, 2d) on a small grid, and the generating
  // instance is always a solution
  SplitMix64 seeds(73);
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 2; ++d)
      for (int k = 1; k <= n; ++k) {
        auto inst = random_instance(n, d, k, seeds.next());
        auto system = sos_variety_system(inst.f, n, d, k);
        REQUIRE(static_cast<long>(system.size()) == sym_dim(n, 2 * d));
        std::vector<mpq_class> point;
        for (int i = 0; i < inst.A.rows(); ++i)
          for (int c = 0; c < inst.A.cols(); ++c) point.push_back(inst.A.at(i, c));
        for (const auto& eq : system) REQUIRE(qq.is_zero(eq.evaluate(point)));
      }
}

TEST_CASE("gram_fiber_system pins the cross form to an infeasible fiber") {
  Rationals qq;
  // f = x0 x1 with k = 1: the linear part forces W = [[0,1/2],[1/2,0]], whose
  // single 2x2 minor is -1/4, so no rank-1 Gram matrix exists.
  auto f = parse_polynomial("x0*x1", qq, 2);
  auto sys = gram_fiber_system(f, 1, 1, 1);
  // unknowns w00, w01, w11
  REQUIRE(sys.size() == 4);
  REQUIRE(sys[0] == parse_polynomial("x0", qq, 3));
  REQUIRE(sys[1] == parse_polynomial("2*x1 - 1", qq, 3));
  REQUIRE(sys[2] == parse_polynomial("x2", qq, 3));
  REQUIRE(sys[3] == parse_polynomial("x0*x2 - x1^2", qq, 3));
}

TEST_CASE("gram_fiber_system with k = N has no minors") {
  Rationals qq;
  auto inst = random_instance(1, 1, 2, 5);
  auto sys = gram_fiber_system(inst.f, 1, 1, 2);
  REQUIRE(static_cast<long>(sys.size()) == sym_dim(1, 2));
  for (const auto& eq : sys) REQUIRE(eq.degree() <= 1);
}

TEST_CASE("the gram matrix of an instance satisfies its fiber system") {
  Rationals qq;
  SplitMix64 seeds(74);
  for (int round = 0; round < 8; ++round) {
    int n = 1 + static_cast<int>(seeds.below(2));
    int d = 1 + static_cast<int>(seeds.below(2));
    int k = 1 + static_cast<int>(seeds.below(2));
    long nn = sym_dim(n, d);
    if (k > nn) continue;
    auto inst = random_instance(n, d, k, seeds.next());
    auto sys = gram_fiber_system(inst.f, n, d, k);
    auto gram = gram_of_instance(inst);
    std::vector<mpq_class> point;
    for (int a = 0; a < gram.rows(); ++a)
      for (int b = a; b < gram.cols(); ++b) point.push_back(gram.at(a, b));
    for (const auto& eq : sys) REQUIRE(qq.is_zero(eq.evaluate(point)));
  }
}

TEST_CASE("cone and C intersection system shape") {
  Rationals qq;
  auto sys = cone_c_intersection_system(qq, 2, 2, 1);
  // 15 linear equations, then C(6,2)^2 deduplicated 2x2 minors
  long linear = 0, quadratic = 0;
  for (const auto& eq : sys) (eq.degree() <= 1 ? linear : quadratic) += 1;
  REQUIRE(linear == sym_dim(2, 4));
  REQUIRE(quadratic == 15 * 16 / 2);
  for (const auto& eq : sys) REQUIRE(eq.is_homogeneous());
}

TEST_CASE("orthogonal action preserves the instance polynomial") {
  Rationals qq;
  SplitMix64 rng(75);
  for (int round = 0; round < 25; ++round) {
    int n = 1 + static_cast<int>(rng.below(3));
    int d = 1 + static_cast<int>(rng.below(2));
    int k = 2 + static_cast<int>(rng.below(2));
    if (k > sym_dim(n, d)) continue;
    auto inst = random_instance(n, d, k, rng.next());

    Matrix<Rationals> s(qq, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        s.at(i, j) = mpq_class(rng.range(-4, 4));
        s.at(j, i) = -s.at(i, j);
      }
    auto q = cayley_orthogonal(s, rng.below(2) == 1);
    auto rotated = make_instance(inst.n, inst.d, inst.k, q * inst.A);
    REQUIRE(rotated.f == inst.f);
  }
}

}  // namespace
