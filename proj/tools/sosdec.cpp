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

// Command-line front end. Every randomized run embeds its seeds and primes,
// and identical invocations produce byte-identical output; wall-clock timing
// is printed only when --timings is given.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sosdec/formulas.hpp"
#include "sosdec/groebner.hpp"
#include "sosdec/parse.hpp"
#include "sosdec/report.hpp"
#include "sosdec/sos2.hpp"
#include "sosdec/sosring.hpp"
#include "sosdec/tangent.hpp"

namespace {

using namespace sosdec;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
  std::uint64_t seed = 1;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t prime2 = 0;  // 0: derive a 30-bit prime from the seed
  std::string format = "text";
  std::uint64_t budget_pairs = Budget{}.max_pairs;
  int budget_degree = Budget{}.max_degree;
  bool timings = false;
};

void add_format_flag(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--format", o->format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

void add_common_flags(CLI::App* cmd, CommonOpts* o, bool with_primes = true) {
  cmd->add_option("--seed", o->seed, "PRNG seed (splitmix64 stream)")->capture_default_str();
  if (with_primes) {
    cmd->add_option("--prime", o->prime, "Modulus for the first run")->capture_default_str();
    cmd->add_option("--prime2", o->prime2,
                    "Modulus for the cross-check run (0: derive a 30-bit prime from the seed)")
        ->capture_default_str();
  }
  cmd->add_option("--budget-pairs", o->budget_pairs, "Groebner S-pair budget")
      ->envname("SOSDEC_BUDGET_PAIRS")
      ->capture_default_str();
  cmd->add_option("--budget-degree", o->budget_degree, "Groebner degree budget")
      ->envname("SOSDEC_BUDGET_DEGREE")
      ->capture_default_str();
  cmd->add_flag("--timings", o->timings, "Append wall-clock time to the report");
  add_format_flag(cmd, o);
}

Budget budget_of(const CommonOpts& o) {
  Budget b;
  b.max_pairs = o.budget_pairs;
  b.max_degree = o.budget_degree;
  return b;
}

std::uint64_t second_prime(const CommonOpts& o) {
  if (o.prime2 != 0) return o.prime2;
  SplitMix64 rng(o.seed ^ 0x7072696d653262ull);
  std::uint64_t p = random_prime_30bit(rng);
  while (p == o.prime) p = random_prime_30bit(rng);
  return p;
}

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void emit_timing(const CommonOpts& o, Clock::time_point start) {
  if (o.timings && o.format != "json") std::cout << "wall_time_ms=" << elapsed_ms(start) << "\n";
}

// ---------------------------------------------------------------------------
// formulas

int run_formulas(int kmax, int nmax, const CommonOpts& o) {
  struct ORow {
    int k;
    mpz_class deg_o, deg_so;
  };
  struct SRow {
    int nn;
    mpz_class sos1, secant1, sos2, secant2;
  };
  std::vector<ORow> orows;
  for (int k = 2; k <= kmax; ++k) orows.push_back({k, deg_orthogonal(k), deg_special_orthogonal(k)});
  std::vector<SRow> srows;
  for (int nn = 3; nn <= nmax; ++nn)
    srows.push_back({nn, deg_sos(nn, 1), secant_veronese2_degree(nn, 1), deg_sos(nn, 2),
                     secant_veronese2_degree(nn, 2)});
  std::vector<std::string> notes;
  if (kmax >= 6)
    notes.push_back(
        "deg O(6) = 9536 (= 2 * 4768); the often-quoted 9356 transposes two digits");
  if (kmax >= 7)
    notes.push_back(
        "deg O(7) = 223232 (= 2 * 111616); the often-quoted 233232 transposes two digits");

  if (o.format == "csv") {
    std::cout << "k,deg_o,deg_so\n";
    for (const auto& r : orows)
      std::cout << r.k << "," << r.deg_o.get_str() << "," << r.deg_so.get_str() << "\n";
    return 0;
  }
  if (o.format == "json") {
    json j;
    j["o_table"] = json::array();
    for (const auto& r : orows)
      j["o_table"].push_back(
          {{"k", r.k}, {"deg_o", r.deg_o.get_str()}, {"deg_so", r.deg_so.get_str()}});
    j["sos_table"] = json::array();
    for (const auto& r : srows)
      j["sos_table"].push_back({{"N", r.nn},
                                {"deg_sos1", r.sos1.get_str()},
                                {"secant_j1", r.secant1.get_str()},
                                {"deg_sos2", r.sos2.get_str()},
                                {"secant_j2", r.secant2.get_str()}});
    j["notes"] = notes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "orthogonal group degrees (k = 2.." << kmax << ")\n";
  std::cout << "  k  deg_o  deg_so\n";
  for (const auto& r : orows)
    std::cout << "  " << r.k << "  " << r.deg_o.get_str() << "  " << r.deg_so.get_str() << "\n";
  for (const auto& s : notes) std::cout << "note: " << s << "\n";
  std::cout << "degrees of SOS_1 and SOS_2 against the secant formula (N = 3.." << nmax << ")\n";
  std::cout << "  N  deg_sos1  secant_j1  deg_sos2  secant_j2\n";
  for (const auto& r : srows)
    std::cout << "  " << r.nn << "  " << r.sos1.get_str() << "  " << r.secant1.get_str() << "  "
              << r.sos2.get_str() << "  " << r.secant2.get_str() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// degree

int report_stable_count(const char* kind, int n, int d, int k, const CommonOpts& o,
                        const StableCount& r, int slice_dim, Clock::time_point start) {
  const bool ok = r.status == RunStatus::ok;
  if (o.format == "json") {
    json j = degree_report_json(n, d, k, o.seed, r, slice_dim, o.timings ? elapsed_ms(start) : -1);
    if (slice_dim < 0) j.erase("slice_dim");
    j["kind"] = kind;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  if (o.format == "csv") {
    std::cout << "n,d,k,seed,prime1,prime2," << (slice_dim >= 0 ? "slice_dim," : "")
              << "count,status\n";
    std::cout << n << "," << d << "," << k << "," << o.seed << "," << r.primes[0] << ","
              << r.primes[1] << ",";
    if (slice_dim >= 0) std::cout << slice_dim << ",";
    if (ok)
      std::cout << r.value;
    std::cout << "," << to_string(r.status) << "\n";
    emit_timing(o, start);
    return ok ? 0 : 1;
  }
  std::cout << kind << " report\n";
  std::cout << "  n=" << n << " d=" << d << " k=" << k << " seed=" << o.seed << "\n";
  std::cout << "  primes: " << r.primes[0] << ", " << r.primes[1] << "\n";
  if (slice_dim >= 0) std::cout << "  slice_dim=" << slice_dim << "\n";
  if (ok)
    std::cout << "  count=" << r.value << "\n";
  else if (r.status == RunStatus::unstable)
    std::cout << "  counts disagree: " << r.counts[0] << " vs " << r.counts[1] << "\n";
  std::cout << "  status=" << to_string(r.status) << "\n";
  emit_timing(o, start);
  return ok ? 0 : 1;
}

int run_degree(int n, int d, int k, const CommonOpts& o) {
  auto start = Clock::now();
  if (k > n)
    std::cerr << "warning: k > n; the generic fiber-dimension theory assumes k <= n\n";
  auto inst = random_instance(n, d, k, o.seed);
  auto sys = sos_variety_system(inst.f, n, d, k);
  const int slice_dim = k * (k - 1) / 2;
  StableCount r;
  try {
    r = stable_sliced_degree(sys, slice_dim, o.seed, o.prime, o.seed + 1, second_prime(o),
                             budget_of(o));
  } catch (const SliceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return report_stable_count("degree", n, d, k, o, r, slice_dim, start);
}

// ---------------------------------------------------------------------------
// gram-count

int run_gram_count(int n, int d, int k, const CommonOpts& o) {
  auto start = Clock::now();
  const long nn = sym_dim(n, d);
  if (k >= nn) {
    std::cerr << "error: k = C(n+d,d) leaves no minors; the Gram fiber is an affine subspace "
                 "of positive dimension, not a finite set\n";
    return 2;
  }
  auto inst = random_instance(n, d, k, o.seed);
  auto sys = gram_fiber_system(inst.f, n, d, k);
  StableCount r;
  try {
    r = stable_solution_count(sys, o.prime, second_prime(o), budget_of(o));
  } catch (const PositiveDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return report_stable_count("gram-count", n, d, k, o, r, -1, start);
}

// ---------------------------------------------------------------------------
// tangent

int run_tangent(int n, int d, int k, int trials, int jobs, const CommonOpts& o) {
  auto start = Clock::now();
  if (k > n)
    std::cerr << "warning: k > n; nullity C(k,2) is only the expected generic value for k <= n\n";
  std::vector<TangentReport> reports(trials);
  std::vector<std::uint64_t> seeds(trials);
  for (int t = 0; t < trials; ++t) seeds[t] = o.seed + static_cast<std::uint64_t>(t);

  if (jobs < 1) jobs = 1;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int t = next.fetch_add(1);
      if (t >= trials) return;
      reports[t] = tangent_report(random_instance(n, d, k, seeds[t]));
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs && i < trials; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int generic_count = 0;
  for (const auto& r : reports) generic_count += r.generic ? 1 : 0;
  const bool pass = generic_count == trials;

  if (o.format == "json") {
    json j;
    j["trials"] = json::array();
    for (int t = 0; t < trials; ++t)
      j["trials"].push_back(tangent_report_json(n, d, k, seeds[t], reports[t].nullity,
                                                reports[t].expected, reports[t].generic));
    j["summary"] = {{"generic", generic_count}, {"total", trials}, {"pass", pass}};
    if (o.timings) j["wall_time_ms"] = elapsed_ms(start);
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }
  if (o.format == "csv") {
    std::cout << "trial,n,d,k,seed,nullity,expected,generic\n";
    for (int t = 0; t < trials; ++t)
      std::cout << t << "," << n << "," << d << "," << k << "," << seeds[t] << ","
                << reports[t].nullity << "," << reports[t].expected << ","
                << (reports[t].generic ? "true" : "false") << "\n";
    emit_timing(o, start);
    return pass ? 0 : 1;
  }
  std::cout << "tangent report\n";
  std::cout << "  n=" << n << " d=" << d << " k=" << k << " seed=" << o.seed
            << " trials=" << trials << "\n";
  for (int t = 0; t < trials; ++t) {
    std::cout << "  trial " << t << ": nullity=" << reports[t].nullity
              << " expected=" << reports[t].expected
              << " generic=" << (reports[t].generic ? "yes" : "no") << "\n";
    if (!reports[t].generic && !reports[t].extra_vector.empty())
      std::cout << "    extra nullspace direction outside the Koszul span recorded\n";
  }
  std::cout << "  summary: " << (pass ? "pass" : "FAIL") << " (" << generic_count << "/" << trials
            << " generic)\n";
  emit_timing(o, start);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// intersect

int run_intersect(int n, int d, int k, const CommonOpts& o) {
  auto start = Clock::now();
  const long nn = sym_dim(n, d);
  if (nn > 8)
    std::cerr << "warning: C(n+d,d) = " << nn
              << " > 8; the minor system grows combinatorially and may exceed the budget\n";
  Rationals field;
  auto sys = cone_c_intersection_system(field, n, d, k);
  bool origin = false;
  RunStatus status = RunStatus::ok;
  try {
    origin = cone_is_origin(sys, o.prime, budget_of(o));
  } catch (const BudgetExceeded&) {
    status = RunStatus::budget_exceeded;
  }
  const bool ok = status == RunStatus::ok;
  if (o.format == "json") {
    json j;
    j["n"] = n;
    j["d"] = d;
    j["k"] = k;
    j["prime"] = o.prime;
    j["empty_intersection"] = ok ? json(origin) : json(nullptr);
    j["status"] = to_string(status);
    if (o.timings) j["wall_time_ms"] = elapsed_ms(start);
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  if (o.format == "csv") {
    std::cout << "n,d,k,prime,empty,status\n";
    std::cout << n << "," << d << "," << k << "," << o.prime << ","
              << (ok ? (origin ? "true" : "false") : "") << "," << to_string(status) << "\n";
    emit_timing(o, start);
    return ok ? 0 : 1;
  }
  std::cout << "intersect report\n";
  std::cout << "  n=" << n << " d=" << d << " k=" << k << " prime=" << o.prime << "\n";
  if (ok)
    std::cout << "  rank<=" << k << " cone meets C "
              << (origin ? "only at the origin (empty projective intersection)"
                         : "in a positive-dimensional cone (nonempty intersection)")
              << "\n";
  std::cout << "  status=" << to_string(status) << "\n";
  emit_timing(o, start);
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// lemma-grid

int run_lemma_grid(int nmax, int dmax, const CommonOpts& o) {
  struct Row {
    int n, d, k;
    LemmaGap gap;
    mpz_class diff;
    bool gap_as_predicted;
  };
  std::vector<Row> rows;
  bool all_hold = true, gap_pattern = true;
  for (int d = 1; d <= dmax; ++d)
    for (int n = 1; n <= nmax; ++n)
      for (int k = 1; k <= n; ++k) {
        LemmaGap g = lemma_gap(n, d, k);
        mpz_class diff = g.codim_c - g.dim_sik;
        const bool predicted = (diff == 1) == (d == 1 && k == n);
        all_hold = all_hold && g.holds;
        gap_pattern = gap_pattern && predicted;
        rows.push_back({n, d, k, g, diff, predicted});
      }
  const bool pass = all_hold && gap_pattern;

  if (o.format == "json") {
    json j;
    j["cells"] = json::array();
    for (const auto& r : rows)
      j["cells"].push_back({{"n", r.n},
                            {"d", r.d},
                            {"k", r.k},
                            {"dim_sik", r.gap.dim_sik.get_str()},
                            {"codim_c", r.gap.codim_c.get_str()},
                            {"gap", r.diff.get_str()},
                            {"holds", r.gap.holds}});
    j["summary"] = {{"cells", rows.size()},
                    {"all_hold", all_hold},
                    {"gap_one_exactly_at_d1_k_eq_n", gap_pattern},
                    {"pass", pass}};
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }
  if (o.format == "csv") {
    std::cout << "n,d,k,dim_sik,codim_c,gap,holds\n";
    for (const auto& r : rows)
      std::cout << r.n << "," << r.d << "," << r.k << "," << r.gap.dim_sik.get_str() << ","
                << r.gap.codim_c.get_str() << "," << r.diff.get_str() << ","
                << (r.gap.holds ? "true" : "false") << "\n";
    return pass ? 0 : 1;
  }
  std::cout << "lemma grid: 1 <= d <= " << dmax << ", 1 <= k <= n <= " << nmax << "\n";
  std::cout << "  cells checked: " << rows.size() << "\n";
  std::cout << "  strict inequality holds everywhere: " << (all_hold ? "yes" : "NO") << "\n";
  std::cout << "  gap = 1 exactly at d=1, k=n: " << (gap_pattern ? "yes" : "NO") << "\n";
  for (const auto& r : rows)
    if (!r.gap.holds || !r.gap_as_predicted)
      std::cout << "  violation at n=" << r.n << " d=" << r.d << " k=" << r.k
                << ": dim=" << r.gap.dim_sik.get_str() << " codim=" << r.gap.codim_c.get_str()
                << "\n";
  std::cout << "  status: " << (pass ? "ok" : "violated") << "\n";
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// crosscheck

int run_crosscheck(bool stretch, const CommonOpts& o) {
  auto start = Clock::now();
  struct Cell {
    int n, d, k;
  };
  std::vector<Cell> cells{{2, 1, 2}, {3, 1, 3}};
  if (stretch) cells.push_back({4, 1, 4});

  struct Row {
    Cell c;
    mpz_class formula;
    StableCount r;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (const Cell& c : cells) {
    auto inst = random_instance(c.n, c.d, c.k, o.seed);
    auto sys = sos_variety_system(inst.f, c.n, c.d, c.k);
    const int slice_dim = c.k * (c.k - 1) / 2;
    StableCount r;
    try {
      r = stable_sliced_degree(sys, slice_dim, o.seed, o.prime, o.seed + 1, second_prime(o),
                               budget_of(o));
    } catch (const SliceFailure&) {
      r.status = RunStatus::unstable;
    }
    mpz_class formula = deg_orthogonal(c.k);
    const bool match = r.status == RunStatus::ok && mpz_class(r.value) == formula;
    all_ok = all_ok && match;
    rows.push_back({c, std::move(formula), r});
  }

  if (o.format == "json") {
    json j;
    j["rows"] = json::array();
    for (const auto& row : rows)
      j["rows"].push_back({{"n", row.c.n},
                           {"d", row.c.d},
                           {"k", row.c.k},
                           {"formula_deg_o", row.formula.get_str()},
                           {"computed", row.r.status == RunStatus::ok ? json(row.r.value)
                                                                      : json(nullptr)},
                           {"status", to_string(row.r.status)}});
    j["seed"] = o.seed;
    j["pass"] = all_ok;
    if (o.timings) j["wall_time_ms"] = elapsed_ms(start);
    std::cout << j.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }
  if (o.format == "csv") {
    std::cout << "k,n,d,formula_deg_o,computed,status\n";
    for (const auto& row : rows) {
      std::cout << row.c.k << "," << row.c.n << "," << row.c.d << "," << row.formula.get_str()
                << ",";
      if (row.r.status == RunStatus::ok) std::cout << row.r.value;
      std::cout << "," << to_string(row.r.status) << "\n";
    }
    emit_timing(o, start);
    return all_ok ? 0 : 1;
  }
  std::cout << "symbolic degree of SOS_k(f) against deg O(k), seed=" << o.seed << "\n";
  for (const auto& row : rows) {
    std::cout << "  (n,d,k)=(" << row.c.n << "," << row.c.d << "," << row.c.k
              << "): formula=" << row.formula.get_str() << " computed=";
    if (row.r.status == RunStatus::ok)
      std::cout << row.r.value;
    else
      std::cout << "-";
    std::cout << " status=" << to_string(row.r.status) << "\n";
  }
  std::cout << "  pass: " << (all_ok ? "yes" : "no") << "\n";
  emit_timing(o, start);
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sos2

GaussianRational parse_lambda(const std::string& text) {
  GaussianRationals gq;
  auto p = parse_polynomial(text, gq, 1);
  if (p.is_zero() || p.degree() > 0)
    throw std::invalid_argument("lambda must be a nonzero scalar");
  return p.coefficient_of(Monomial::one(1));
}

int run_sos2(int n, const std::string& g_text, const std::string& h_text,
             const std::string& lambda_text, const std::string& component,
             const std::string& gp_text, const std::string& hp_text) {
  if (n < 2) {
    std::cerr << "error: n >= 2 required; for binary forms (n = 1) the quadratic factors into "
                 "linear forms and the two-component orbit structure breaks down\n";
    return 2;
  }
  GaussianRationals gq;
  const int nv = n + 1;
  auto g = parse_polynomial(g_text, gq, nv);
  auto h = parse_polynomial(h_text, gq, nv);

  if (!gp_text.empty() || !hp_text.empty()) {
    auto gp = parse_polynomial(gp_text, gq, nv);
    auto hp = parse_polynomial(hp_text, gq, nv);
    auto res = classify(g, h, gp, hp);
    switch (res.status) {
      case ClassifyResult::Status::ok:
        std::cout << "classified: component=" << to_string(res.component)
                  << " lambda=" << gq.to_string(res.lambda) << "\n";
        return 0;
      case ClassifyResult::Status::degenerate:
        std::cout << "degenerate: a factor g+ih or g-ih vanishes; no unique lambda\n";
        return 0;
      case ClassifyResult::Status::not_in_orbit:
        std::cout << "not in orbit: the pairs have different sums of squares or no scalar "
                     "relates their factors\n";
        return 0;
    }
    return 0;
  }

  GaussianRational lambda = parse_lambda(lambda_text);
  Sos2Component comp =
      component == "minus" ? Sos2Component::minus : Sos2Component::plus;
  auto [gp, hp] = orbit_element(g, h, lambda, comp);
  const bool same = g * g + h * h == gp * gp + hp * hp;
  std::cout << "g' = " << gp.to_string() << "\n";
  std::cout << "h' = " << hp.to_string() << "\n";
  std::cout << "verified: g'^2 + h'^2 == g^2 + h^2: " << (same ? "yes" : "NO") << "\n";
  return same ? 0 : 1;
}

// ---------------------------------------------------------------------------
// instance

int run_instance(int n, int d, int k, std::uint64_t seed, long bound, const std::string& in_path,
                 const std::string& out_path) {
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "error: cannot open " << in_path << "\n";
      return 2;
    }
    json j = json::parse(in);
    auto inst = instance_from_json(j);
    std::cout << "instance ok: n=" << inst.n << " d=" << inst.d << " k=" << inst.k
              << " seed=" << inst.seed << "\n";
    std::cout << "f = " << inst.f.to_string() << "\n";
    return 0;
  }
  auto inst = random_instance(n, d, k, seed, bound);
  json j = instance_to_json(inst);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on varieties of sum-of-squares decompositions"};
  app.require_subcommand(1);

  // formulas
  CommonOpts fo;
  int f_kmax = 9, f_nmax = 12;
  auto* cmd_formulas = app.add_subcommand("formulas", "Closed-form degree tables");
  cmd_formulas->add_option("--kmax", f_kmax, "Largest k for deg O(k)")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  cmd_formulas->add_option("--Nmax", f_nmax, "Largest N for the SOS_1/SOS_2 table")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();
  add_format_flag(cmd_formulas, &fo);

  // degree
  CommonOpts dg;
  int dg_n = 2, dg_d = 1, dg_k = 2;
  auto* cmd_degree =
      app.add_subcommand("degree", "Sliced degree of SOS_k(f) for a random instance");
  cmd_degree->add_option("--n", dg_n)->capture_default_str();
  cmd_degree->add_option("--d", dg_d)->capture_default_str();
  cmd_degree->add_option("--k", dg_k)->capture_default_str();
  add_common_flags(cmd_degree, &dg);

  // gram-count
  CommonOpts gc;
  int gc_n = 2, gc_d = 2, gc_k = 2;
  auto* cmd_gram = app.add_subcommand(
      "gram-count", "Number of rank-<=k Gram matrices over a random rank-k form");
  cmd_gram->add_option("--n", gc_n)->capture_default_str();
  cmd_gram->add_option("--d", gc_d)->capture_default_str();
  cmd_gram->add_option("--k", gc_k)->capture_default_str();
  add_common_flags(cmd_gram, &gc);

  // tangent
  CommonOpts tg;
  int tg_n = 3, tg_d = 2, tg_k = 2, tg_trials = 20, tg_jobs = 1;
  auto* cmd_tangent =
      app.add_subcommand("tangent", "Jacobian nullity of random instances (exact rank)");
  cmd_tangent->add_option("--n", tg_n)->capture_default_str();
  cmd_tangent->add_option("--d", tg_d)->capture_default_str();
  cmd_tangent->add_option("--k", tg_k)->capture_default_str();
  cmd_tangent->add_option("--trials", tg_trials)->check(CLI::Range(1, 10000))
      ->capture_default_str();
  cmd_tangent->add_option("--jobs", tg_jobs, "Worker threads (output is order-independent)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd_tangent->add_option("--seed", tg.seed)->capture_default_str();
  add_format_flag(cmd_tangent, &tg);
  cmd_tangent->add_flag("--timings", tg.timings, "Append wall-clock time to the report");

  // intersect
  CommonOpts is;
  int is_n = 2, is_d = 2, is_k = 1;
  auto* cmd_intersect =
      app.add_subcommand("intersect", "Does the rank-<=k cone meet C only at the origin?");
  cmd_intersect->add_option("--n", is_n)->capture_default_str();
  cmd_intersect->add_option("--d", is_d)->capture_default_str();
  cmd_intersect->add_option("--k", is_k)->capture_default_str();
  add_common_flags(cmd_intersect, &is);

  // lemma-grid
  CommonOpts lg;
  int lg_nmax = 6, lg_dmax = 6;
  auto* cmd_lemma = app.add_subcommand("lemma-grid", "dim S/I_k < codim C over a full grid");
  cmd_lemma->add_option("--nmax", lg_nmax)->check(CLI::Range(1, 32))->capture_default_str();
  cmd_lemma->add_option("--dmax", lg_dmax)->check(CLI::Range(1, 32))->capture_default_str();
  add_format_flag(cmd_lemma, &lg);

  // crosscheck
  CommonOpts cc;
  bool cc_stretch = false;
  auto* cmd_crosscheck =
      app.add_subcommand("crosscheck", "Chain degree runs for k = 2,3 against deg O(k)");
  cmd_crosscheck->add_flag("--stretch", cc_stretch, "Also run k = 4 (no time guarantee)");
  add_common_flags(cmd_crosscheck, &cc);

  // sos2
  int s2_n = 2;
  std::string s2_g, s2_h, s2_lambda = "1", s2_comp = "plus", s2_gp, s2_hp;
  auto* cmd_sos2 = app.add_subcommand(
      "sos2", "Two-square orbit: transform (g,h) by lambda, or classify a pair of pairs");
  cmd_sos2->set_help_flag("--help", "Print this help message and exit");
  cmd_sos2->add_option("--n", s2_n, "Number of variables minus one (n >= 2)")
      ->capture_default_str();
  cmd_sos2->add_option("--g", s2_g, "First square root, text grammar with i")->required();
  cmd_sos2->add_option("--h", s2_h, "Second square root")->required();
  cmd_sos2->add_option("--lambda", s2_lambda, "Nonzero Gaussian-rational parameter")
      ->capture_default_str();
  cmd_sos2->add_option("--component", s2_comp)->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  cmd_sos2->add_option("--gp", s2_gp, "Classify (g,h) against (gp,hp) instead of transforming");
  cmd_sos2->add_option("--hp", s2_hp);

  // instance
  int in_n = 2, in_d = 1, in_k = 2;
  std::uint64_t in_seed = 1;
  long in_bound = 10;
  std::string in_in, in_out;
  auto* cmd_instance =
      app.add_subcommand("instance", "Generate or validate a serialized instance");
  cmd_instance->add_option("--n", in_n)->capture_default_str();
  cmd_instance->add_option("--d", in_d)->capture_default_str();
  cmd_instance->add_option("--k", in_k)->capture_default_str();
  cmd_instance->add_option("--seed", in_seed)->capture_default_str();
  cmd_instance->add_option("--bound", in_bound, "Coefficient bound")->capture_default_str();
  cmd_instance->add_option("--in", in_in, "Validate this JSON file instead of generating");
  cmd_instance->add_option("--out", in_out, "Write the JSON document here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_formulas) return run_formulas(f_kmax, f_nmax, fo);
    if (*cmd_degree) return run_degree(dg_n, dg_d, dg_k, dg);
    if (*cmd_gram) return run_gram_count(gc_n, gc_d, gc_k, gc);
    if (*cmd_tangent) return run_tangent(tg_n, tg_d, tg_k, tg_trials, tg_jobs, tg);
    if (*cmd_intersect) return run_intersect(is_n, is_d, is_k, is);
    if (*cmd_lemma) return run_lemma_grid(lg_nmax, lg_dmax, lg);
    if (*cmd_crosscheck) return run_crosscheck(cc_stretch, cc);
    if (*cmd_sos2) return run_sos2(s2_n, s2_g, s2_h, s2_lambda, s2_comp, s2_gp, s2_hp);
    if (*cmd_instance) return run_instance(in_n, in_d, in_k, in_seed, in_bound, in_in, in_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
