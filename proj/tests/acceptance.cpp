// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "aqstar/aq_invariants.hpp"
#include "aqstar/errors.hpp"
#include "aqstar/ideal.hpp"
#include "aqstar/kxl.hpp"
#include "aqstar/quadorder.hpp"
#include "aqstar/ufd.hpp"
#include "cli_cases.hpp"
#include "ideal_oracle_bridge.hpp"
#include "oracle.hpp"
#include "random_inputs.hpp"

using namespace aqstar;
using testing_support::Rng;

namespace {

// Collects the first few problems so a FAIL line says why.
struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  std::size_t cases = 0;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) notes << what;
    ok = false;
  }
};

oracle::Quad::Elt to_i64(const OrderElement& x) { return {x.u.get_si(), x.v.get_si()}; }

std::vector<oracle::i64> torsion_i64(const AbelianGroupInvariants& g) {
  std::vector<oracle::i64> out;
  for (const auto& d : g.torsion) out.push_back(d.get_si());
  return out;
}

FracIdeal principal_ideal(const QuadraticOrder& o, const OrderElement& x) { return FracIdeal::principal(o, FracElement(x)); }

Outcome witness_colons() {
  Outcome r;
  const auto o = make_order(-12);
  const auto a = parse_order_element(o, "1+1*s");
  const OrderElement two{2, 0}, four{4, 0};
  const auto m = FracIdeal::from_generators(o, {FracElement(two), FracElement(a)});
  const auto c1 = colon_in_order(principal_ideal(o, two), principal_ideal(o, a));
  const auto c2 = colon_in_order(principal_ideal(o, four), principal_ideal(o, o.mul(a, a)));
  r.expect(c1 == m, "(2O:_A a) != m; ");
  r.expect(c2 == m, "(4O:_A a^2) != m; ");
  r.expect(square(c1) != c2, "(2O:_A a)^2 == (4O:_A a^2); ");
  const auto v = star_pair(o, a, two);
  r.expect(!v.holds, "star_pair holds; ");
  r.expect(v.colon_of_squares == m && v.squared_colon == square(m), "star_pair colon ideals differ from m, m^2; ");
  r.cases = 1;
  return r;
}

Outcome non_invertible() {
  Outcome r;
  const auto o = make_order(-12);
  const auto m = FracIdeal::from_generators(o, {FracElement(2, 0), parse_element(o, "1+s")});
  r.expect(!is_invertible(m), "m reported invertible; ");
  r.expect(product(m, inverse(m)) != FracIdeal::unit(o), "m * m^-1 = O; ");
  r.cases = 1;
  return r;
}

Outcome scans() {
  Outcome r;
  for (long d : {-3L, -4L, -7L, -8L, -11L, -20L}) {
    const auto scan = star_scan(make_order(d), 30);
    r.cases += scan.pairs_checked;
    r.expect(scan.pairs_checked > 0 && scan.violations.empty(), "witness in maximal order " + std::to_string(d) + "; ");
  }
  const auto o = make_order(-12);
  const auto scan = star_scan(o, 10);
  r.cases += scan.pairs_checked;
  const auto pa = principal_ideal(o, parse_order_element(o, "1+s")), pb = principal_ideal(o, OrderElement{2, 0});
  bool found = false;
  for (const auto& w : scan.violations) {
    const auto wa = principal_ideal(o, w.a), wb = principal_ideal(o, w.b);
    found = found || (wa == pa && wb == pb) || (wa == pb && wb == pa);
  }
  r.expect(!scan.violations.empty(), "no witness for -12; ");
  r.expect(found, "(1+s, 2) not among the -12 witnesses; ");
  return r;
}

Outcome coefficient_groups() {
  Outcome r;
  const auto o = make_order(-12);
  const oracle::Quad q(-12);
  const auto a = parse_order_element(o, "1+s");
  const OrderElement b{2, 0};
  const auto h1 = h1_coeff_group(o, a, b), om = omega_coeff_group(o, a, b);
  const auto h1_oracle = oracle::h1_group(q, to_i64(a), to_i64(b));
  const auto om_oracle = oracle::omega_group(q, to_i64(a), to_i64(b));
  r.expect(h1.free_rank == 0 && torsion_i64(h1) == std::vector<oracle::i64>{2, 2}, "h1 != [2,2]: " + h1.to_string() + "; ");
  r.expect(om.free_rank == 0 && torsion_i64(om) == std::vector<oracle::i64>{2}, "omega != [2]: " + om.to_string() + "; ");
  r.expect(h1_oracle == torsion_i64(h1), "h1 disagrees with oracle; ");
  r.expect(om_oracle == torsion_i64(om), "omega disagrees with oracle; ");
  r.cases = 1;
  return r;
}

Outcome containments() {
  Outcome r;
  Rng rng(500);
  for (long d : {-3L, -4L, -12L, -20L}) {
    const auto o = make_order(d);
    for (int i = 0; i < 2500; ++i) {
      const auto a = testing_support::random_nonzero_element(rng, 9);
      const auto b = testing_support::random_nonzero_element(rng, 9);
      const auto pa = principal_ideal(o, a), pb = principal_ideal(o, b);
      const auto meet = intersection(pa, pb);
      const auto v = star_pair(o, a, b);
      r.expect(v.lhs.contains(square(meet)), "(aA n bA)^2 not in a^2A n b^2A; ");
      r.expect(principal_ideal(o, o.mul(a, b)).contains(product(sum(pa, pb), meet)), "(aA+bA)(aA n bA) not in abA; ");
      r.expect(h1_coeff_group(o, a, b).is_trivial() == v.holds, "h1 trivial <=> star broken; ");
      ++r.cases;
    }
  }
  return r;
}

Outcome annihilation() {
  Outcome r;
  Rng rng(600);
  for (long d : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -24L}) {
    const auto o = make_order(d);
    for (int i = 0; i < 130; ++i) {
      const auto a = testing_support::random_nonzero_element(rng, 9);
      const auto b = testing_support::random_nonzero_element(rng, 9);
      const auto c = annihilation_checks(o, a, b);
      r.expect(c.omega_module, "omega annihilation fails in " + std::to_string(d) + "; ");
      r.expect(c.h1_module, "h1 annihilation fails in " + std::to_string(d) + "; ");
      ++r.cases;
    }
  }
  return r;
}

Outcome ideal_oracle() {
  Outcome r;
  Rng rng(700);
  for (long d : {-3L, -4L, -7L, -12L, -20L, -27L}) {
    const auto o = make_order(d);
    const oracle::Quad q(d);
    for (int t = 0; t < 100; ++t) {
      const auto i = testing_support::random_ideal(rng, o, 40);
      const auto j = testing_support::random_ideal(rng, o, 40);
      const auto li = testing_support::to_oracle(i), lj = testing_support::to_oracle(j);
      r.expect(testing_support::to_oracle(product(i, j)) == q.product(oracle::Quad::basis_of(li), oracle::Quad::basis_of(lj)),
               "product mismatch; ");
      r.expect(testing_support::to_oracle(intersection(i, j)) == oracle::intersect(li, lj), "intersection mismatch; ");
      const auto [cl, n] = oracle::colon(q, li, lj);
      r.expect(testing_support::to_oracle(colon(i, j), n) == cl, "colon mismatch; ");
      for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y) r.expect(i.contains(FracElement(x, y)) == li.contains(x, y), "membership mismatch; ");
      ++r.cases;
    }
  }
  return r;
}

AbelianGroupInvariants syzygetic_oracle(const QuadraticOrder& o, const FracIdeal& j) {
  const oracle::Quad q(o.disc().get_si());
  const auto gens = j.generators();
  const auto [g1, g2] = oracle::small_generators(q, to_i64(gens[0].numerator()), to_i64(gens[1].numerator()));
  const auto sq = oracle::sym_square_by_search(q, g1, g2);
  auto span = [](const std::vector<std::vector<oracle::i64>>& cols) {
    std::vector<IntVector> vs;
    for (const auto& c : cols) vs.push_back(IntVector(c.begin(), c.end()));
    return hnf(IntMatrix::from_columns(6, vs));
  };
  return lattice_quotient_invariants(span(sq.kernel), span(sq.relations));
}

Outcome syzygetic() {
  Outcome r;
  Rng rng(800);
  const long discs[] = {-3, -4, -12, -20, -27};
  for (int i = 0; i < 50; ++i) {
    const auto o = make_order(discs[i % 5]);
    const auto c = testing_support::random_nonzero_element(rng, 8);
    r.expect(syzygetic_kernel(principal_ideal(o, c)).syzygetic, "principal ideal not syzygetic; ");
    ++r.cases;
  }
  const auto o20 = make_order(-20);
  const auto p = FracIdeal::from_generators(o20, {FracElement(2, 0), parse_element(o20, "1+s")});
  r.expect(syzygetic_kernel(p).kernel.is_trivial(), "(2, 1+sqrt(-5)) has nontrivial W; ");
  const auto o12 = make_order(-12);
  const auto meet = intersection(principal_ideal(o12, parse_order_element(o12, "1+s")), principal_ideal(o12, OrderElement{2, 0}));
  const auto w = syzygetic_kernel(meet).kernel;
  r.expect(w == syzygetic_oracle(o12, meet), "W of the -12 witness meet disagrees with oracle; ");
  r.notes << (r.ok ? "W(-12 witness) = " + w.to_string() : "");
  r.cases += 2;
  return r;
}

Outcome stability() {
  Outcome r;
  const auto o = make_order(-12);
  const auto m = FracIdeal::from_generators(o, {FracElement(2, 0), parse_element(o, "1+s")});
  const auto s = is_stable(m);
  r.expect(s.stable && s.witness && *s.witness == OrderElement{2, 0}, "m not stable with witness 2; ");
  r.expect(square(m) == scale(m, FracElement(2, 0)), "m^2 != 2m; ");
  Rng rng(900);
  for (long d : {-3L, -4L, -12L, -20L}) {
    const auto od = make_order(d);
    for (int i = 0; i < 10; ++i) {
      const auto c = testing_support::random_nonzero_element(rng, 7);
      const auto pc = principal_ideal(od, c);
      const auto sc = is_stable(pc);
      r.expect(sc.stable && sc.witness && principal_ideal(od, *sc.witness) == pc, "principal ideal witness is not a generator; ");
      ++r.cases;
    }
  }
  return r;
}

Outcome zx_example() {
  Outcome r;
  const auto x = parse_int_poly("x"), two = parse_int_poly("2");
  r.expect(colon_principal(two, x) == two, "(2A:_A X) != 2; ");
  const auto demo = cli_cases::run({"zx-demo", "--format", "text"});
  r.expect(demo.code == 0, "zx-demo exit code; ");
  r.expect(demo.out.find("Ω_{B/A} ≅ B/(2A:_AX)B ≅ B/2B") != std::string::npos, "zx-demo does not state B/2B; ");
  r.expect(coprime_homology_report(x, two).formulas.front() == "Ω_{B/A} ≅ B/2B", "cor16 report; ");
  Sampler s(1000);
  while (r.cases < 100) {
    const auto f = random_rat_poly(s, 4, 20, 12);
    if (f.is_zero()) continue;
    r.expect(gauss_intersection_check(f, 50, r.cases).passed(), "fQ[X] n Z[X] check fails for " + to_string(f) + "; ");
    ++r.cases;
  }
  return r;
}

Outcome kxl_intersections() {
  Outcome r;
  const auto rep = kxl_intersection_check(1000, 1400, 5);
  for (const auto& s : rep.strata) {
    r.expect(s.samples >= 1000, "stratum undersampled; ");
    r.expect(s.first_counterexamples == 0, "first identity broken in " + s.name + "; ");
    r.expect(s.second_counterexamples == 0, "second identity broken in " + s.name + "; ");
  }
  r.expect(rep.sweep_checked == 4 * 5 && rep.sweep_failures == 0, "basis sweep; ");
  r.cases = rep.total_samples() + rep.sweep_checked;
  return r;
}

Outcome determinism() {
  Outcome r;
  for (const auto& c : cli_cases::all()) {
    const auto first = cli_cases::run(c, "json"), second = cli_cases::run(c, "json");
    r.expect(first.code == 0, c.command + " exit " + std::to_string(first.code) + "; ");
    r.expect(!first.out.empty() && first.out == second.out, c.command + " output differs; ");
    ++r.cases;
  }
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"witness colon ideals in disc -12", witness_colons},
      {"(2, 1+sqrt(-3)) is not invertible", non_invertible},
      {"star scans: maximal orders clean, -12 has (1+sqrt(-3), 2)", scans},
      {"coefficient groups [2,2] and [2] match the oracle", coefficient_groups},
      {"containments and h1/star biconditional on 10^4 pairs", containments},
      {"annihilation inclusions on 10^3 pairs in maximal orders", annihilation},
      {"ideal calculus agrees with the oracle", ideal_oracle},
      {"syzygetic kernels", syzygetic},
      {"stability of m and of principal ideals", stability},
      {"Z[X] example and Gauss-lemma intersections", zx_example},
      {"K + xL[x] intersection identities", kxl_intersections},
      {"CLI JSON is byte-identical across runs", determinism},
  };
  int failures = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << o.cases << " cases, "
              << static_cast<int>(secs * 1000) << " ms)";
    if (!o.notes.str().empty()) std::cout << " -- " << o.notes.str();
    std::cout << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << n - failures << "/" << n << std::endl;
  return failures ? 1 : 0;
}
