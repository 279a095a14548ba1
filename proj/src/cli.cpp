#include "aqstar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "aqstar/aq_invariants.hpp"
#include "aqstar/errors.hpp"
#include "aqstar/ideal.hpp"
#include "aqstar/kxl.hpp"
#include "aqstar/quadorder.hpp"
#include "aqstar/ufd.hpp"

namespace aqstar::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input problems that are the caller's fault rather than a failed check.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string disc;
  std::string a, b, c, d, f;
  std::vector<std::string> gens;
  long norm_bound = 30;
  long budget = 0;
  long samples = 0;
  long degree = 4;
  long count = 100;
};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& inputs() { return doc_["inputs"]; }
  Json& result() { return doc_["result"]; }
  void check(const std::string& name, bool passed) {
    checks_.push_back(Json{{"name", name}, {"passed", passed}});
    ok_ = ok_ && passed;
  }
  void annotate(const std::string& text) { annotations_.push_back(text); }
  bool ok() const { return ok_; }

  Json finish() {
    Json out;
    out["command"] = doc_["command"];
    out["inputs"] = doc_.contains("inputs") ? doc_["inputs"] : Json::object();
    out["result"] = doc_.contains("result") ? doc_["result"] : Json::object();
    out["checks"] = checks_;
    out["annotations"] = annotations_;
    return out;
  }

 private:
  Json doc_;
  Json checks_ = Json::array();
  Json annotations_ = Json::array();
  bool ok_ = true;
};

Json jint(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json jgroup(const AbelianGroupInvariants& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(jint(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

std::string elt(const QuadraticOrder& o, const OrderElement& x) { return o.to_string(FracElement(x)); }

Json jideal(const FracIdeal& i) {
  const auto& m = i.basis();
  Json hnf = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jint(m(r, c)));
    hnf.push_back(row);
  }
  return Json{{"generators", i.to_string()}, {"den", jint(i.den())}, {"hnf", hnf}, {"norm", i.norm().get_den() == 1 ? jint(i.norm().get_num()) : Json(i.norm().get_str())}};
}

QuadraticOrder order_of(const Options& o) {
  if (o.disc.empty()) throw UsageError("--disc is required");
  Integer d;
  if (d.set_str(o.disc, 10) != 0) throw UsageError("--disc: not an integer: " + o.disc);
  return make_order(d);
}

OrderElement element_of(const QuadraticOrder& order, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_order_element(order, text);
}

FracIdeal ideal_of(const QuadraticOrder& order, const std::vector<std::string>& gens) {
  if (gens.empty()) throw UsageError("--gens is required");
  std::vector<FracElement> xs;
  for (const auto& g : gens) xs.push_back(parse_element(order, g));
  return FracIdeal::from_generators(order, xs);
}

void order_inputs(Report& r, const QuadraticOrder& o) { r.inputs()["disc"] = jint(o.disc()); }

Json jorder(const QuadraticOrder& o) {
  return Json{{"disc", jint(o.disc())},
              {"fundamental_disc", jint(o.fundamental_disc())},
              {"conductor", jint(o.conductor())},
              {"maximal", o.is_maximal()},
              {"imaginary", o.is_imaginary()},
              {"s_squared", jint(o.squarefree_part())}};
}

// ---- quadratic-order commands ---------------------------------------------

Report cmd_order_info(const Options& opt) {
  Report r("order-info");
  const auto o = order_of(opt);
  order_inputs(r, o);
  r.result() = jorder(o);
  r.result()["basis"] = "1, w = (D + sqrt(D))/2, w^2 = D*w - " + o.norm_constant().get_str();
  if (o.is_imaginary()) {
    Json units = Json::array();
    for (const auto& u : o.units()) units.push_back(elt(o, u));
    r.result()["units"] = units;
  }
  r.check("disc = conductor^2 * fundamental_disc", o.disc() == o.conductor() * o.conductor() * o.fundamental_disc());
  r.check("maximal iff conductor 1", o.is_maximal() == (o.conductor() == 1));
  return r;
}

Report cmd_star_check(const Options& opt) {
  Report r("star-check");
  const auto o = order_of(opt);
  const auto a = element_of(o, opt.a, "--a"), b = element_of(o, opt.b, "--b");
  order_inputs(r, o);
  r.inputs()["a"] = elt(o, a);
  r.inputs()["b"] = elt(o, b);
  const auto v = star_pair(o, a, b);
  r.result()["holds"] = v.holds;
  r.result()["a2A_cap_b2A"] = jideal(v.lhs);
  r.result()["aA_cap_bA_squared"] = jideal(v.rhs);
  r.result()["colon_b2_a2"] = jideal(v.colon_of_squares);
  r.result()["colon_b_a_squared"] = jideal(v.squared_colon);
  r.check("(aA n bA)^2 in a^2A n b^2A", v.lhs.contains(v.rhs));
  r.check("colon formulation agrees", (v.colon_of_squares == v.squared_colon) == v.holds);
  if (o.disc() == -12 && !v.holds) r.annotate("Z[i√3] is not a ⋆-domain");
  return r;
}

Report cmd_star_scan(const Options& opt) {
  Report r("star-scan");
  const auto o = order_of(opt);
  order_inputs(r, o);
  r.inputs()["norm_bound"] = opt.norm_bound;
  r.inputs()["budget"] = opt.budget;
  const auto scan = star_scan(o, opt.norm_bound, static_cast<std::size_t>(opt.budget));
  r.result()["maximal"] = o.is_maximal();
  r.result()["pairs_checked"] = scan.pairs_checked;
  r.result()["budget_exhausted"] = scan.budget_exhausted;
  Json w = Json::array();
  for (const auto& v : scan.violations) w.push_back(Json{{"a", elt(o, v.a)}, {"b", elt(o, v.b)}});
  r.result()["witnesses"] = w;
  if (o.is_maximal()) r.check("no witness in a maximal order", scan.violations.empty());
  return r;
}

Report cmd_aq_report(const Options& opt) {
  Report r("aq-report");
  const auto o = order_of(opt);
  const auto a = element_of(o, opt.a, "--a"), b = element_of(o, opt.b, "--b");
  order_inputs(r, o);
  r.inputs()["a"] = elt(o, a);
  r.inputs()["b"] = elt(o, b);
  const auto rep = aq_report(o, a, b);
  auto& res = r.result();
  res["integrally_closed"] = rep.integrally_closed;
  res["conductor_ideal"] = jideal(rep.conductor_ideal);
  res["omega_coeff"] = jgroup(rep.omega_coeff);
  res["h1_coeff"] = jgroup(rep.h1_coeff);
  res["star_holds"] = rep.star.holds;
  res["annihilation"] = Json{{"omega_module", rep.annihilation.omega_module}, {"h1_module", rep.annihilation.h1_module}};
  res["syzygetic_kernel"] = jgroup(rep.syzygetic_kernel);
  res["interpretation_valid"] = rep.interpretation_valid;
  r.check("(aA n bA)^2 in a^2A n b^2A", rep.star.lhs.contains(rep.star.rhs));
  r.check("h1 coefficient trivial iff star holds", rep.h1_coeff.is_trivial() == rep.star.holds);
  r.check("omega coefficient annihilated by (bA:_A a)", rep.annihilation.omega_module);
  if (rep.integrally_closed) {
    r.check("h1 coefficient annihilated by (bA:_A a)", rep.annihilation.h1_module);
    r.check("omega coefficient trivial iff aA + bA invertible", invertibility_crosscheck(o, a, b));
  } else {
    r.annotate("order is not integrally closed: groups are the formal coefficient modules only");
  }
  return r;
}

Report cmd_syzygetic(const Options& opt) {
  Report r("syzygetic");
  const auto o = order_of(opt);
  order_inputs(r, o);
  std::optional<FracIdeal> j;
  if (!opt.gens.empty()) {
    j = ideal_of(o, opt.gens);
    r.inputs()["gens"] = opt.gens;
  } else {
    const auto a = element_of(o, opt.a, "--a or --gens"), b = element_of(o, opt.b, "--b");
    r.inputs()["a"] = elt(o, a);
    r.inputs()["b"] = elt(o, b);
    j = intersection(FracIdeal::principal(o, FracElement(a)), FracIdeal::principal(o, FracElement(b)));
  }
  const auto w = syzygetic_kernel(*j);
  const auto& p = w.presentation;
  r.result()["ideal"] = jideal(*j);
  r.result()["generators"] = Json::array({elt(o, p.generators[0]), elt(o, p.generators[1])});
  r.result()["syzygy_rank"] = p.syzygies.cols();
  r.result()["kernel_rank"] = p.kernel.cols();
  r.result()["W"] = jgroup(w.kernel);
  r.result()["syzygetic"] = w.syzygetic;
  r.check("evaluation vanishes on relations", (p.evaluation * p.relations).is_zero());
  r.check("relations inside evaluation kernel", lattice_contains(p.kernel, p.relations));
  return r;
}

Report cmd_stable_check(const Options& opt) {
  Report r("stable-check");
  const auto o = order_of(opt);
  const auto i = ideal_of(o, opt.gens);
  order_inputs(r, o);
  r.inputs()["gens"] = opt.gens;
  const auto s = is_stable(i);
  r.result()["ideal"] = jideal(i);
  r.result()["stable"] = s.stable;
  r.result()["witness"] = s.witness ? Json(elt(o, *s.witness)) : Json(nullptr);
  r.result()["candidates_tried"] = s.candidates_tried;
  if (s.witness)
    r.check("I^2 = aI by product", square(i) == scale(i, FracElement(*s.witness)));
  return r;
}

Report cmd_divisorial_check(const Options& opt) {
  Report r("divisorial-check");
  const auto o = order_of(opt);
  const auto i = ideal_of(o, opt.gens);
  order_inputs(r, o);
  r.inputs()["gens"] = opt.gens;
  const bool div = is_divisorial(i);
  r.result()["ideal"] = jideal(i);
  r.result()["inverse"] = jideal(inverse(i));
  r.result()["invertible"] = is_invertible(i);
  r.result()["closure"] = jideal(divisorial_closure(i));
  r.result()["divisorial"] = div;
  r.result()["square_divisorial"] = div ? Json(divisorial_square_check(i)) : Json(nullptr);
  r.check("I in I_v", divisorial_closure(i).contains(i));
  if (o.is_maximal()) {
    r.check("divisorial in a Dedekind order", div);
    r.check("square of a divisorial ideal is divisorial", divisorial_square_check(i));
  } else {
    r.annotate("non-maximal order: divisorial results are exploratory, not asserted");
  }
  return r;
}

Report cmd_four_term(const Options& opt) {
  Report r("four-term");
  const auto o = order_of(opt);
  const auto a = element_of(o, opt.a, "--a"), b = element_of(o, opt.b, "--b");
  const auto c = element_of(o, opt.c, "--c"), d = element_of(o, opt.d, "--d");
  order_inputs(r, o);
  r.inputs()["a"] = elt(o, a);
  r.inputs()["b"] = elt(o, b);
  r.inputs()["c"] = elt(o, c);
  r.inputs()["d"] = elt(o, d);
  const bool holds = four_term_identity(o, a, b, c, d);
  r.result()["holds"] = holds;
  if (o.is_maximal()) r.check("(aD n bD)(cD n dD) = acD n adD n bcD n bdD", holds);
  return r;
}

Report cmd_two_root_scan(const Options& opt) {
  Report r("two-root-scan");
  const auto o = order_of(opt);
  order_inputs(r, o);
  r.inputs()["norm_bound"] = opt.norm_bound;
  const auto scan = two_root_scan(o, opt.norm_bound);
  r.result()["fractions_checked"] = scan.fractions_checked;
  Json v = Json::array();
  for (const auto& x : scan.violations) v.push_back(o.to_string(x));
  r.result()["violations"] = v;
  if (o.is_maximal()) r.check("maximal order is 2-root closed", scan.violations.empty());
  return r;
}

// ---- Z[X] commands ----------------------------------------------------------

IntPoly int_poly_of(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_int_poly(text);
}

Report cmd_zx_demo(const Options& opt) {
  Report r("zx-demo");
  const auto a = int_poly_of(opt.a.empty() ? "X" : opt.a, "--a");
  const auto b = int_poly_of(opt.b.empty() ? "2" : opt.b, "--b");
  if (a.is_zero() || b.is_zero()) throw ZeroElement("zx-demo needs nonzero a, b");
  r.inputs()["A"] = "Z[X]";
  r.inputs()["a"] = to_string(a);
  r.inputs()["b"] = to_string(b);
  const auto colon = colon_principal(b, a);
  const bool star = star_check_gcd(a, b);
  const std::string omega = "Ω_{B/A} ≅ B/(" + factor_string(normalize_sign(b)) + "A:_A" + factor_string(normalize_sign(a)) +
                            ")B ≅ B/" + factor_string(colon) + "B";
  auto& res = r.result();
  res["B"] = "Z[X][" + to_string(a) + "/" + to_string(b) + "]";
  res["gcd"] = to_string(poly_gcd(a, b));
  res["colon_b_a"] = to_string(colon);
  res["aA_cap_bA"] = to_string(intersect_principal(a, b));
  res["star_holds"] = star;
  res["omega"] = omega;
  res["h1"] = star ? "H_1(A,B,B) = 0" : "H_1(A,B,B) ≠ 0";
  r.check("a * (bA:_A a) generates aA n bA", normalize_sign(a * colon) == intersect_principal(a, b));
  r.check("star holds in the GCD domain Z[X]", star);
  return r;
}

Json jgauss(const GaussIntersectionReport& l) {
  return Json{{"f", to_string(l.f)},
              {"content", l.content.get_str()},
              {"F", "(" + Rational(1 / l.content).get_str() + ")Z"},
              {"fF_generator", to_string(l.primitive)},
              {"samples", l.samples},
              {"integral_products", l.integral},
              {"mismatches", l.mismatches},
              {"scalar_mismatches", l.scalar_mismatches}};
}

Report cmd_gauss_intersection(const Options& opt) {
  Report r("lemma1-check");
  const long samples = opt.samples ? opt.samples : 200;
  r.inputs()["samples"] = samples;
  r.inputs()["seed"] = opt.seed;
  if (!opt.f.empty()) {
    const auto f = parse_rat_poly(opt.f);
    if (f.is_zero()) throw ZeroElement("lemma1-check needs f != 0");
    r.inputs()["f"] = to_string(f);
    const auto rep = gauss_intersection_check(f, static_cast<std::size_t>(samples), opt.seed);
    r.result() = jgauss(rep);
    r.check("fQ[X] n Z[X] = fFZ[X] on samples", rep.mismatches == 0);
    r.check("F = c(f)^-1 Z on scalar samples", rep.scalar_mismatches == 0);
    return r;
  }
  r.inputs()["count"] = opt.count;
  Sampler s(opt.seed);
  std::size_t failures = 0, polys = 0;
  Json list = Json::array();
  while (polys < static_cast<std::size_t>(opt.count)) {
    const auto f = random_rat_poly(s, 4, 20, 12);
    if (f.is_zero()) continue;
    const auto rep = gauss_intersection_check(f, static_cast<std::size_t>(samples), opt.seed + polys);
    ++polys;
    failures += !rep.passed();
    list.push_back(Json{{"f", to_string(rep.f)}, {"content", rep.content.get_str()}, {"passed", rep.passed()}});
  }
  r.result()["polynomials"] = polys;
  r.result()["failures"] = failures;
  r.result()["cases"] = list;
  r.check("fQ[X] n Z[X] = fFZ[X] for every sampled f", failures == 0);
  return r;
}

Report cmd_coprime_report(const Options& opt) {
  Report r("cor16-report");
  const auto a = int_poly_of(opt.a, "--a"), b = int_poly_of(opt.b, "--b");
  if (a.is_zero() || b.is_zero()) throw ZeroElement("cor16-report needs nonzero a, b");
  r.inputs()["a"] = to_string(a);
  r.inputs()["b"] = to_string(b);
  const auto rep = coprime_homology_report(a, b);
  r.result()["B"] = "Z[X][" + to_string(a) + "/" + to_string(b) + "]";
  r.result()["gcd"] = to_string(rep.gcd);
  r.result()["hypothesis"] = rep.hypothesis_holds ? "aA n bA = abA holds" : "hypothesis fails";
  r.result()["reduced_a"] = to_string(rep.reduced_a);
  r.result()["reduced_b"] = to_string(rep.reduced_b);
  r.result()["formulas"] = rep.formulas;
  r.check("reduced pair satisfies aA n bA = abA",
          intersect_principal(rep.reduced_a, rep.reduced_b) == normalize_sign(rep.reduced_a * rep.reduced_b));
  if (!rep.hypothesis_holds)
    r.annotate("formulas stated for b/gcd(a,b), since A[a/b] = A[(a/g)/(b/g)]");
  return r;
}

// ---- K + xL[x] --------------------------------------------------------------

Report cmd_kxl_intersections(const Options& opt) {
  Report r("example14");
  const long samples = opt.samples ? opt.samples : 1000;
  r.inputs()["samples"] = samples;
  r.inputs()["seed"] = opt.seed;
  r.inputs()["degree"] = opt.degree;
  if (opt.degree < 3) throw UsageError("--degree must be at least 3");
  if (!opt.f.empty()) {
    const auto f = parse_kxl(opt.f);
    const auto x = parse_kxl("x"), yx = parse_kxl("y*x");
    r.inputs()["f"] = to_string(f);
    const auto ord = f.ord_x();
    const bool first = in_principal(yx, f) && in_principal(x, f);
    const bool second = in_principal(yx * yx, f) && in_principal(x * x, f);
    r.result()["element"] = Json{{"in_A", in_A(f)},
                                 {"in_B", in_B(f)},
                                 {"ord_x", ord ? Json(*ord) : Json("inf")},
                                 {"in_yxA_cap_xA", first},
                                 {"in_yx2A_cap_x2A", second}};
    r.check("element: yxA n xA membership iff ord >= 2", first == (!ord || *ord >= 2));
    r.check("element: (yx)^2A n x^2A membership iff ord >= 3", second == (!ord || *ord >= 3));
  }
  const auto rep = kxl_intersection_check(static_cast<std::size_t>(samples), opt.seed, static_cast<std::size_t>(opt.degree));
  Json strata = Json::array();
  std::size_t bad1 = 0, bad2 = 0;
  for (const auto& s : rep.strata) {
    strata.push_back(Json{{"stratum", s.name},
                          {"samples", s.samples},
                          {"in_yxA_cap_xA", s.in_first},
                          {"in_yx2A_cap_x2A", s.in_second},
                          {"counterexamples_first", s.first_counterexamples},
                          {"counterexamples_second", s.second_counterexamples}});
    bad1 += s.first_counterexamples;
    bad2 += s.second_counterexamples;
  }
  r.result()["strata"] = strata;
  r.result()["sweep_checked"] = rep.sweep_checked;
  r.result()["sweep_failures"] = rep.sweep_failures;
  r.check("yxA n xA = x^2 L[x] on samples", bad1 == 0);
  r.check("(yx)^2A n x^2A = x^3 L[x] on samples", bad2 == 0);
  r.check("basis sweep x^i y^j", rep.sweep_failures == 0);
  for (const auto& a : rep.annotations) r.annotate(a);
  return r;
}

// ---- rendering ----------------------------------------------------------------

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!is_flat(v)) return v.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void render(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it->is_structured() && !is_flat(*it) && !it->empty()) {
        out << pad << it.key() << ":\n";
        render(out, *it, indent + 2);
      } else {
        out << pad << it.key() << ": " << scalar_text(*it) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out << pad << "-\n";
        render(out, x, indent + 2);
      } else {
        out << pad << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

void render_text(std::ostream& out, const Json& doc) {
  out << "command: " << doc["command"].get<std::string>() << "\n";
  out << "inputs:\n";
  render(out, doc["inputs"], 2);
  out << "result:\n";
  render(out, doc["result"], 2);
  out << "checks:\n";
  if (doc["checks"].empty()) out << "  (none asserted)\n";
  for (const auto& c : doc["checks"])
    out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>() << "\n";
  if (!doc["annotations"].empty()) {
    out << "annotations:\n";
    for (const auto& a : doc["annotations"]) out << "  \"" << a.get<std::string>() << "\"\n";
  }
}

struct Command {
  std::string name, help;
  std::vector<std::string> flags;
  std::function<Report(const Options&)> fn;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"order-info", "discriminant decomposition and units of O_D", {"disc"}, cmd_order_info},
      {"star-check", "decide a^2A n b^2A = (aA n bA)^2 for one pair", {"disc", "a", "b"}, cmd_star_check},
      {"star-scan", "search canonical pairs up to a norm bound for star failures", {"disc", "norm-bound", "budget"},
       cmd_star_scan},
      {"aq-report", "coefficient groups for Omega and H_1 of A[a/b]", {"disc", "a", "b"}, cmd_aq_report},
      {"syzygetic", "kernel W of S_2(J) -> J^2", {"disc", "gens", "a", "b"}, cmd_syzygetic},
      {"stable-check", "decide I^2 = aI", {"disc", "gens"}, cmd_stable_check},
      {"divisorial-check", "divisorial closure, invertibility and the square check", {"disc", "gens"},
       cmd_divisorial_check},
      {"four-term", "(aD n bD)(cD n dD) = acD n adD n bcD n bdD", {"disc", "a", "b", "c", "d"}, cmd_four_term},
      {"two-root-scan", "search for x with x^2 in O but x not in O", {"disc", "norm-bound"}, cmd_two_root_scan},
      {"zx-demo", "the A = Z[X], B = Z[X/2] example", {"a", "b"}, cmd_zx_demo},
      {"lemma1-check", "sampled check of fQ[X] n Z[X] = fFZ[X]", {"f", "samples", "count"}, cmd_gauss_intersection},
      {"cor16-report", "closed-form homology when aA n bA = abA in Z[X]", {"a", "b"}, cmd_coprime_report},
      {"example14", "membership identities in Q + xL[x]", {"samples", "degree", "f"}, cmd_kxl_intersections},
  };
  return list;
}

void add_flag(CLI::App* sub, Options& o, const std::string& flag) {
  if (flag == "disc") sub->add_option("--disc", o.disc, "discriminant D of the order O_D");
  if (flag == "a") sub->add_option("--a", o.a, "element a");
  if (flag == "b") sub->add_option("--b", o.b, "element b");
  if (flag == "c") sub->add_option("--c", o.c, "element c");
  if (flag == "d") sub->add_option("--d", o.d, "element d");
  if (flag == "f") sub->add_option("--f", o.f, "polynomial f");
  if (flag == "gens")
    sub->add_option("--gens", o.gens, "ideal generators; repeat the flag or separate with ';'")->delimiter(';');
  if (flag == "norm-bound")
    sub->add_option("--norm-bound", o.norm_bound, "norm bound")->check(CLI::PositiveNumber)->capture_default_str();
  if (flag == "budget")
    sub->add_option("--budget", o.budget, "stop after this many pairs (0: no limit)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  if (flag == "samples") sub->add_option("--samples", o.samples, "samples")->check(CLI::PositiveNumber);
  if (flag == "degree") sub->add_option("--degree", o.degree, "x-degree bound")->check(CLI::PositiveNumber)->capture_default_str();
  if (flag == "count")
    sub->add_option("--count", o.count, "random polynomials when --f is absent")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : commands()) n.push_back(c.name);
    return n;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact ideal and homology invariants for quadratic orders, Z[X] and Q + xL[x]", "aqstar"};
  app.require_subcommand(1);
  Options opt;
  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for randomized runs")->capture_default_str();
    for (const auto& f : c.flags) add_flag(sub, opt, f);
    dispatch[sub] = &c;
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = dispatch.at(sub);

  Json doc;
  bool ok = false;
  try {
    Report r = cmd->fn(opt);
    ok = r.ok();
    doc = r.finish();
    doc["inputs"]["seed"] = opt.seed;
  } catch (const InvariantViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const ContainmentViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (opt.format == "json")
    out << doc.dump(2) << "\n";
  else
    render_text(out, doc);
  return ok ? 0 : 1;
}

}  // namespace aqstar::cli
