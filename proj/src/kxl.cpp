#include "aqstar/kxl.hpp"

#include <stdexcept>

#include "aqstar/errors.hpp"
#include "aqstar/expr_parser.hpp"

namespace aqstar {

RatFunc::RatFunc(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw ZeroDivisor("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly(Rational(1));
    return;
  }
  const RatPoly g = monic_gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const Rational lead = den_.leading();
  num_ = scale(num_, 1 / lead);
  den_ = scale(den_, 1 / lead);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.coeff(0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

namespace {

bool single_term(const RatPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c != 0;
  return n <= 1;
}

std::string wrap(const RatPoly& p) {
  const std::string s = to_string(p, "y");
  return single_term(p) && p.leading() > 0 ? s : "(" + s + ")";
}

}  // namespace

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num(), "y");
  return wrap(f.num()) + "/" + wrap(f.den());
}

KxlElement KxlElement::x_power(std::size_t i, const RatFunc& c) {
  KxlElement e;
  e.set(i, c);
  return e;
}

void KxlElement::set(std::size_t i, const RatFunc& c) {
  if (c.is_zero())
    terms_.erase(i);
  else
    terms_[i] = c;
}

RatFunc KxlElement::coeff(std::size_t i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::optional<std::size_t> KxlElement::ord_x() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<std::size_t> KxlElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

KxlElement operator+(const KxlElement& a, const KxlElement& b) {
  KxlElement r = a;
  for (const auto& [i, c] : b.terms_) r.set(i, r.coeff(i) + c);
  return r;
}

KxlElement operator-(const KxlElement& a) {
  KxlElement r;
  for (const auto& [i, c] : a.terms_) r.set(i, -c);
  return r;
}

KxlElement operator*(const KxlElement& a, const KxlElement& b) {
  KxlElement r;
  for (const auto& [i, c] : a.terms_)
    for (const auto& [j, d] : b.terms_) r.set(i + j, r.coeff(i + j) + c * d);
  return r;
}

std::string to_string(const KxlElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [i, c] = *it;
    if (!out.empty()) out += " + ";
    std::string xs = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    if (i == 0)
      out += "(" + to_string(c) + ")";
    else if (c == RatFunc(Rational(1)))
      out += xs;
    else
      out += xs + "*(" + to_string(c) + ")";
  }
  return out;
}

namespace {

struct KxlOps {
  KxlElement constant(const Rational& c) const { return KxlElement(RatFunc(c)); }
  KxlElement variable(std::string_view name) const {
    if (name == "x") return KxlElement::x_power(1);
    if (name == "y") return KxlElement(RatFunc::y());
    throw ParseError("unknown variable '" + std::string(name) + "'");
  }
  KxlElement add(const KxlElement& a, const KxlElement& b) const { return a + b; }
  KxlElement sub(const KxlElement& a, const KxlElement& b) const { return a - b; }
  KxlElement mul(const KxlElement& a, const KxlElement& b) const { return a * b; }
  KxlElement neg(const KxlElement& a) const { return -a; }
  KxlElement divide(const KxlElement& a, const KxlElement& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    if (b.degree() != 0u) throw ParseError("division by an expression involving x");
    return a * KxlElement(b.coeff(0).inverse());
  }
};

}  // namespace

KxlElement parse_kxl(std::string_view text) { return parse_expression(text, KxlOps{}); }

std::optional<KxlElement> divide_exact(const KxlElement& f, const KxlElement& c) {
  if (c.is_zero()) throw ZeroDivisor("division by zero in L[x]");
  const std::size_t dc = *c.degree();
  const RatFunc lead_inv = c.coeff(dc).inverse();
  KxlElement q, r = f;
  while (!r.is_zero() && *r.degree() >= dc) {
    const std::size_t shift = *r.degree() - dc;
    const KxlElement t = KxlElement::x_power(shift, r.coeff(*r.degree()) * lead_inv);
    q = q + t;
    r = r - t * c;
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool in_A(const KxlElement& f) { return f.coeff(0).is_constant(); }

bool in_B(const KxlElement& f) { return f.coeff(0).is_polynomial(); }

bool in_principal(const KxlElement& c, const KxlElement& f) {
  if (c.is_zero()) throw ZeroElement("principal ideal of 0");
  if (f.is_zero()) return true;
  auto q = divide_exact(f, c);
  return q && in_A(*q);
}

bool KxlIntersectionReport::passed() const {
  for (const auto& s : strata)
    if (s.first_counterexamples || s.second_counterexamples) return false;
  return sweep_failures == 0;
}

std::size_t KxlIntersectionReport::total_samples() const {
  std::size_t n = 0;
  for (const auto& s : strata) n += s.samples;
  return n;
}

namespace {

RatPoly small_poly(Sampler& s, long max_degree) {
  std::vector<Rational> c;
  const long deg = s.uniform(0, max_degree);
  for (long i = 0; i <= deg; ++i) {
    Rational r(s.uniform(-9, 9), s.uniform(1, 4));
    r.canonicalize();
    c.push_back(r);
  }
  return RatPoly(std::move(c));
}

RatFunc nonzero_rational(Sampler& s) {
  Rational r(s.nonzero(9), s.uniform(1, 6));
  r.canonicalize();
  return r;
}

// A nonzero rational function with y-degree of numerator up to 3 and a
// denominator that is 1 about half the time.
RatFunc random_ratfunc(Sampler& s) {
  for (;;) {
    RatPoly num = small_poly(s, 3);
    RatPoly den = s.uniform(0, 1) ? RatPoly(Rational(1)) : small_poly(s, 2);
    if (num.is_zero() || den.is_zero()) continue;
    return RatFunc(num, den);
  }
}

// Nonconstant, so that it lies outside Q.
RatFunc nonconstant_ratfunc(Sampler& s) {
  for (;;) {
    RatFunc f = random_ratfunc(s);
    if (!f.is_constant()) return f;
  }
}

struct Stratum {
  const char* name;
  // Fills the low coefficients c0, c1, c2; the rest is random tail.
  RatFunc (*c0)(Sampler&);
  RatFunc (*c1)(Sampler&);
  RatFunc (*c2)(Sampler&);
};

RatFunc zero(Sampler&) { return {}; }
RatFunc any(Sampler& s) { return s.uniform(0, 3) ? random_ratfunc(s) : RatFunc(); }
RatFunc rational(Sampler& s) { return nonzero_rational(s); }
RatFunc rational_y(Sampler& s) { return nonzero_rational(s) * RatFunc::y(); }
RatFunc rational_y2(Sampler& s) { return nonzero_rational(s) * RatFunc::y() * RatFunc::y(); }
RatFunc general(Sampler& s) { return nonconstant_ratfunc(s); }

const Stratum kStrata[] = {
    {"c0 nonconstant", general, any, any},
    {"c0 rational", rational, any, any},
    {"c0=0, c1 rational", zero, rational, any},
    {"c0=0, c1 rational*y", zero, rational_y, any},
    {"c0=0, c1 general", zero, general, any},
    {"c0=c1=0", zero, zero, any},
    {"c0=c1=0, c2 rational", zero, zero, rational},
    {"c0=c1=0, c2 rational*y^2", zero, zero, rational_y2},
    {"c0=c1=c2=0", zero, zero, zero},
};

}  // namespace

KxlIntersectionReport kxl_intersection_check(std::size_t samples, std::uint64_t seed, std::size_t degree_bound) {
  if (samples == 0) throw std::invalid_argument("kxl_intersection_check needs samples >= 1");
  if (degree_bound < 3) throw std::invalid_argument("kxl_intersection_check needs degree bound >= 3");
  const KxlElement x = KxlElement::x_power(1), yx = KxlElement::x_power(1, RatFunc::y());
  const KxlElement x2 = x * x, yx2 = yx * yx;

  auto first = [&](const KxlElement& f) { return in_principal(yx, f) && in_principal(x, f); };
  auto second = [&](const KxlElement& f) { return in_principal(yx2, f) && in_principal(x2, f); };

  KxlIntersectionReport rep;
  Sampler s(seed);
  for (const auto& st : kStrata) {
    StratumCounts counts;
    counts.name = st.name;
    counts.samples = samples;
    for (std::size_t n = 0; n < samples; ++n) {
      KxlElement f = KxlElement::x_power(0, st.c0(s)) + KxlElement::x_power(1, st.c1(s)) + KxlElement::x_power(2, st.c2(s));
      for (std::size_t i = 3; i <= degree_bound; ++i)
        if (s.uniform(0, 2)) f = f + KxlElement::x_power(i, random_ratfunc(s));
      const auto ord = f.ord_x();
      const bool ord2 = !ord || *ord >= 2, ord3 = !ord || *ord >= 3;
      const bool m1 = first(f), m2 = second(f);
      counts.in_first += m1;
      counts.in_second += m2;
      counts.first_counterexamples += m1 != ord2;
      counts.second_counterexamples += m2 != ord3;
    }
    rep.strata.push_back(counts);
  }

  // x^2 L[x] inside yxA n xA, and x^3 L[x] inside (yx)^2A n x^2A, on monomials.
  for (std::size_t i = 2; i <= degree_bound; ++i)
    for (int j = -2; j <= 2; ++j) {
      RatFunc c = Rational(1);
      for (int k = 0; k < std::abs(j); ++k) c = c * RatFunc::y();
      if (j < 0) c = c.inverse();
      const KxlElement f = KxlElement::x_power(i, c);
      ++rep.sweep_checked;
      rep.sweep_failures += !first(f);
      if (i >= 3) rep.sweep_failures += !second(f);
    }

  rep.annotations = {"H_1(A,B,B) ≅ L[z]", "H_1(A,B,B) is not finitely generated as a B-module", "Ω_{B/A} ≅ K[y]"};
  return rep;
}

}  // namespace aqstar
