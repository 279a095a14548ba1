#include "aqstar/poly.hpp"

#include <stdexcept>

#include "aqstar/errors.hpp"
#include "aqstar/expr_parser.hpp"

namespace aqstar {

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  const Integer g = content(p);
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) c.push_back(x / g);
  return IntPoly(std::move(c));
}

IntPoly normalize_sign(const IntPoly& p) { return !p.is_zero() && p.leading() < 0 ? -p : p; }

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

Rational rational_content(const RatPoly& p) {
  if (p.is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntPoly primitive_integer_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  const Rational c = rational_content(p);
  std::vector<Integer> out;
  for (const auto& x : p.coeffs()) {
    Rational q = x / c;
    out.push_back(q.get_num());
  }
  return IntPoly(std::move(out));
}

bool has_integer_coefficients(const RatPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

IntPoly to_integer(const RatPoly& p) {
  if (!has_integer_coefficients(p)) throw std::invalid_argument("polynomial has non-integral coefficients");
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) c.push_back(x.get_num());
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ZeroDivisor("polynomial division by zero");
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  RatPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Rational f = r.leading() / b.leading();
    q[shift] = f;
    r = r - RatPoly::monomial(f, shift) * b;
  }
  return {RatPoly(std::move(q)), r};
}

RatPoly scale(const RatPoly& p, const Rational& c) { return p * RatPoly(c); }

RatPoly make_monic(const RatPoly& p) { return p.is_zero() ? p : scale(p, 1 / p.leading()); }

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

namespace {

template <class R>
std::string render(const Polynomial<R>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    R c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    const bool unit = c == 1;
    if (i == 0 || !unit) out += c.get_str();
    if (i == 0) continue;
    if (!unit) out += "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

struct RatPolyOps {
  char var;
  RatPoly constant(const Rational& c) const { return RatPoly(c); }
  RatPoly variable(std::string_view name) const {
    if (name.size() == 1 && std::tolower(static_cast<unsigned char>(name[0])) == var) return RatPoly::x();
    throw ParseError("unknown variable '" + std::string(name) + "'");
  }
  RatPoly add(const RatPoly& a, const RatPoly& b) const { return a + b; }
  RatPoly sub(const RatPoly& a, const RatPoly& b) const { return a - b; }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return a * b; }
  RatPoly neg(const RatPoly& a) const { return -a; }
  RatPoly divide(const RatPoly& a, const RatPoly& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    if (!b.is_constant()) throw ParseError("division by a non-constant polynomial");
    return scale(a, 1 / b.leading());
  }
};

}  // namespace

std::string to_string(const IntPoly& p, std::string_view var) { return render(p, var); }
std::string to_string(const RatPoly& p, std::string_view var) { return render(p, var); }

RatPoly parse_rat_poly(std::string_view text, char var) {
  return parse_expression(text, RatPolyOps{static_cast<char>(std::tolower(static_cast<unsigned char>(var)))});
}

IntPoly parse_int_poly(std::string_view text, char var) {
  RatPoly p = parse_rat_poly(text, var);
  if (!has_integer_coefficients(p)) throw ParseError("expected integer coefficients in \"" + std::string(text) + "\"");
  return to_integer(p);
}

IntPoly random_int_poly(Sampler& s, long max_degree, long coeff_range) {
  std::vector<Integer> c;
  const long deg = s.uniform(0, max_degree);
  for (long i = 0; i <= deg; ++i) c.emplace_back(s.uniform(-coeff_range, coeff_range));
  return IntPoly(std::move(c));
}

RatPoly random_rat_poly(Sampler& s, long max_degree, long coeff_range, long max_den) {
  std::vector<Rational> c;
  const long deg = s.uniform(0, max_degree);
  for (long i = 0; i <= deg; ++i) {
    Rational r(s.uniform(-coeff_range, coeff_range), s.uniform(1, max_den));
    r.canonicalize();
    c.push_back(r);
  }
  return RatPoly(std::move(c));
}

}  // namespace aqstar
