#include "aqstar/ufd.hpp"

#include "aqstar/errors.hpp"

namespace aqstar {

namespace {

void require_nonzero(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroElement("Z[X] principal ideal of 0");
}

// a / b where b divides a in Z[X].
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero() || !has_integer_coefficients(q)) throw InvariantViolation("inexact division in Z[X]");
  return to_integer(q);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0)");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  // Gauss: gcd = gcd(contents) * primitive part of the gcd over Q.
  const Integer c = gcd(content(a), content(b));
  const IntPoly g = primitive_part(normalize_sign(primitive_integer_part(monic_gcd(to_rational(a), to_rational(b)))));
  return normalize_sign(IntPoly(c) * g);
}

IntPoly intersect_principal(const IntPoly& a, const IntPoly& b) {
  require_nonzero(a, b);
  return normalize_sign(exact_quotient(a * b, poly_gcd(a, b)));
}

IntPoly colon_principal(const IntPoly& b, const IntPoly& a) {
  require_nonzero(a, b);
  return normalize_sign(exact_quotient(b, poly_gcd(a, b)));
}

bool star_check_gcd(const IntPoly& a, const IntPoly& b) {
  require_nonzero(a, b);
  const IntPoly m = intersect_principal(a, b);
  return intersect_principal(a * a, b * b) == normalize_sign(m * m);
}

GaussIntersectionReport gauss_intersection_check(const RatPoly& f, std::size_t samples, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroElement("gauss_intersection_check needs f != 0");
  GaussIntersectionReport rep;
  rep.f = f;
  rep.content = rational_content(f);
  rep.primitive = primitive_integer_part(f);
  rep.samples = samples;
  const RatPoly f0 = to_rational(rep.primitive);
  const Integer n = rep.content.get_num(), d = rep.content.get_den();

  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RatPoly h = to_rational(random_int_poly(s, 4, 20));
    Rational factor;
    switch (i % 4) {
      case 0: factor = 1; break;
      case 1: factor = Rational(d, n); break;  // boundary: g = c(f)^-1 h
      case 2: factor = Rational(d, n * s.uniform(2, 12)); break;
      default: factor = Rational(1, s.uniform(1, 12)); break;
    }
    factor.canonicalize();
    const RatPoly fg = f * scale(h, factor);
    const bool in_zx = has_integer_coefficients(fg);
    auto [q, r] = divmod(fg, f0);
    const bool in_ffzx = r.is_zero() && has_integer_coefficients(q);
    rep.integral += in_zx;
    rep.mismatches += in_zx != in_ffzx;

    // F itself: t f in Z[X] iff t in c(f)^-1 Z.
    Rational t(s.uniform(-40, 40), s.uniform(1, 24));
    t.canonicalize();
    const Rational tc = t * rep.content;
    rep.scalar_mismatches += has_integer_coefficients(scale(f, t)) != (tc.get_den() == 1);
  }
  return rep;
}

std::string factor_string(const IntPoly& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coeffs()) terms += c != 0;
  const std::string s = to_string(p);
  return terms <= 1 && p.leading() > 0 ? s : "(" + s + ")";
}

CoprimeHomologyReport coprime_homology_report(const IntPoly& a, const IntPoly& b) {
  require_nonzero(a, b);
  CoprimeHomologyReport rep;
  rep.a = a;
  rep.b = b;
  rep.gcd = poly_gcd(a, b);
  rep.hypothesis_holds = intersect_principal(a, b) == normalize_sign(a * b);
  if (rep.hypothesis_holds != (rep.gcd == IntPoly(1)))
    throw InvariantViolation("aA n bA = abA disagrees with gcd being a unit");
  rep.reduced_a = exact_quotient(a, rep.gcd);
  rep.reduced_b = exact_quotient(b, rep.gcd);
  const std::string bb = factor_string(normalize_sign(rep.reduced_b));
  rep.formulas = {
      "Ω_{B/A} ≅ B/" + bb + "B",
      "H_1(A,B,E) ≅ 0:_E " + bb,
      "H_2(A,B,E) = 0",
      "H^1(A,B,E) ≅ E/" + bb + "E",
      "H^2(A,B,E) = 0",
  };
  return rep;
}

}  // namespace aqstar
