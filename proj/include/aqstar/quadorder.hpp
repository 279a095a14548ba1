#pragma once

// Quadratic orders O_D = Z[w], w = (D + sqrt(D))/2, and their elements.
// Every element is stored in the canonical basis (1, w), which satisfies
// w^2 = D*w - (D^2 - D)/4.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "aqstar/linalg.hpp"

namespace aqstar {

// u + v*w
struct OrderElement {
  Integer u;
  Integer v;

  OrderElement() = default;
  OrderElement(Integer u_, Integer v_) : u(std::move(u_)), v(std::move(v_)) {}

  bool is_zero() const { return u == 0 && v == 0; }

  friend OrderElement operator+(const OrderElement& x, const OrderElement& y) { return {x.u + y.u, x.v + y.v}; }
  friend OrderElement operator-(const OrderElement& x, const OrderElement& y) { return {x.u - y.u, x.v - y.v}; }
  friend OrderElement operator-(const OrderElement& x) { return {-x.u, -x.v}; }
  friend bool operator==(const OrderElement&, const OrderElement&) = default;
  friend std::strong_ordering operator<=>(const OrderElement& x, const OrderElement& y);
};

// (u + v*w) / den with den > 0 and gcd(u, v, den) = 1.
class FracElement {
 public:
  FracElement() = default;
  FracElement(Integer u, Integer v, Integer den = 1);
  FracElement(const OrderElement& x) : u_(x.u), v_(x.v), den_(1) {}  // NOLINT(implicit)

  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_integral() const { return den_ == 1; }
  // Only valid when is_integral().
  OrderElement numerator() const { return {u_, v_}; }

  friend FracElement operator+(const FracElement& x, const FracElement& y);
  friend FracElement operator-(const FracElement& x, const FracElement& y);
  friend FracElement operator-(const FracElement& x) { return {-x.u_, -x.v_, x.den_}; }
  friend bool operator==(const FracElement&, const FracElement&) = default;
  friend std::strong_ordering operator<=>(const FracElement& x, const FracElement& y);

 private:
  Integer u_ = 0;
  Integer v_ = 0;
  Integer den_ = 1;
};

class QuadraticOrder {
 public:
  // Throws InvalidDiscriminant unless disc = 0, 1 (mod 4) and is not a square.
  explicit QuadraticOrder(const Integer& disc);

  const Integer& disc() const { return disc_; }
  const Integer& fundamental_disc() const { return fundamental_; }
  const Integer& conductor() const { return conductor_; }
  bool is_maximal() const { return conductor_ == 1; }
  bool is_imaginary() const { return disc_ < 0; }
  // disc = sqrt_scale^2 * squarefree_part; the text syntax "p+q*s" uses
  // s = sqrt(squarefree_part).
  const Integer& squarefree_part() const { return squarefree_; }
  const Integer& sqrt_scale() const { return sqrt_scale_; }
  // w^2 = disc*w - norm_constant
  const Integer& norm_constant() const { return norm_constant_; }

  OrderElement mul(const OrderElement& x, const OrderElement& y) const;
  OrderElement omega_times(const OrderElement& x) const;
  OrderElement conj(const OrderElement& x) const;
  Integer norm(const OrderElement& x) const;
  Integer trace(const OrderElement& x) const;

  FracElement mul(const FracElement& x, const FracElement& y) const;
  FracElement conj(const FracElement& x) const;
  Rational norm(const FracElement& x) const;
  // Throws ZeroDivisor for x = 0.
  FracElement inverse(const FracElement& x) const;
  FracElement divide(const FracElement& x, const FracElement& y) const;

  // x in O, i.e. x is integral over Z and lies in this order.
  bool contains(const FracElement& x) const { return x.is_integral(); }

  // p + q*sqrt(squarefree_part) in the canonical frame.
  FracElement from_sqrt_form(const Rational& p, const Rational& q) const;
  // Inverse of from_sqrt_form.
  std::pair<Rational, Rational> to_sqrt_form(const FracElement& x) const;

  // Unit group of an imaginary order (2, 4 or 6 elements). Throws
  // Unsupported for real orders, whose unit group is infinite.
  std::vector<OrderElement> units() const;
  // Lexicographically least element of {e*x : e a unit}.
  OrderElement canonical_associate(const OrderElement& x) const;

  // "p+q*s" rendering, e.g. "1+s", "1/2-3/2*s".
  std::string to_string(const FracElement& x) const;

  friend bool operator==(const QuadraticOrder& a, const QuadraticOrder& b) { return a.disc_ == b.disc_; }

 private:
  Integer disc_;
  Integer fundamental_;
  Integer conductor_;
  Integer squarefree_;
  Integer sqrt_scale_;
  Integer norm_constant_;
};

QuadraticOrder make_order(const Integer& disc);

// Parses "u,v", "u,v,den" (canonical coordinates) or an expression in s and
// w, e.g. "1+s", "(1+s)/2", "3-2*w".
FracElement parse_element(const QuadraticOrder& order, std::string_view text);
// As parse_element, but throws ParseError when the value is not in the order.
OrderElement parse_order_element(const QuadraticOrder& order, std::string_view text);

// All nonzero elements with norm <= bound, ordered by (norm, u, v). Only
// imaginary orders are supported; bound < 1 gives an empty list.
std::vector<OrderElement> enumerate_by_norm(const QuadraticOrder& order, long bound);
// One canonical associate per principal ideal, same ordering.
std::vector<OrderElement> enumerate_canonical_by_norm(const QuadraticOrder& order, long bound);

enum class TwoRootVerdict { in_order, violation, not_applicable };

std::string_view to_string(TwoRootVerdict v);

// Classifies x against 2-root closedness: violation iff x^2 in O and x not in O.
TwoRootVerdict two_root_closed_element(const QuadraticOrder& order, const FracElement& x);

struct TwoRootScan {
  std::size_t fractions_checked = 0;
  std::vector<FracElement> violations;
};

// Classifies every reduced a/b with 0 < N(a), N(b) <= norm_bound (b up to
// units). Imaginary orders only.
TwoRootScan two_root_scan(const QuadraticOrder& order, long norm_bound);

}  // namespace aqstar
