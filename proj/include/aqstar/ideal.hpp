#pragma once

// Fractional ideals of a quadratic order, stored as (1/den) * L where L is a
// rank-2 integer lattice in the (1, w) frame given by its column HNF. The
// denominator is minimal, so two ideals are equal exactly when their
// representations are.

#include <array>
#include <optional>
#include <span>
#include <string>

#include "aqstar/linalg.hpp"
#include "aqstar/quadorder.hpp"

namespace aqstar {

class FracIdeal {
 public:
  // The O-module generated by `gens`; throws ZeroIdeal if every generator is 0.
  static FracIdeal from_generators(const QuadraticOrder& order, std::span<const FracElement> gens);
  static FracIdeal from_generators(const QuadraticOrder& order, std::initializer_list<FracElement> gens);
  static FracIdeal principal(const QuadraticOrder& order, const FracElement& x);
  static FracIdeal unit(const QuadraticOrder& order);
  // Lattice (1/den) * columns(lattice); the lattice must be rank 2 and
  // closed under multiplication by w (checked).
  static FracIdeal from_lattice(const QuadraticOrder& order, const IntMatrix& lattice, const Integer& den = 1);

  const QuadraticOrder& order() const { return order_; }
  const Integer& den() const { return den_; }
  const IntMatrix& basis() const { return basis_; }

  // The two HNF basis vectors as field elements; they also generate the
  // ideal as an O-module.
  std::array<FracElement, 2> generators() const;

  bool is_integral() const;
  // |det(basis)| / den^2; the index [O : I] for integral I.
  Rational norm() const;

  bool contains(const FracElement& x) const;
  // other is a subset of *this
  bool contains(const FracIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const FracIdeal& a, const FracIdeal& b) {
    return a.order_ == b.order_ && a.den_ == b.den_ && a.basis_ == b.basis_;
  }

 private:
  FracIdeal(QuadraticOrder order, IntMatrix basis, Integer den);

  QuadraticOrder order_;
  IntMatrix basis_;
  Integer den_;
};

FracIdeal sum(const FracIdeal& a, const FracIdeal& b);
FracIdeal product(const FracIdeal& a, const FracIdeal& b);
FracIdeal intersection(const FracIdeal& a, const FracIdeal& b);
FracIdeal scale(const FracIdeal& a, const FracElement& x);
FracIdeal square(const FracIdeal& a);

// (I : J) = {x in K : xJ in I}, the intersection of g^-1 I over the two
// basis generators g of J. J is nonzero by construction.
FracIdeal colon(const FracIdeal& num, const FracIdeal& den);
// (I :_O J) = (I : J) intersected with O.
FracIdeal colon_in_order(const FracIdeal& num, const FracIdeal& den);

FracIdeal inverse(const FracIdeal& a);
bool is_invertible(const FracIdeal& a);

FracIdeal divisorial_closure(const FracIdeal& a);
bool is_divisorial(const FracIdeal& a);
// (I^2)_v == I^2; meaningful for divisorial I.
bool divisorial_square_check(const FracIdeal& a);

// Invariants of outer/inner; throws ContainmentViolation if inner is not a
// subset of outer.
AbelianGroupInvariants quotient_invariants(const FracIdeal& outer, const FracIdeal& inner);

struct StabilityResult {
  bool stable = false;
  std::optional<OrderElement> witness;
  std::size_t candidates_tried = 0;
};

// Decides whether I^2 = aI for some a in I. Imaginary orders and integral
// ideals only.
StabilityResult is_stable(const FracIdeal& ideal);

}  // namespace aqstar
