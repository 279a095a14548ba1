#pragma once

// Principal-ideal calculus in the GCD domain Z[X], plus the checks that only
// make sense there: Gauss-lemma intersections fQ[X] n Z[X] and the
// closed-form homology report available when aA n bA = abA.

#include <cstdint>
#include <string>
#include <vector>

#include "aqstar/poly.hpp"

namespace aqstar {

// Positive leading coefficient. Throws BothZero when a = b = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// ab / gcd, positive leading coefficient; generator of aA n bA.
IntPoly intersect_principal(const IntPoly& a, const IntPoly& b);
// Generator b / gcd(a, b) of (bA :_A a).
IntPoly colon_principal(const IntPoly& b, const IntPoly& a);
// a^2A n b^2A == (aA n bA)^2, both sides through lcm.
bool star_check_gcd(const IntPoly& a, const IntPoly& b);

struct GaussIntersectionReport {
  RatPoly f;
  Rational content;    // c(f); F = c(f)^-1 Z
  IntPoly primitive;   // f / c(f), so f F Z[X] = primitive * Z[X]
  std::size_t samples = 0;
  std::size_t integral = 0;   // samples with f g in Z[X]
  std::size_t mismatches = 0; // membership in Z[X] and in f F Z[X] disagreed
  std::size_t scalar_mismatches = 0;  // d f in Z[X] disagreed with d in F
  bool passed() const { return mismatches == 0 && scalar_mismatches == 0; }
};

// Random g in Q[X] drawn in strata: integral g, g with denominator c(f),
// denominators that are multiples of c(f)'s numerator, and arbitrary small
// denominators. Throws ZeroElement for f = 0.
GaussIntersectionReport gauss_intersection_check(const RatPoly& f, std::size_t samples, std::uint64_t seed);

struct CoprimeHomologyReport {
  IntPoly a, b, gcd;
  bool hypothesis_holds = false;  // aA n bA = abA
  IntPoly reduced_a, reduced_b;   // a / gcd, b / gcd: A[a/b] = A[a'/b'] and a'A n b'A = a'b'A
  std::vector<std::string> formulas;  // stated for the reduced b
};

// B = A[a/b]. Throws ZeroElement for a zero input.
CoprimeHomologyReport coprime_homology_report(const IntPoly& a, const IntPoly& b);

// "2" or "(X+1)" as a factor inside B/bB and similar.
std::string factor_string(const IntPoly& p);

}  // namespace aqstar
