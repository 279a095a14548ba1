#pragma once

// The ring A = Q + xL[x], L = Q(y), inside L[x], together with
// B = Q[y] + xL[x]. Elements are polynomials in x whose coefficients are
// reduced rational functions in y.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqstar/poly.hpp"

namespace aqstar {

// num / den in lowest terms, den monic; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(RatPoly num, RatPoly den);
  static RatFunc y() { return RatFunc(RatPoly::x(), RatPoly(Rational(1))); }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  Rational constant_value() const;  // requires is_constant()

  RatFunc inverse() const;  // throws ZeroDivisor

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  RatPoly num_, den_;
};

std::string to_string(const RatFunc& f);

class KxlElement {
 public:
  KxlElement() = default;
  KxlElement(const RatFunc& c) { set(0, c); }  // NOLINT
  static KxlElement x_power(std::size_t i, const RatFunc& c = Rational(1));

  const std::map<std::size_t, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(std::size_t i) const;
  // Lowest x-exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> ord_x() const;
  std::optional<std::size_t> degree() const;

  friend KxlElement operator+(const KxlElement& a, const KxlElement& b);
  friend KxlElement operator-(const KxlElement& a);
  friend KxlElement operator-(const KxlElement& a, const KxlElement& b) { return a + (-b); }
  friend KxlElement operator*(const KxlElement& a, const KxlElement& b);
  friend bool operator==(const KxlElement&, const KxlElement&) = default;

 private:
  void set(std::size_t i, const RatFunc& c);
  std::map<std::size_t, RatFunc> terms_;
};

std::string to_string(const KxlElement& f);
// "x^2*(y/(y+1)) + x*(3/2)"; throws ParseError.
KxlElement parse_kxl(std::string_view text);

// Exact division in L[x]; nullopt when c does not divide f. ZeroDivisor for c = 0.
std::optional<KxlElement> divide_exact(const KxlElement& f, const KxlElement& c);

bool in_A(const KxlElement& f);
bool in_B(const KxlElement& f);
// f in cA. ZeroElement for c = 0.
bool in_principal(const KxlElement& c, const KxlElement& f);

struct StratumCounts {
  std::string name;
  std::size_t samples = 0;
  std::size_t in_first = 0;    // f in yxA and f in xA
  std::size_t in_second = 0;   // f in (yx)^2A and f in x^2A
  std::size_t first_counterexamples = 0;
  std::size_t second_counterexamples = 0;
};

struct KxlIntersectionReport {
  std::vector<StratumCounts> strata;
  std::size_t sweep_checked = 0;
  std::size_t sweep_failures = 0;
  std::vector<std::string> annotations;  // quoted conclusions, not computed
  bool passed() const;
  std::size_t total_samples() const;
};

// samples per stratum; random tail coefficients up to x^degree_bound.
// Throws std::invalid_argument for samples == 0 or degree_bound < 3.
KxlIntersectionReport kxl_intersection_check(std::size_t samples, std::uint64_t seed, std::size_t degree_bound = 4);

}  // namespace aqstar
