#pragma once

// Dense univariate polynomials over Z and Q, ascending coefficients with no
// trailing zeros (the zero polynomial has no coefficients).

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqstar/linalg.hpp"

namespace aqstar {

template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const R& constant) : c_{constant} { trim(); }  // NOLINT: implicit constants read well
  Polynomial(long constant) : Polynomial(R(constant)) {}    // NOLINT

  static Polynomial monomial(const R& coeff, std::size_t degree) {
    std::vector<R> c(degree + 1);
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(R(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<R> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

Integer content(const IntPoly& p);  // positive; 0 for the zero polynomial
IntPoly primitive_part(const IntPoly& p);
// Sign flipped so the leading coefficient is positive.
IntPoly normalize_sign(const IntPoly& p);

RatPoly to_rational(const IntPoly& p);
// Positive c with p = c * q, q primitive in Z[X]. Zero for p = 0.
Rational rational_content(const RatPoly& p);
IntPoly primitive_integer_part(const RatPoly& p);
bool has_integer_coefficients(const RatPoly& p);
IntPoly to_integer(const RatPoly& p);  // throws std::invalid_argument if not integral

// Euclidean division over Q; throws ZeroDivisor for b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly make_monic(const RatPoly& p);
// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly monic_gcd(RatPoly a, RatPoly b);
RatPoly scale(const RatPoly& p, const Rational& c);

// "3*X^2-1/2*X+4"; "0" for zero.
std::string to_string(const IntPoly& p, std::string_view var = "X");
std::string to_string(const RatPoly& p, std::string_view var = "X");

// Accepts either case of the variable letter; throws ParseError.
RatPoly parse_rat_poly(std::string_view text, char var = 'x');
IntPoly parse_int_poly(std::string_view text, char var = 'x');

// Seeded source used by every sampling routine. Drawing by modulo keeps
// sequences identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }
  long nonzero(long range) {
    long v = 0;
    while (v == 0) v = uniform(-range, range);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

IntPoly random_int_poly(Sampler& s, long max_degree, long coeff_range);
// Nonzero rational coefficients drawn as n/d, |n| <= coeff_range, 1 <= d <= max_den.
RatPoly random_rat_poly(Sampler& s, long max_degree, long coeff_range, long max_den);

}  // namespace aqstar
