#include "aqstar/ideal.hpp"

#include <sstream>
#include <stdexcept>

#include "aqstar/errors.hpp"

namespace aqstar {

namespace {

void require_same_order(const FracIdeal& a, const FracIdeal& b) {
  if (!(a.order() == b.order())) throw std::invalid_argument("ideals belong to different orders");
}

IntVector coords(const OrderElement& x) { return {x.u, x.v}; }

IntMatrix scaled(const IntMatrix& m, const Integer& f) {
  IntMatrix out = m;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= f;
  return out;
}

}  // namespace

FracIdeal::FracIdeal(QuadraticOrder order, IntMatrix basis, Integer den)
    : order_(std::move(order)), basis_(std::move(basis)), den_(std::move(den)) {
  basis_ = hnf(basis_);
  if (basis_.cols() != 2) throw ZeroIdeal("lattice does not have rank 2");
  Integer g = gcd(basis_.content(), den_);
  if (g != 1) {
    den_ /= g;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) basis_(r, c) /= g;
  }
}

FracIdeal FracIdeal::from_generators(const QuadraticOrder& order, std::span<const FracElement> gens) {
  Integer den = 1;
  for (const auto& g : gens) den = lcm(den, g.den());
  std::vector<IntVector> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Integer f = den / g.den();
    OrderElement x{g.u() * f, g.v() * f};
    cols.push_back(coords(x));
    cols.push_back(coords(order.omega_times(x)));
  }
  if (cols.empty()) throw ZeroIdeal("ideal generated by zero elements");
  return FracIdeal(order, IntMatrix::from_columns(2, cols), den);
}

FracIdeal FracIdeal::from_generators(const QuadraticOrder& order, std::initializer_list<FracElement> gens) {
  return from_generators(order, std::span<const FracElement>(gens.begin(), gens.size()));
}

FracIdeal FracIdeal::principal(const QuadraticOrder& order, const FracElement& x) {
  if (x.is_zero()) throw ZeroElement("principal ideal of zero");
  return from_generators(order, {x});
}

FracIdeal FracIdeal::unit(const QuadraticOrder& order) { return FracIdeal(order, IntMatrix::identity(2), 1); }

FracIdeal FracIdeal::from_lattice(const QuadraticOrder& order, const IntMatrix& lattice, const Integer& den) {
  if (lattice.rows() != 2) throw std::invalid_argument("ideal lattice must have 2 rows");
  if (den <= 0) throw std::invalid_argument("ideal denominator must be positive");
  FracIdeal ideal(order, lattice, den);
  for (const auto& col : ideal.basis_.columns()) {
    OrderElement w = order.omega_times(OrderElement{col[0], col[1]});
    if (!solve_in_lattice(ideal.basis_, coords(w))) throw std::invalid_argument("lattice is not an O-module");
  }
  return ideal;
}

std::array<FracElement, 2> FracIdeal::generators() const {
  return {FracElement(basis_(0, 0), basis_(1, 0), den_), FracElement(basis_(0, 1), basis_(1, 1), den_)};
}

bool FracIdeal::is_integral() const { return den_ == 1; }

Rational FracIdeal::norm() const {
  Rational n(abs(determinant(basis_)), den_ * den_);
  n.canonicalize();
  return n;
}

bool FracIdeal::contains(const FracElement& x) const {
  const Integer u = x.u() * den_, v = x.v() * den_;
  if (!mpz_divisible_p(u.get_mpz_t(), x.den().get_mpz_t()) || !mpz_divisible_p(v.get_mpz_t(), x.den().get_mpz_t()))
    return false;
  return solve_in_lattice(basis_, {u / x.den(), v / x.den()}).has_value();
}

bool FracIdeal::contains(const FracIdeal& other) const {
  require_same_order(*this, other);
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::string FracIdeal::to_string() const {
  auto g = generators();
  return "(" + order_.to_string(g[0]) + ", " + order_.to_string(g[1]) + ")";
}

FracIdeal sum(const FracIdeal& a, const FracIdeal& b) {
  require_same_order(a, b);
  const Integer den = lcm(a.den(), b.den());
  IntMatrix m = scaled(a.basis(), den / a.den()).hconcat(scaled(b.basis(), den / b.den()));
  return FracIdeal::from_lattice(a.order(), m, den);
}

FracIdeal product(const FracIdeal& a, const FracIdeal& b) {
  require_same_order(a, b);
  const auto& order = a.order();
  std::vector<IntVector> cols;
  for (const auto& x : a.basis().columns())
    for (const auto& y : b.basis().columns())
      cols.push_back(coords(order.mul(OrderElement{x[0], x[1]}, OrderElement{y[0], y[1]})));
  return FracIdeal::from_lattice(order, IntMatrix::from_columns(2, cols), a.den() * b.den());
}

FracIdeal intersection(const FracIdeal& a, const FracIdeal& b) {
  require_same_order(a, b);
  const Integer den = lcm(a.den(), b.den());
  const IntMatrix la = scaled(a.basis(), den / a.den());
  const IntMatrix lb = scaled(b.basis(), den / b.den());
  // la x = lb y  <=>  (x, y) in ker [la | -lb]
  const IntMatrix k = kernel_basis(la.hconcat(scaled(lb, -1)));
  IntMatrix top(2, k.cols());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) top(r, c) = k(r, c);
  return FracIdeal::from_lattice(a.order(), la * top, den);
}

FracIdeal scale(const FracIdeal& a, const FracElement& x) {
  if (x.is_zero()) throw ZeroElement("scaling an ideal by zero");
  const auto& order = a.order();
  const OrderElement num{x.u(), x.v()};
  std::vector<IntVector> cols;
  for (const auto& c : a.basis().columns()) cols.push_back(coords(order.mul(OrderElement{c[0], c[1]}, num)));
  return FracIdeal::from_lattice(order, IntMatrix::from_columns(2, cols), a.den() * x.den());
}

FracIdeal square(const FracIdeal& a) { return product(a, a); }

FracIdeal colon(const FracIdeal& num, const FracIdeal& den) {
  require_same_order(num, den);
  const auto& order = num.order();
  auto g = den.generators();
  return intersection(scale(num, order.inverse(g[0])), scale(num, order.inverse(g[1])));
}

FracIdeal colon_in_order(const FracIdeal& num, const FracIdeal& den) {
  return intersection(colon(num, den), FracIdeal::unit(num.order()));
}

FracIdeal inverse(const FracIdeal& a) { return colon(FracIdeal::unit(a.order()), a); }

bool is_invertible(const FracIdeal& a) { return product(a, inverse(a)) == FracIdeal::unit(a.order()); }

FracIdeal divisorial_closure(const FracIdeal& a) { return inverse(inverse(a)); }

bool is_divisorial(const FracIdeal& a) { return divisorial_closure(a) == a; }

bool divisorial_square_check(const FracIdeal& a) { return is_divisorial(square(a)); }

AbelianGroupInvariants quotient_invariants(const FracIdeal& outer, const FracIdeal& inner) {
  require_same_order(outer, inner);
  const Integer den = lcm(outer.den(), inner.den());
  return lattice_quotient_invariants(scaled(outer.basis(), den / outer.den()), scaled(inner.basis(), den / inner.den()));
}

StabilityResult is_stable(const FracIdeal& ideal) {
  const auto& order = ideal.order();
  if (!order.is_imaginary()) throw Unsupported("stability search requires an imaginary order");
  if (!ideal.is_integral()) throw std::invalid_argument("stability search requires an integral ideal");

  // I^2 = aI forces [O : I^2] = |N(a)| [O : I], so only one norm can occur.
  const FracIdeal sq = square(ideal);
  const Integer n1 = ideal.norm().get_num();
  const Integer n2 = sq.norm().get_num();
  StabilityResult result;
  if (!mpz_divisible_p(n2.get_mpz_t(), n1.get_mpz_t())) return result;
  const Integer target = n2 / n1;

  auto try_candidate = [&](const OrderElement& a) {
    if (a.is_zero() || abs(order.norm(a)) != target) return false;
    ++result.candidates_tried;
    if (!ideal.contains(FracElement(a)) || !(scale(ideal, a) == sq)) return false;
    result.stable = true;
    result.witness = a;
    return true;
  };

  // The generator pair (g1, g2) and g1 - g2 first, then every canonical
  // associate of the forced norm; unit multiples give the same aI.
  auto g = ideal.generators();
  const OrderElement g1 = g[0].numerator(), g2 = g[1].numerator();
  for (const auto& a : {g1, g2, g1 - g2})
    if (try_candidate(a)) return result;
  if (!target.fits_slong_p()) throw Unsupported("stability search: norm out of enumeration range");
  for (const auto& a : enumerate_canonical_by_norm(order, target.get_si()))
    if (order.norm(a) == target && try_candidate(a)) return result;
  return result;
}

}  // namespace aqstar
