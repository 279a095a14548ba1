#include "aqstar/quadorder.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "aqstar/errors.hpp"
#include "aqstar/expr_parser.hpp"

namespace aqstar {

std::strong_ordering operator<=>(const OrderElement& x, const OrderElement& y) {
  if (int c = cmp(x.u, y.u); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(x.v, y.v); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

FracElement::FracElement(Integer u, Integer v, Integer den) : u_(std::move(u)), v_(std::move(v)), den_(std::move(den)) {
  if (den_ == 0) throw ZeroDivisor("FracElement: zero denominator");
  if (den_ < 0) {
    u_ = -u_;
    v_ = -v_;
    den_ = -den_;
  }
  if (u_ == 0 && v_ == 0) {
    den_ = 1;
    return;
  }
  Integer g = gcd(gcd(u_, v_), den_);
  if (g != 1) {
    u_ /= g;
    v_ /= g;
    den_ /= g;
  }
}

FracElement operator+(const FracElement& x, const FracElement& y) {
  return {x.u_ * y.den_ + y.u_ * x.den_, x.v_ * y.den_ + y.v_ * x.den_, x.den_ * y.den_};
}

FracElement operator-(const FracElement& x, const FracElement& y) { return x + (-y); }

std::strong_ordering operator<=>(const FracElement& x, const FracElement& y) {
  for (auto [a, b] : {std::pair{&x.u_, &y.u_}, std::pair{&x.v_, &y.v_}, std::pair{&x.den_, &y.den_}}) {
    if (int c = cmp(*a, *b); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

// Largest square divisor's root k and squarefree s with n = k^2 * s (n > 0).
std::pair<Integer, Integer> split_square(Integer n) {
  Integer k = 1, s = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  }
  s *= n;
  return {k, s};
}

long mod4(const Integer& x) { return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), 4)); }

Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace

QuadraticOrder::QuadraticOrder(const Integer& disc) : disc_(disc) {
  const long r = mod4(disc);
  if (r != 0 && r != 1)
    throw InvalidDiscriminant("discriminant " + disc.get_str() + " is not 0 or 1 mod 4");
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
    throw InvalidDiscriminant("discriminant " + disc.get_str() + " is a perfect square");

  auto [k, s] = split_square(abs(disc));
  squarefree_ = disc < 0 ? Integer(-s) : s;
  sqrt_scale_ = k;
  if (mod4(squarefree_) == 1) {
    fundamental_ = squarefree_;
    conductor_ = k;
  } else {
    fundamental_ = 4 * squarefree_;
    conductor_ = k / 2;
  }
  norm_constant_ = (disc_ * disc_ - disc_) / 4;
}

QuadraticOrder make_order(const Integer& disc) { return QuadraticOrder(disc); }

OrderElement QuadraticOrder::mul(const OrderElement& x, const OrderElement& y) const {
  const Integer vv = x.v * y.v;
  return {x.u * y.u - vv * norm_constant_, x.u * y.v + x.v * y.u + disc_ * vv};
}

OrderElement QuadraticOrder::omega_times(const OrderElement& x) const {
  return {-norm_constant_ * x.v, x.u + disc_ * x.v};
}

OrderElement QuadraticOrder::conj(const OrderElement& x) const { return {x.u + disc_ * x.v, -x.v}; }

Integer QuadraticOrder::norm(const OrderElement& x) const {
  return x.u * x.u + disc_ * x.u * x.v + norm_constant_ * x.v * x.v;
}

Integer QuadraticOrder::trace(const OrderElement& x) const { return 2 * x.u + disc_ * x.v; }

FracElement QuadraticOrder::mul(const FracElement& x, const FracElement& y) const {
  OrderElement p = mul(OrderElement{x.u(), x.v()}, OrderElement{y.u(), y.v()});
  return {p.u, p.v, x.den() * y.den()};
}

FracElement QuadraticOrder::conj(const FracElement& x) const {
  OrderElement c = conj(OrderElement{x.u(), x.v()});
  return {c.u, c.v, x.den()};
}

Rational QuadraticOrder::norm(const FracElement& x) const {
  Rational n(norm(OrderElement{x.u(), x.v()}), x.den() * x.den());
  n.canonicalize();
  return n;
}

FracElement QuadraticOrder::inverse(const FracElement& x) const {
  if (x.is_zero()) throw ZeroDivisor("inverse of zero");
  OrderElement c = conj(OrderElement{x.u(), x.v()});
  const Integer n = norm(OrderElement{x.u(), x.v()});
  return {c.u * x.den(), c.v * x.den(), n};
}

FracElement QuadraticOrder::divide(const FracElement& x, const FracElement& y) const { return mul(x, inverse(y)); }

FracElement QuadraticOrder::from_sqrt_form(const Rational& p, const Rational& q) const {
  // sqrt(squarefree) = (2w - disc) / sqrt_scale
  Rational u = p - q * Rational(disc_) / Rational(sqrt_scale_);
  Rational v = 2 * q / Rational(sqrt_scale_);
  u.canonicalize();
  v.canonicalize();
  Integer den = lcm(u.get_den(), v.get_den());
  return {u.get_num() * (den / u.get_den()), v.get_num() * (den / v.get_den()), den};
}

std::pair<Rational, Rational> QuadraticOrder::to_sqrt_form(const FracElement& x) const {
  Rational p(2 * x.u() + x.v() * disc_, 2 * x.den());
  Rational q(x.v() * sqrt_scale_, 2 * x.den());
  p.canonicalize();
  q.canonicalize();
  return {p, q};
}

std::vector<OrderElement> QuadraticOrder::units() const {
  if (!is_imaginary()) throw Unsupported("unit group of a real quadratic order is infinite");
  return enumerate_by_norm(*this, 1);
}

OrderElement QuadraticOrder::canonical_associate(const OrderElement& x) const {
  OrderElement best = x;
  bool first = true;
  for (const auto& e : units()) {
    OrderElement y = mul(e, x);
    if (first || y < best) best = y;
    first = false;
  }
  return best;
}

std::string QuadraticOrder::to_string(const FracElement& x) const {
  auto [p, q] = to_sqrt_form(x);
  std::ostringstream os;
  if (q == 0) return p.get_str();
  if (p != 0) os << p.get_str() << (q > 0 ? "+" : "");
  if (q == 1)
    os << "s";
  else if (q == -1)
    os << "-s";
  else
    os << q.get_str() << "*s";
  return os.str();
}

namespace {

struct QuadraticOps {
  const QuadraticOrder& order;

  FracElement constant(const Rational& r) const { return {r.get_num(), 0, r.get_den()}; }
  FracElement variable(std::string_view name) const {
    if (name == "s") return order.from_sqrt_form(0, 1);
    if (name == "w") return FracElement(0, 1);
    throw ParseError("unknown symbol '" + std::string(name) + "' (expected s or w)");
  }
  FracElement add(const FracElement& a, const FracElement& b) const { return a + b; }
  FracElement sub(const FracElement& a, const FracElement& b) const { return a - b; }
  FracElement mul(const FracElement& a, const FracElement& b) const { return order.mul(a, b); }
  FracElement neg(const FracElement& a) const { return -a; }
  FracElement divide(const FracElement& a, const FracElement& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return order.divide(a, b);
  }
};

Integer parse_integer(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty()) throw ParseError("empty coordinate");
  Integer x;
  if (x.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw ParseError("bad integer '" + t + "'");
  return x;
}

}  // namespace

FracElement parse_element(const QuadraticOrder& order, std::string_view text) {
  if (text.find(',') != std::string_view::npos) {
    std::vector<Integer> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      parts.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (parts.size() == 2) return {parts[0], parts[1]};
    if (parts.size() == 3) {
      if (parts[2] == 0) throw ParseError("zero denominator");
      return {parts[0], parts[1], parts[2]};
    }
    throw ParseError("expected \"u,v\" or \"u,v,den\"");
  }
  return parse_expression(text, QuadraticOps{order});
}

OrderElement parse_order_element(const QuadraticOrder& order, std::string_view text) {
  FracElement x = parse_element(order, text);
  if (!order.contains(x)) throw ParseError("\"" + std::string(text) + "\" is not an element of the order");
  return x.numerator();
}

std::vector<OrderElement> enumerate_by_norm(const QuadraticOrder& order, long bound) {
  if (!order.is_imaginary()) throw Unsupported("norm enumeration requires an imaginary order");
  std::vector<std::pair<Integer, OrderElement>> found;
  if (bound >= 1) {
    const Integer& d = order.disc();
    const Integer absd = abs(d);
    const Integer b4 = 4 * Integer(bound);
    // 4N = (2u + D v)^2 + |D| v^2
    const Integer vmax = isqrt(b4 / absd);
    for (Integer v = -vmax; v <= vmax; ++v) {
      const Integer rest = b4 - absd * v * v;
      if (rest < 0) continue;
      const Integer s = isqrt(rest);
      Integer lo, hi;
      Integer a = -s - d * v, b = s - d * v;
      mpz_cdiv_q_ui(lo.get_mpz_t(), a.get_mpz_t(), 2);
      mpz_fdiv_q_ui(hi.get_mpz_t(), b.get_mpz_t(), 2);
      for (Integer u = lo; u <= hi; ++u) {
        OrderElement x{u, v};
        if (x.is_zero()) continue;
        Integer n = order.norm(x);
        if (n <= bound) found.emplace_back(std::move(n), std::move(x));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<OrderElement> out;
  out.reserve(found.size());
  for (auto& [n, x] : found) out.push_back(std::move(x));
  return out;
}

std::vector<OrderElement> enumerate_canonical_by_norm(const QuadraticOrder& order, long bound) {
  std::vector<OrderElement> out;
  for (const auto& x : enumerate_by_norm(order, bound))
    if (order.canonical_associate(x) == x) out.push_back(x);
  return out;
}

std::string_view to_string(TwoRootVerdict v) {
  switch (v) {
    case TwoRootVerdict::in_order: return "in_order";
    case TwoRootVerdict::violation: return "violation";
    case TwoRootVerdict::not_applicable: return "not_applicable";
  }
  return "?";
}

TwoRootVerdict two_root_closed_element(const QuadraticOrder& order, const FracElement& x) {
  if (x.is_zero()) throw ZeroElement("two_root_closed_element: x must be nonzero");
  if (order.contains(x)) return TwoRootVerdict::in_order;
  return order.contains(order.mul(x, x)) ? TwoRootVerdict::violation : TwoRootVerdict::not_applicable;
}

TwoRootScan two_root_scan(const QuadraticOrder& order, long norm_bound) {
  if (!order.is_imaginary()) throw Unsupported("two_root_scan requires an imaginary order");
  const auto numerators = enumerate_by_norm(order, norm_bound);
  const auto denominators = enumerate_canonical_by_norm(order, norm_bound);
  std::set<FracElement> fractions;
  for (const auto& b : denominators) {
    const FracElement binv = order.inverse(FracElement(b));
    for (const auto& a : numerators) fractions.insert(order.mul(FracElement(a), binv));
  }
  TwoRootScan scan;
  scan.fractions_checked = fractions.size();
  for (const auto& x : fractions)
    if (two_root_closed_element(order, x) == TwoRootVerdict::violation) scan.violations.push_back(x);
  return scan;
}

}  // namespace aqstar
