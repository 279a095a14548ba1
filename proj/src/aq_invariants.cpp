#include "aqstar/aq_invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "aqstar/errors.hpp"

namespace aqstar {

namespace {

void require_nonzero(std::initializer_list<const OrderElement*> xs) {
  for (const auto* x : xs)
    if (x->is_zero()) throw ZeroElement("elements must be nonzero");
}

FracIdeal principal(const QuadraticOrder& order, const OrderElement& x) { return FracIdeal::principal(order, x); }

// The ideals every computation for the pair (a, b) starts from.
struct PairIdeals {
  FracIdeal a;
  FracIdeal b;
  FracIdeal meet;       // aA n bA
  FracIdeal conductor;  // (bA :_A a)

  PairIdeals(const QuadraticOrder& order, const OrderElement& x, const OrderElement& y)
      : a(principal(order, x)),
        b(principal(order, y)),
        meet(intersection(a, b)),
        conductor(colon_in_order(b, a)) {}
};

void push_coords(IntVector& v, std::size_t at, const OrderElement& x) {
  v[at] = x.u;
  v[at + 1] = x.v;
}

}  // namespace

StarVerdict star_pair(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  require_nonzero({&a, &b});
  const PairIdeals p(order, a, b);
  const OrderElement a2 = order.mul(a, a), b2 = order.mul(b, b);
  const FracIdeal a2_ideal = principal(order, a2), b2_ideal = principal(order, b2);

  StarVerdict v{false, intersection(a2_ideal, b2_ideal), square(p.meet), colon_in_order(b2_ideal, a2_ideal),
                square(p.conductor)};
  v.holds = v.lhs == v.rhs;
  if (!v.lhs.contains(v.rhs)) throw InvariantViolation("(aA n bA)^2 is not contained in a^2A n b^2A");
  if (v.holds != (v.colon_of_squares == v.squared_colon))
    throw InvariantViolation("intersection and colon forms of the star condition disagree");
  return v;
}

StarScanResult star_scan(const QuadraticOrder& order, long norm_bound, std::size_t budget) {
  if (!order.is_imaginary()) throw Unsupported("star_scan requires an imaginary order");
  const auto elems = enumerate_canonical_by_norm(order, norm_bound);
  std::vector<Integer> norms;
  norms.reserve(elems.size());
  for (const auto& x : elems) norms.push_back(order.norm(x));

  std::vector<std::tuple<Integer, std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(norms[j], i, j);  // elems ascend by norm
  std::sort(pairs.begin(), pairs.end());

  StarScanResult result;
  for (const auto& [n, i, j] : pairs) {
    if (budget != 0 && result.pairs_checked == budget) {
      result.budget_exhausted = true;
      break;
    }
    ++result.pairs_checked;
    if (!star_pair(order, elems[i], elems[j]).holds) result.violations.push_back({elems[i], elems[j]});
  }
  return result;
}

AbelianGroupInvariants omega_coeff_group(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  require_nonzero({&a, &b});
  const PairIdeals p(order, a, b);
  return quotient_invariants(principal(order, order.mul(a, b)), product(sum(p.a, p.b), p.meet));
}

AbelianGroupInvariants h1_coeff_group(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  const StarVerdict v = star_pair(order, a, b);
  return quotient_invariants(v.lhs, v.rhs);
}

AnnihilationChecks annihilation_checks(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  require_nonzero({&a, &b});
  const PairIdeals p(order, a, b);
  const FracIdeal lhs = intersection(principal(order, order.mul(a, a)), principal(order, order.mul(b, b)));
  AnnihilationChecks out;
  out.omega_module = product(sum(p.a, p.b), p.meet).contains(scale(p.conductor, order.mul(a, b)));
  out.h1_module = square(p.meet).contains(product(lhs, p.conductor));
  return out;
}

bool invertibility_crosscheck(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  if (!order.is_maximal())
    throw NotIntegrallyClosed("order of discriminant " + order.disc().get_str() + " is not integrally closed");
  require_nonzero({&a, &b});
  const bool omega_trivial = omega_coeff_group(order, a, b).is_trivial();
  const bool invertible = is_invertible(sum(principal(order, a), principal(order, b)));
  return omega_trivial == invertible;
}

bool four_term_identity(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b,
                        const OrderElement& c, const OrderElement& d) {
  require_nonzero({&a, &b, &c, &d});
  auto p = [&](const OrderElement& x, const OrderElement& y) { return principal(order, order.mul(x, y)); };
  const FracIdeal lhs = product(intersection(principal(order, a), principal(order, b)),
                                intersection(principal(order, c), principal(order, d)));
  const FracIdeal rhs = intersection(intersection(p(a, c), p(a, d)), intersection(p(b, c), p(b, d)));
  return lhs == rhs;
}

SymmetricSquarePresentation symmetric_square_presentation(const FracIdeal& ideal) {
  if (!ideal.is_integral()) throw std::invalid_argument("syzygetic kernel requires an integral ideal");
  const auto& order = ideal.order();
  const auto gens = ideal.generators();
  const OrderElement g1 = gens[0].numerator(), g2 = gens[1].numerator();
  auto col = [](const OrderElement& x) { return IntVector{x.u, x.v}; };

  SymmetricSquarePresentation p;
  p.generators = {g1, g2};

  // (x, y) -> x g1 + y g2 on Z^4 = A^2
  const IntMatrix pairing = IntMatrix::from_columns(
      2, {col(g1), col(order.omega_times(g1)), col(g2), col(order.omega_times(g2))});
  p.syzygies = kernel_basis(pairing);

  const OrderElement g11 = order.mul(g1, g1), g12 = order.mul(g1, g2), g22 = order.mul(g2, g2);
  p.evaluation = IntMatrix::from_columns(2, {col(g11), col(order.omega_times(g11)), col(g12),
                                             col(order.omega_times(g12)), col(g22), col(order.omega_times(g22))});

  // A syzygy (x, y) gives x G11 + y G12 and x G12 + y G22; their w-multiples
  // are the relations of w (x, y), included so the lattice is visibly w-closed.
  std::vector<IntVector> rels;
  for (const auto& s : p.syzygies.columns()) {
    OrderElement x{s[0], s[1]}, y{s[2], s[3]};
    for (int k = 0; k < 2; ++k) {
      IntVector r1(6), r2(6);
      push_coords(r1, 0, x);
      push_coords(r1, 2, y);
      push_coords(r2, 2, x);
      push_coords(r2, 4, y);
      rels.push_back(std::move(r1));
      rels.push_back(std::move(r2));
      x = order.omega_times(x);
      y = order.omega_times(y);
    }
  }
  p.relations = hnf(IntMatrix::from_columns(6, rels));
  p.kernel = kernel_basis(p.evaluation);
  if (!(p.evaluation * p.relations).is_zero())
    throw InvariantViolation("evaluation S_2(J) -> J^2 does not vanish on the relations");
  return p;
}

SyzygeticResult syzygetic_kernel(const FracIdeal& ideal) {
  SyzygeticResult r;
  r.presentation = symmetric_square_presentation(ideal);
  r.kernel = lattice_quotient_invariants(r.presentation.kernel, r.presentation.relations);
  r.syzygetic = r.kernel.is_trivial();
  return r;
}

AqReport aq_report(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b) {
  require_nonzero({&a, &b});
  const PairIdeals p(order, a, b);
  AqReport r{order,
             a,
             b,
             order.is_maximal(),
             p.conductor,
             omega_coeff_group(order, a, b),
             h1_coeff_group(order, a, b),
             star_pair(order, a, b),
             annihilation_checks(order, a, b),
             syzygetic_kernel(p.meet).kernel,
             order.is_maximal()};
  if (r.h1_coeff.is_trivial() != r.star.holds)
    throw InvariantViolation("first-homology coefficient group and star verdict disagree");
  return r;
}

}  // namespace aqstar
