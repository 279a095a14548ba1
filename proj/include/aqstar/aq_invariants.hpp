#pragma once

// Invariants of the simple over-ring B = A[a/b] of a quadratic order A:
// the star condition a^2A n b^2A = (aA n bA)^2, the coefficient groups of
// the differential module and of first homology, the annihilation
// inclusions and the kernel of S_2(J) -> J^2 for J = aA n bA.
//
// The group-valued results are the A-module coefficients; the tensor factor
// with A[X] is never materialised. In a non-maximal order the formulas still
// compute, but they no longer describe homology (see AqReport).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aqstar/ideal.hpp"
#include "aqstar/linalg.hpp"
#include "aqstar/quadorder.hpp"

namespace aqstar {

struct StarVerdict {
  bool holds = false;
  FracIdeal lhs;  // a^2 A n b^2 A
  FracIdeal rhs;  // (aA n bA)^2
  FracIdeal colon_of_squares;   // (b^2 A :_A a^2)
  FracIdeal squared_colon;      // (bA :_A a)^2
};

// Throws ZeroElement for a = 0 or b = 0 and InvariantViolation if the two
// formulations of the condition disagree or rhs is not inside lhs.
StarVerdict star_pair(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);

struct StarWitness {
  OrderElement a;
  OrderElement b;
};

struct StarScanResult {
  std::size_t pairs_checked = 0;
  bool budget_exhausted = false;
  std::vector<StarWitness> violations;
};

// Searches canonical-associate pairs with norms <= norm_bound, ordered by
// (max norm, element order), for pairs violating the star condition. A
// budget of 0 means unlimited. Imaginary orders only.
StarScanResult star_scan(const QuadraticOrder& order, long norm_bound, std::size_t budget = 0);

// abA / ((aA + bA)(aA n bA))
AbelianGroupInvariants omega_coeff_group(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);
// (a^2A n b^2A) / (aA n bA)^2
AbelianGroupInvariants h1_coeff_group(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);

// (bA :_A a) applied to each coefficient module lands in its denominator.
struct AnnihilationChecks {
  bool omega_module = false;  // (bA:_A a) ab in (aA + bA)(aA n bA)
  bool h1_module = false;     // (a^2A n b^2A)(bA:_A a) in (aA n bA)^2
};

AnnihilationChecks annihilation_checks(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);

// omega_coeff_group trivial <=> aA + bA invertible. Throws
// NotIntegrallyClosed for non-maximal orders.
bool invertibility_crosscheck(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);

// (aA n bA)(cA n dA) == acA n adA n bcA n bdA
bool four_term_identity(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b,
                        const OrderElement& c, const OrderElement& d);

// Presentation of S_2(J) over A = Z[w] for J = A g1 + A g2. The ambient
// free module A G11 + A G12 + A G22 is Z^6 with coordinates
// (G11, w G11, G12, w G12, G22, w G22).
struct SymmetricSquarePresentation {
  std::array<OrderElement, 2> generators;
  IntMatrix syzygies;    // 4 x k: Z-basis of {(x, y) in A^2 : x g1 + y g2 = 0}
  IntMatrix evaluation;  // 2 x 6: G_ij -> g_i g_j
  IntMatrix relations;   // 6 x r: HNF of the syzygy-induced relations
  IntMatrix kernel;      // 6 x 4: integer kernel of evaluation
};

SymmetricSquarePresentation symmetric_square_presentation(const FracIdeal& ideal);

struct SyzygeticResult {
  AbelianGroupInvariants kernel;  // W = ker(S_2(J) -> J^2)
  bool syzygetic = false;
  SymmetricSquarePresentation presentation;
};

// Throws std::invalid_argument for non-integral J.
SyzygeticResult syzygetic_kernel(const FracIdeal& ideal);

struct AqReport {
  QuadraticOrder order;
  OrderElement a;
  OrderElement b;
  bool integrally_closed = false;
  FracIdeal conductor_ideal;  // (bA :_A a)
  AbelianGroupInvariants omega_coeff;
  AbelianGroupInvariants h1_coeff;
  StarVerdict star;
  AnnihilationChecks annihilation;
  AbelianGroupInvariants syzygetic_kernel;
  // The homological reading of the groups needs an integrally closed A;
  // otherwise they are formula values only.
  bool interpretation_valid = false;
};

AqReport aq_report(const QuadraticOrder& order, const OrderElement& a, const OrderElement& b);

}  // namespace aqstar
