#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels and invariants of lattice quotients. Lattices are always given by
// the columns of an IntMatrix.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aqstar {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Row-major nested initializer, e.g. IntMatrix{{2, 7}, {0, 1}}.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  // [this | other]; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;

  bool is_zero() const;
  // gcd of all entries (0 for the zero matrix).
  Integer content() const;

  // Column operations used by the normal-form routines.
  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  // col[target] += factor * col[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + Z/d1 + Z/d2 + ... with
// d1 | d2 | ... and every di >= 2.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order of a finite group; nullopt when free_rank > 0.
  std::optional<Integer> order() const;
  // "0", "Z/2", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroupInvariants& g);

struct HermiteDecomposition {
  // Column-style HNF with zero columns removed.
  IntMatrix basis;
  // Unimodular U with input * U = [0 ... 0 | basis]; the leading
  // (cols - rank) columns of U span the integer kernel.
  IntMatrix transform;
  std::size_t rank = 0;
};

// Column-style Hermite normal form. Pivot of column j sits in row p_j with
// p_0 < p_1 < ...; entries below a pivot are zero, pivots are positive and
// every entry to the right of a pivot in its row lies in [0, pivot).
IntMatrix hnf(const IntMatrix& m);
HermiteDecomposition hnf_with_transform(const IntMatrix& m);

struct SmithDecomposition {
  AbelianGroupInvariants cokernel;
  // Same shape as the input, nonzero only on the diagonal, d1 | d2 | ...
  IntMatrix diagonal;
};

SmithDecomposition snf(const IntMatrix& m);

// Saturated basis (HNF-reduced columns) of {v in Z^cols : m v = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Integer coordinates x with basis * x = v, or nullopt when v is not in the
// lattice. `basis` must have full column rank.
std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v);

// Coordinates of every column of `sub` in `basis`, or nullopt if some column
// lies outside the lattice.
std::optional<IntMatrix> coordinates_in(const IntMatrix& basis, const IntMatrix& sub);

bool lattice_contains(const IntMatrix& outer, const IntMatrix& inner);

// Invariants of outer / inner for lattices inner <= outer, both given by
// full-column-rank bases. Throws ContainmentViolation when inner is not a
// sublattice of outer.
AbelianGroupInvariants lattice_quotient_invariants(const IntMatrix& outer, const IntMatrix& inner);

// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& m);

}  // namespace aqstar
