#include "aqstar/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "aqstar/errors.hpp"

namespace aqstar {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += a * other(k, j);
    }
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMatrix * vector: shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::content() const {
  Integer g = 0;
  for (const auto& x : data_) g = gcd(g, x);
  return g;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

std::optional<Integer> AbelianGroupInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianGroupInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroupInvariants& g) {
  return os << g.to_string();
}

namespace {

// Row of the lowest nonzero entry in column c, or -1 for a zero column.
long pivot_row(const IntMatrix& m, std::size_t c) {
  for (std::size_t r = m.rows(); r-- > 0;)
    if (m(r, c) != 0) return static_cast<long>(r);
  return -1;
}

IntMatrix column_slice(const IntMatrix& m, std::size_t first, std::size_t count) {
  IntMatrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, first + c);
  return out;
}

}  // namespace

HermiteDecomposition hnf_with_transform(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t n = m.cols();
  IntMatrix u = IntMatrix::identity(n);
  std::vector<std::size_t> pivots(n);

  // Active columns are [0, active); each row, processed bottom-up, donates at
  // most one pivot column which is parked at position active - 1.
  std::size_t active = n;
  for (std::size_t i = m.rows(); i-- > 0 && active > 0;) {
    while (true) {
      std::size_t best = active;
      for (std::size_t j = 0; j < active; ++j) {
        if (h(i, j) == 0) continue;
        if (best == active || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == active) break;
      const std::size_t last = active - 1;
      h.swap_columns(best, last);
      u.swap_columns(best, last);
      bool clean = true;
      for (std::size_t j = 0; j < last; ++j) {
        if (h(i, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, last).get_mpz_t());
        h.add_column_multiple(j, last, -q);
        u.add_column_multiple(j, last, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) {
        if (h(i, last) < 0) {
          h.negate_column(last);
          u.negate_column(last);
        }
        pivots[last] = i;
        --active;
        break;
      }
    }
  }

  // Reduce entries right of each pivot, larger pivot rows first so later
  // reductions never disturb rows that are already reduced.
  for (std::size_t j = n; j-- > active;) {
    const std::size_t p = pivots[j];
    for (std::size_t l = j + 1; l < n; ++l) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(p, l).get_mpz_t(), h(p, j).get_mpz_t());
      h.add_column_multiple(l, j, -q);
      u.add_column_multiple(l, j, -q);
    }
  }

  HermiteDecomposition out;
  out.rank = n - active;
  out.basis = column_slice(h, active, out.rank);
  out.transform = std::move(u);
  return out;
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).basis; }

SmithDecomposition snf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(x, c), a(y, c));
  };
  auto add_row_multiple = [&](std::size_t target, std::size_t source, const Integer& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols; ++c) a(target, c) += f * a(source, c);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (a(r, c) == 0) continue;
          if (!found || abs(a(r, c)) < abs(a(pr, pc))) {
            pr = r;
            pc = c;
            found = true;
          }
        }
      if (!found) break;
      swap_rows(t, pr);
      a.swap_columns(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_column_multiple(c, t, -q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            add_row_multiple(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) a(t, t) = -a(t, t);
  }

  SmithDecomposition out;
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    if (a(t, t) == 0) continue;
    ++nonzero;
    if (a(t, t) != 1) out.cokernel.torsion.push_back(a(t, t));
  }
  out.cokernel.free_rank = rows - nonzero;
  out.diagonal = std::move(a);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  auto d = hnf_with_transform(m);
  const std::size_t nullity = m.cols() - d.rank;
  if (nullity == 0) return IntMatrix(m.cols(), 0);
  return hnf(column_slice(d.transform, 0, nullity));
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v) {
  if (v.size() != basis.rows()) throw std::invalid_argument("solve_in_lattice: dimension mismatch");
  auto d = hnf_with_transform(basis);
  if (d.rank != basis.cols()) throw std::invalid_argument("solve_in_lattice: basis is not full column rank");
  const IntMatrix& h = d.basis;
  const std::size_t r = d.rank;

  IntVector residual = v;
  IntVector y(r);
  for (std::size_t j = r; j-- > 0;) {
    const auto p = static_cast<std::size_t>(pivot_row(h, j));
    if (!mpz_divisible_p(residual[p].get_mpz_t(), h(p, j).get_mpz_t())) return std::nullopt;
    y[j] = residual[p] / h(p, j);
    for (std::size_t i = 0; i <= p; ++i) residual[i] -= y[j] * h(i, j);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;

  const std::size_t offset = basis.cols() - r;
  IntVector x(basis.cols());
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < basis.cols(); ++i) x[i] += d.transform(i, offset + j) * y[j];
  return x;
}

std::optional<IntMatrix> coordinates_in(const IntMatrix& basis, const IntMatrix& sub) {
  std::vector<IntVector> coords;
  coords.reserve(sub.cols());
  for (std::size_t c = 0; c < sub.cols(); ++c) {
    auto x = solve_in_lattice(basis, sub.column(c));
    if (!x) return std::nullopt;
    coords.push_back(std::move(*x));
  }
  return IntMatrix::from_columns(basis.cols(), coords);
}

bool lattice_contains(const IntMatrix& outer, const IntMatrix& inner) {
  return coordinates_in(outer, inner).has_value();
}

AbelianGroupInvariants lattice_quotient_invariants(const IntMatrix& outer, const IntMatrix& inner) {
  auto coords = coordinates_in(outer, inner);
  if (!coords) throw ContainmentViolation("lattice quotient: inner lattice is not contained in outer");
  return snf(*coords).cokernel;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace aqstar
