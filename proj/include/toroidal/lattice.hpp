#pragma once

// Exact integer linear algebra: exponent vectors, chart substitution
// matrices, Smith normal form and lattice indices.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toroidal {

using Int = mpz_class;

/// Exponents of a Laurent monomial in the local coordinates of its context.
class ExpVec {
public:
  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n, 0) {}
  ExpVec(std::initializer_list<std::int64_t> xs) : e_(xs) {}
  explicit ExpVec(std::vector<std::int64_t> xs) : e_(std::move(xs)) {}

  std::size_t size() const noexcept { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::int64_t total_degree() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;
  /// Componentwise `*this <= other`, i.e. the monomial divides `other`.
  bool divides(const ExpVec& other) const;

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-(const ExpVec& o) const;
  ExpVec operator-() const;
  ExpVec scaled(std::int64_t k) const;

  static ExpVec unit(std::size_t n, std::size_t axis);
  static ExpVec min(const ExpVec& a, const ExpVec& b);

  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;

  std::string to_string() const;

private:
  std::vector<std::int64_t> e_;
};

std::ostream& operator<<(std::ostream& os, const ExpVec& v);

/// Graded order: total degree first, then lexicographic on entries.
bool degree_lex_less(const ExpVec& a, const ExpVec& b);

/// 3x3 chart matrix. Entry (i, j) is the exponent of new coordinate j in
/// the monomial expression of old coordinate i.
class SubMatrix {
public:
  using Rows = std::array<std::array<std::int64_t, 3>, 3>;

  SubMatrix() = default;
  explicit SubMatrix(const Rows& rows) : m_(rows) {}

  static SubMatrix identity();
  /// Old coordinate i becomes new coordinate perm[i].
  static SubMatrix permutation(const std::array<int, 3>& perm);

  std::int64_t operator()(int i, int j) const { return m_[i][j]; }
  std::int64_t& operator()(int i, int j) { return m_[i][j]; }
  const Rows& rows() const noexcept { return m_; }

  std::int64_t det() const;
  bool is_nonnegative() const;
  bool is_unimodular() const { auto d = det(); return d == 1 || d == -1; }

  /// Composition: first substitute `*this`, then `next` into the result.
  /// Matrix-wise this is `(*this) * next`.
  SubMatrix then(const SubMatrix& next) const;

  /// Exponent vector of a monomial after substitution (row vector times M).
  ExpVec apply(const ExpVec& v) const;

  friend bool operator==(const SubMatrix&, const SubMatrix&) = default;

  std::string to_string() const;

private:
  Rows m_{};
};

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const ExpVec> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  /// Determinant of a square matrix (fraction-free elimination).
  Int det() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U * M * V == D with D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
  /// Nonzero diagonal entries in order.
  std::vector<Int> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Group order of a lattice quotient; empty when the quotient is infinite.
struct LatticeIndex {
  std::optional<Int> order;

  bool is_infinite() const noexcept { return !order.has_value(); }
  static LatticeIndex infinite() { return {}; }
  static LatticeIndex finite(Int n) { return {std::move(n)}; }
  std::string to_string() const;
};

/// |span(h_gens) / span(a_gens)|. Throws NotASublattice when some A
/// generator is outside the integer span of the H generators.
LatticeIndex lattice_index(std::span<const ExpVec> h_gens,
                           std::span<const ExpVec> a_gens);

/// Detailed form: also returns the invariant factors of the quotient.
struct LatticeQuotient {
  LatticeIndex index;
  std::vector<Int> invariant_factors;  // torsion part, entries > 1
  std::size_t rank_h = 0;
  std::size_t rank_a = 0;
};

LatticeQuotient lattice_quotient(std::span<const ExpVec> h_gens,
                                 std::span<const ExpVec> a_gens);

std::size_t rank_of(std::span<const ExpVec> vectors);
std::size_t rank_of(std::initializer_list<ExpVec> vectors);
std::size_t rank_of(const IntMatrix& m);
std::int64_t det3(const SubMatrix& m);
std::int64_t det3(const ExpVec& r0, const ExpVec& r1, const ExpVec& r2);

}  // namespace toroidal
