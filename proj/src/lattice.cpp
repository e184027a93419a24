#include "toroidal/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::InvalidArgument, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::InvalidArgument, "exponent overflow");
  return r;
}

void require_same_size(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size())
    fail(ErrorCode::InvalidArgument, "exponent vectors of different length");
}

}  // namespace

// ---------------------------------------------------------------- ExpVec

std::int64_t ExpVec::total_degree() const noexcept {
  std::int64_t s = 0;
  for (auto x : e_) s += x;
  return s;
}

bool ExpVec::is_nonnegative() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x >= 0; });
}

bool ExpVec::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool ExpVec::divides(const ExpVec& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
  require_same_size(*this, o);
  ExpVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = checked_add(e_[i], o.e_[i]);
  return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const { return *this + (-o); }

ExpVec ExpVec::operator-() const {
  ExpVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = -e_[i];
  return r;
}

ExpVec ExpVec::scaled(std::int64_t k) const {
  ExpVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] = checked_mul(e_[i], k);
  return r;
}

ExpVec ExpVec::unit(std::size_t n, std::size_t axis) {
  ExpVec r(n);
  r.e_.at(axis) = 1;
  return r;
}

ExpVec ExpVec::min(const ExpVec& a, const ExpVec& b) {
  require_same_size(a, b);
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

std::string ExpVec::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExpVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

bool degree_lex_less(const ExpVec& a, const ExpVec& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

// ------------------------------------------------------------- SubMatrix

SubMatrix SubMatrix::identity() {
  return SubMatrix(Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

SubMatrix SubMatrix::permutation(const std::array<int, 3>& perm) {
  SubMatrix s;
  for (int i = 0; i < 3; ++i) s.m_[i][perm[i]] = 1;
  return s;
}

std::int64_t SubMatrix::det() const { return det3(*this); }

bool SubMatrix::is_nonnegative() const {
  for (auto& r : m_)
    for (auto x : r)
      if (x < 0) return false;
  return true;
}

SubMatrix SubMatrix::then(const SubMatrix& next) const {
  SubMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k)
        s = checked_add(s, checked_mul(m_[i][k], next.m_[k][j]));
      r.m_[i][j] = s;
    }
  return r;
}

ExpVec SubMatrix::apply(const ExpVec& v) const {
  if (v.size() != 3)
    fail(ErrorCode::InvalidArgument, "chart substitution needs a 3-vector");
  ExpVec r(3);
  for (int j = 0; j < 3; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i) s = checked_add(s, checked_mul(v[i], m_[i][j]));
    r[j] = s;
  }
  return r;
}

std::string SubMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << m_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidArgument, "ragged matrix");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const ExpVec> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      fail(ErrorCode::InvalidArgument, "generator length mismatch");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::InvalidArgument, "shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

Int IntMatrix::det() const {
  if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "det of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------------------- SNF

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Int> SnfResult::invariant_factors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfResult r{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& D = r.D;
  IntMatrix& U = r.U;
  IntMatrix& V = r.V;

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    D.swap_rows(t, i);
    U.swap_rows(t, i);
    D.swap_cols(t, j);
    V.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D(i, j) != 0 &&
            (!best || abs(D(i, j)) < abs(D(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    move_to_pivot(t, best->first, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; it is smaller than the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        move_to_pivot(t, bi, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      D.add_row_multiple(t, *bad_row, 1);
      U.add_row_multiple(t, *bad_row, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return r;
}

// --------------------------------------------------------------- indices

std::string LatticeIndex::to_string() const {
  return order ? order->get_str() : std::string("infinite");
}

LatticeQuotient lattice_quotient(std::span<const ExpVec> h_gens,
                                 std::span<const ExpVec> a_gens) {
  if (h_gens.empty()) {
    for (auto& a : a_gens)
      if (!a.is_zero())
        fail(ErrorCode::NotASublattice, "A generator outside the zero lattice");
    return {LatticeIndex::finite(1), {}, 0, 0};
  }
  const std::size_t n = h_gens.front().size();

  // Basis of H: rows d_i * (V^-1)_i of the SNF of H's generator matrix.
  const SnfResult hs = smith_normal_form(IntMatrix::from_rows(h_gens, n));
  const std::size_t r = hs.rank();

  // Coordinates of each A generator in that basis: c_i = (a V)_i / d_i.
  IntMatrix coords(a_gens.size(), r);
  for (std::size_t k = 0; k < a_gens.size(); ++k) {
    if (a_gens[k].size() != n)
      fail(ErrorCode::InvalidArgument, "generator length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += Int(static_cast<long>(a_gens[k][i])) * hs.V(i, j);
      if (j >= r) {
        if (s != 0)
          fail(ErrorCode::NotASublattice,
               "generator " + a_gens[k].to_string() + " not in span of H");
        continue;
      }
      if (!mpz_divisible_p(s.get_mpz_t(), hs.D(j, j).get_mpz_t()))
        fail(ErrorCode::NotASublattice,
             "generator " + a_gens[k].to_string() + " not in the lattice H");
      Int c;
      mpz_divexact(c.get_mpz_t(), s.get_mpz_t(), hs.D(j, j).get_mpz_t());
      coords(k, j) = c;
    }
  }

  LatticeQuotient out;
  out.rank_h = r;
  if (a_gens.empty() || r == 0) {
    out.rank_a = 0;
    out.index = r == 0 ? LatticeIndex::finite(1) : LatticeIndex::infinite();
    return out;
  }
  const SnfResult as = smith_normal_form(coords);
  out.rank_a = as.rank();
  if (out.rank_a < r) {
    out.index = LatticeIndex::infinite();
    return out;
  }
  Int order = 1;
  for (const Int& d : as.invariant_factors()) {
    order *= d;
    if (d != 1) out.invariant_factors.push_back(d);
  }
  out.index = LatticeIndex::finite(order);
  return out;
}

LatticeIndex lattice_index(std::span<const ExpVec> h_gens,
                           std::span<const ExpVec> a_gens) {
  return lattice_quotient(h_gens, a_gens).index;
}

std::size_t rank_of(const IntMatrix& m0) {
  // Fraction-free row echelon.
  IntMatrix m = m0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Int a = m(rank, c), b = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of(std::span<const ExpVec> vectors) {
  if (vectors.empty()) return 0;
  return rank_of(IntMatrix::from_rows(vectors, vectors.front().size()));
}

std::size_t rank_of(std::initializer_list<ExpVec> vectors) {
  return rank_of(std::span<const ExpVec>(vectors.begin(), vectors.size()));
}

std::int64_t det3(const ExpVec& r0, const ExpVec& r1, const ExpVec& r2) {
  if (r0.size() != 3 || r1.size() != 3 || r2.size() != 3)
    fail(ErrorCode::InvalidArgument, "det3 needs 3-vectors");
  Int a[3][3];
  const ExpVec* rs[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = static_cast<long>((*rs[i])[j]);
  Int d = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
          a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (!d.fits_slong_p()) fail(ErrorCode::InvalidArgument, "determinant overflow");
  return d.get_si();
}

std::int64_t det3(const SubMatrix& m) {
  const auto& r = m.rows();
  return det3(ExpVec{r[0][0], r[0][1], r[0][2]}, ExpVec{r[1][0], r[1][1], r[1][2]},
              ExpVec{r[2][0], r[2][1], r[2][2]});
}

}  // namespace toroidal
