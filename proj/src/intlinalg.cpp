#include "redgrp/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "redgrp/error.hpp"

namespace redgrp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotDiagramAutomorphism: return "NotDiagramAutomorphism";
    case Errc::BadModulus: return "BadModulus";
    case Errc::BadGluing: return "BadGluing";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::CriterionMismatch: return "CriterionMismatch";
    case Errc::InvalidType: return "InvalidType";
    case Errc::Parse: return "Parse";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j)
      m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = (*this)(first + i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  const SmithForm s = smith_normal_form(*this);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    if (s.D(i, i) != 0)
      ++r;
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += x * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(a.rows_, Int(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_)
    return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_)
    return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0)
    return bottom;
  if (bottom.rows() == 0)
    return top;
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("vstack: column mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j)
      m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j)
      m(top.rows() + i, j) = bottom(i, j);
  return m;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows())
    throw std::invalid_argument("hstack: row mismatch");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j)
      m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j)
      m(i, left.cols() + j) = right(i, j);
  }
  return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntVector row_times(const IntVector& row, const IntMatrix& m) {
  if (row.size() != m.rows())
    throw std::invalid_argument("row_times: shape mismatch");
  IntVector out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (row[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] += row[i] * m(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& d = s.D;

  auto move_min_to = [&](std::size_t t) {
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (bi == r || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == r)
      return false;
    d.swap_rows(t, bi);
    s.U.swap_rows(t, bi);
    d.swap_cols(t, bj);
    s.V.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    if (!move_min_to(t))
      break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0)
          continue;
        const Int q = tdiv(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0)
          continue;
        const Int q = tdiv(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; restart with it
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < r; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t; j < c; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
            bi = t;
            bj = j;
          }
        d.swap_rows(t, bi);
        s.U.swap_rows(t, bi);
        d.swap_cols(t, bj);
        s.V.swap_cols(t, bj);
        continue;
      }
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r)
        break;
      d.add_row_multiple(t, bad, 1);
      s.U.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  std::size_t p = 0;
  for (std::size_t col = 0; col < a.cols() && p < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = p; i < rows; ++i)
        if (a(i, col) != 0 && (best == rows || abs(a(i, col)) < abs(a(best, col))))
          best = i;
      if (best == rows)
        break;
      a.swap_rows(p, best);
      bool done = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a(i, col) == 0)
          continue;
        a.add_row_multiple(i, p, -fdiv(a(i, col), a(p, col)));
        if (a(i, col) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (a(p, col) == 0)
      continue;
    if (a(p, col) < 0)
      a.negate_row(p);
    for (std::size_t i = 0; i < p; ++i)
      a.add_row_multiple(i, p, -fdiv(a(i, col), a(p, col)));
    ++p;
  }
  return a.rows_range(0, p);
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CokernelInvariants out;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Int& d = s.D(i, i);
    if (d == 0)
      continue;
    ++rank;
    if (d > 1)
      out.torsion.push_back(d);
  }
  out.free_rank = m.rows() - rank;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (s.D(i, i) != 0)
      ++rank;
  const std::size_t dim = m.cols() - rank;
  IntMatrix basis = s.V.columns(rank, dim).transpose();
  return hermite_normal_form(basis);
}

IntMatrix congruence_kernel(const IntMatrix& m, const Int& modulus) {
  if (m.rows() == 0)
    return IntMatrix::identity(m.cols());
  IntMatrix aug = hstack(m, IntMatrix::diagonal(IntVector(m.rows(), modulus)));
  const IntMatrix k = integer_kernel(aug);
  return hermite_normal_form(k.columns(0, m.cols()));
}

IntMatrix saturation(const IntMatrix& rows, std::size_t ambient) {
  if (rows.rows() == 0)
    return IntMatrix(0, ambient);
  const IntMatrix orth = integer_kernel(rows);
  if (orth.rows() == 0)
    return IntMatrix::identity(ambient);
  return integer_kernel(orth);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols())
    return false;
  return abs(m.determinant()) == 1;
}

RationalInverse rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw std::invalid_argument("rational_inverse: non-square");
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      at(i, j) = Rational(m(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && at(p, col) == 0)
      ++p;
    if (p == n)
      throw std::domain_error("rational_inverse: singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j)
        std::swap(at(p, j), at(col, j));
    const Rational piv = at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j)
      at(col, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || at(i, col) == 0)
        continue;
      const Rational f = at(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        at(i, j) -= f * at(col, j);
    }
  }
  Int den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), at(i, n + j).get_den_mpz_t());
  RationalInverse out{IntMatrix(n, n), den};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = at(i, n + j) * Rational(den);
      out.numerator(i, j) = v.get_num();
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m))
    fail(Errc::NotUnimodular, "matrix " + m.str() + " is not unimodular");
  const RationalInverse inv = rational_inverse(m);
  return inv.numerator;  // denominator is 1
}

bool solve_triangular(const IntMatrix& basis, IntVector target, IntVector& coeffs) {
  const std::size_t n = basis.rows();
  coeffs.assign(n, Int(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (col < basis.cols() && basis(i, col) == 0) {
      if (target[col] != 0)
        return false;
      ++col;
    }
    if (col == basis.cols())
      break;
    if (!mpz_divisible_p(target[col].get_mpz_t(), basis(i, col).get_mpz_t()))
      return false;
    const Int q = target[col] / basis(i, col);
    coeffs[i] = q;
    for (std::size_t j = col; j < basis.cols(); ++j)
      target[j] -= q * basis(i, j);
    ++col;
  }
  return std::all_of(target.begin(), target.end(), [](const Int& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Lattices

Lattice Lattice::from_generators(std::size_t ambient_rank, const IntMatrix& generators) {
  if (generators.rows() != 0 && generators.cols() != ambient_rank)
    throw std::invalid_argument("Lattice: generator width differs from ambient rank");
  Lattice l;
  l.ambient_rank_ = ambient_rank;
  l.basis_ = generators.rows() ? hermite_normal_form(generators) : IntMatrix(0, ambient_rank);
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  return from_generators(ambient_rank, IntMatrix::identity(ambient_rank));
}

bool Lattice::is_saturated() const {
  const SmithForm s = smith_normal_form(basis_);
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (s.D(i, i) != 1)
      return false;
  return true;
}

bool Lattice::contains(const IntVector& v) const {
  IntVector coeffs;
  return solve_triangular(basis_, v, coeffs);
}

Lattice saturated_complement(const Lattice& l) {
  if (!l.is_saturated())
    fail(Errc::NotSaturated, "Z^r / L has torsion; no direct complement exists");
  const std::size_t r = l.ambient_rank();
  IntMatrix current = l.basis();
  IntMatrix chosen(0, r);
  for (std::size_t i = 0; i < r && current.rows() < r; ++i) {
    IntMatrix e(1, r);
    e(0, i) = 1;
    const IntMatrix candidate = vstack(current, e);
    const Lattice trial = Lattice::from_generators(r, candidate);
    if (trial.rank() == current.rows() + 1 && trial.is_saturated()) {
      current = candidate;
      chosen = vstack(chosen, e);
    }
  }
  if (current.rows() < r) {
    // finish from the Smith transform: [B; tail of V^{-1}] is unimodular
    const std::size_t k = current.rows();
    const SmithForm s = smith_normal_form(current);
    const IntMatrix vinv = unimodular_inverse(s.V);
    chosen = vstack(chosen, vinv.rows_range(k, r - k));
  }
  return Lattice::from_generators(r, chosen);
}

Int prime_to_p_part(const Int& a, unsigned p) {
  if (a == 0 || p == 0)
    return a;
  Int out = a;
  const Int pp = p;
  while (out != 0 && mpz_divisible_p(out.get_mpz_t(), pp.get_mpz_t()))
    out /= pp;
  return out;
}

bool in_diagonal_class(const IntMatrix& d, unsigned p) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0)
        return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d(i, i) == 0) {
      if (d(i + 1, i + 1) != 0)
        return false;
      continue;
    }
    if (!mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t()))
      return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (prime_to_p_part(d(i, i), p) != d(i, i))
      return false;
  return true;
}

std::vector<NamedMatrix> gl_generators(std::size_t n) {
  std::vector<NamedMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      IntMatrix m = IntMatrix::identity(n);
      m(j, j) = -1;
      m(j, i) = 1;
      out.push_back({"nielsen(c" + std::to_string(j) + ":=c" + std::to_string(i) + "-c" +
                         std::to_string(j) + ")",
                     m});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      IntMatrix m = IntMatrix::identity(n);
      m(j, i) = 1;
      out.push_back({"add(c" + std::to_string(j) + "+=c" + std::to_string(i) + ")", m});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IntMatrix m = IntMatrix::identity(n);
      m.swap_rows(i, j);
      out.push_back({"swap(c" + std::to_string(i) + ",c" + std::to_string(j) + ")", m});
    }
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    m(i, i) = -1;
    out.push_back({"neg(c" + std::to_string(i) + ")", m});
  }
  return out;
}

}  // namespace redgrp
