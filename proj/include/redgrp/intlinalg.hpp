// Exact integer matrix algebra: Smith and Hermite normal forms, kernels,
// saturated sublattices and their complements.
//
// Everything is arbitrary precision (GMP). Matrices are dense and row-major;
// a lattice is always the row span of its basis matrix.

#ifndef REDGRP_INTLINALG_HPP_
#define REDGRP_INTLINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace redgrp {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix diagonal(const IntVector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  bool is_zero() const;
  Int determinant() const;  // Bareiss; square only
  std::size_t rank() const;

  // elementary operations used by the normal forms
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);

  std::string str() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// floor-style residue in [0, m) for m > 0
Int floor_mod(const Int& a, const Int& m);
IntVector row_times(const IntVector& row, const IntMatrix& m);

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

// U * M * V == D, U and V unimodular, D diagonal with d1 | d2 | ... and
// nonnegative entries.
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style HNF of the row span; zero rows dropped. Pivots are positive and
// entries above each pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

struct CokernelInvariants {
  std::vector<Int> torsion;  // invariant factors > 1
  std::size_t free_rank = 0;
};

// Structure of Z^rows / column-span(M).
CokernelInvariants cokernel_invariants(const IntMatrix& m);

// Basis (HNF rows) of { v in Z^cols : M v = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

// Basis (HNF rows) of { v in Z^cols : M v = 0 mod modulus }.
IntMatrix congruence_kernel(const IntMatrix& m, const Int& modulus);

// HNF basis of (Q-span of rows) intersected with Z^ambient.
IntMatrix saturation(const IntMatrix& rows, std::size_t ambient);

bool is_unimodular(const IntMatrix& m);

struct RationalInverse {
  IntMatrix numerator;  // M^{-1} == numerator / denominator
  Int denominator;
};

RationalInverse rational_inverse(const IntMatrix& m);

// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Coefficients x with x * basis == target for an upper-triangular (HNF,
// full-rank square) basis. Returns false if target is not in the row span.
bool solve_triangular(const IntMatrix& basis, IntVector target, IntVector& coeffs);

class Lattice {
public:
  Lattice() = default;
  static Lattice from_generators(std::size_t ambient_rank, const IntMatrix& generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_saturated() const;
  bool contains(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

// C with L (+) C == Z^r. Standard basis vectors are tried first, in order, so
// that coordinate complements are returned where they exist.
Lattice saturated_complement(const Lattice& l);

// The a' operator: strip every factor p from a (identity when a*p == 0).
Int prime_to_p_part(const Int& a, unsigned p);

// Membership in the set of diagonal matrices used to classify finite
// subgroups of a torus: diagonal, divisibility chain, and a == a' on the
// diagonal.
bool in_diagonal_class(const IntMatrix& d, unsigned p);

struct NamedMatrix {
  std::string name;
  IntMatrix matrix;
};

// Generators of GL_n(Z) acting on column vectors. The "nielsen" moves
// c_j <- c_i - c_j come first; with coordinate negations they generate the
// elementary matrices, and the transpositions complete the set.
std::vector<NamedMatrix> gl_generators(std::size_t n);

}  // namespace redgrp

#endif  // REDGRP_INTLINALG_HPP_
