#include <doctest.h>

#include "redgrp/error.hpp"
#include "redgrp/intlinalg.hpp"
#include "support.hpp"

using namespace redgrp;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0)
        return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0)
      return false;
    if (i + 1 < k && d(i, i) == 0 && d(i + 1, i + 1) != 0)
      return false;
    if (i + 1 < k && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0)
      return false;
  }
  return true;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0)
      ++p;
    if (p == h.cols() || h(i, p) <= 0 || (i > 0 && p <= last_pivot))
      return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h(r, p) < 0 || h(r, p) >= h(i, p))
        return false;
    last_pivot = p;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));

  SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.D == (IntMatrix{{2, 0}, {0, 4}}));
  CHECK(s.U * IntMatrix{{2, 4}, {6, 8}} * s.V == s.D);

  SmithForm a2 = smith_normal_form(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.D == (IntMatrix{{1, 0}, {0, 3}}));

  SmithForm zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.D.is_zero());
  CHECK(is_unimodular(zero.U));
  CHECK(is_unimodular(zero.V));
}

TEST_CASE("hermite normal form examples") {
  CHECK(hermite_normal_form(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(hermite_normal_form(IntMatrix{{2, 0}, {0, 2}, {1, 1}}) == (IntMatrix{{1, 1}, {0, 2}}));
  CHECK(hermite_normal_form(IntMatrix(3, 2)).rows() == 0);
}

TEST_CASE("hermite normal form spans the box-enumerated lattice") {
  // points of the span with small coefficients must lie in the HNF span, and
  // the HNF rows must be small combinations of the input
  const IntMatrix m{{2, 0}, {0, 2}, {1, 1}};
  const Lattice l = Lattice::from_generators(2, m);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        CHECK(l.contains(IntVector{Int(2 * a + c), Int(2 * b + c)}));
  CHECK_FALSE(l.contains(IntVector{1, 0}));
  CHECK_FALSE(l.contains(IntVector{0, 1}));
}

TEST_CASE("cokernel invariants examples") {
  CokernelInvariants a1 = cokernel_invariants(IntMatrix{{2}});
  CHECK(a1.torsion == std::vector<Int>{2});
  CHECK(a1.free_rank == 0);
  CokernelInvariants id = cokernel_invariants(IntMatrix::identity(4));
  CHECK(id.torsion.empty());
  CHECK(id.free_rank == 0);
  const IntMatrix d4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  CHECK(cokernel_invariants(d4).torsion == std::vector<Int>{2, 2});
  CokernelInvariants wide = cokernel_invariants(IntMatrix{{1, 0}, {0, 0}, {0, 0}});
  CHECK(wide.free_rank == 2);
}

TEST_CASE("saturated complement examples") {
  CHECK(saturated_complement(Lattice::full(3)).rank() == 0);

  // trace-zero sublattice of Z^n: the complement is spanned by e_1
  for (std::size_t n = 2; n <= 5; ++n) {
    IntMatrix rows(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      rows(i, i) = 1;
      rows(i, i + 1) = -1;
    }
    const Lattice c = saturated_complement(Lattice::from_generators(n, rows));
    REQUIRE(c.rank() == 1);
    IntVector e1(n, Int(0));
    e1[0] = 1;
    CHECK(c.contains(e1));
  }

  const auto code = support::error_of(
      [] { saturated_complement(Lattice::from_generators(2, IntMatrix{{2, 0}})); });
  CHECK(code == Errc::NotSaturated);
}

TEST_CASE("kernels, inverses and the a' operator") {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k = integer_kernel(m);
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i)
    CHECK((m * k.row(i)) == IntVector{0, 0});

  const IntMatrix ck = congruence_kernel(IntMatrix{{1, 1}}, 2);
  CHECK(Lattice::from_generators(2, ck) ==
        Lattice::from_generators(2, IntMatrix{{1, 1}, {0, 2}}));

  const RationalInverse inv = rational_inverse(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(inv.denominator == 3);
  CHECK(inv.numerator * IntMatrix{{2, -1}, {-1, 2}} == IntMatrix::diagonal({3, 3}));

  CHECK(unimodular_inverse(IntMatrix{{1, 0}, {1, -1}}) == (IntMatrix{{1, 0}, {1, -1}}));
  CHECK(support::error_of([] { unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}); }) ==
        Errc::NotUnimodular);

  CHECK(prime_to_p_part(12, 0) == 12);
  CHECK(prime_to_p_part(12, 2) == 3);
  CHECK(prime_to_p_part(0, 3) == 0);
  CHECK(in_diagonal_class(IntMatrix::diagonal({2, 4}), 0));
  CHECK_FALSE(in_diagonal_class(IntMatrix::diagonal({2, 4}), 2));
  CHECK_FALSE(in_diagonal_class(IntMatrix::diagonal({2, 3}), 0));
}

TEST_CASE("GL_n generators are unimodular and start with the Nielsen moves") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const NamedMatrix& g : gl_generators(n))
      CHECK(is_unimodular(g.matrix));
  CHECK(gl_generators(2).front().matrix == (IntMatrix{{1, 0}, {1, -1}}));
}

TEST_CASE("random matrices: Smith form against determinantal divisors") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const oracle::Mat m = support::random_matrix(rng, r, c, 9);
    const IntMatrix mi = support::to_int(m);
    const SmithForm s = smith_normal_form(mi);
    CHECK(s.U * mi * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    REQUIRE(is_diagonal_chain(s.D));
    const std::vector<long long> expected = oracle::smith_diagonal(m);
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(s.D(i, i) == static_cast<long>(expected[i]));
  }
}

TEST_CASE("random matrices: Hermite form is canonical and span-invariant") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const oracle::Mat m = support::random_matrix(rng, r, c, 9);
    const IntMatrix h = hermite_normal_form(support::to_int(m));
    CHECK(is_hnf(h));
    CHECK(hermite_normal_form(h) == h);
    CHECK(oracle::same_span(support::to_ll(h), m));
    const IntMatrix w = support::random_unimodular(rng, r);
    CHECK(hermite_normal_form(w * support::to_int(m)) == h);
  }
}

TEST_CASE("random matrices: cokernel against brute-force structure") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const oracle::Mat m = support::random_matrix(rng, r, c, 4);
    const CokernelInvariants got = cokernel_invariants(support::to_int(m));
    const oracle::Cokernel want = oracle::cokernel(m);
    CHECK(got.free_rank == want.free_rank);
    REQUIRE(got.torsion.size() == want.torsion.size());
    for (std::size_t i = 0; i < want.torsion.size(); ++i)
      CHECK(got.torsion[i] == static_cast<long>(want.torsion[i]));
  }
}

TEST_CASE("random lattices: kernels, saturation and complements") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const oracle::Mat m = support::random_matrix(rng, r, c, 5);
    const IntMatrix mi = support::to_int(m);

    const IntMatrix k = integer_kernel(mi);
    CHECK(k.rows() + oracle::rank(m) == c);
    for (std::size_t i = 0; i < k.rows(); ++i)
      CHECK((mi * k.row(i)) == IntVector(r, Int(0)));

    const IntMatrix sat = saturation(mi, c);
    const Lattice sl = Lattice::from_generators(c, sat);
    CHECK(sl.is_saturated());
    CHECK(sat.rows() == oracle::rank(m));
    for (std::size_t i = 0; i < r; ++i)
      CHECK(sl.contains(mi.row(i)));

    const Lattice comp = saturated_complement(sl);
    const IntMatrix stacked = vstack(sl.basis(), comp.basis());
    REQUIRE(stacked.rows() == c);
    CHECK(is_unimodular(stacked));
  }
}
