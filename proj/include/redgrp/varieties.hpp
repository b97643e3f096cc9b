// Quotients of H^n by central subgroups, the coordinate-mixing action of
// GL_n(Z) on their centers, and pairs of non-isomorphic quotients whose
// underlying varieties are isomorphic.
//
// Convention. A matrix M acts on column tuples of center elements,
// (M c)_i = sum_j m_ij c_j, so sigma_hat(M1 M2, C) = sigma_hat(M1,
// sigma_hat(M2, C)). Every M in GL_n(Z) is the abelianization of an
// automorphism of the free group F_n (the Nielsen moves x_j -> x_i x_j^{-1}
// abelianize to the first generators of gl_generators), so a matrix is a
// genuine variety isomorphism H^n/C -> H^n/sigma_hat(M, C).

#ifndef REDGRP_VARIETIES_HPP_
#define REDGRP_VARIETIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "redgrp/semisimple.hpp"

namespace redgrp {

struct PowerQuotient {
  SimpleType base;
  std::size_t n = 1;
  FinAbSubgroup c;  // subgroup of center(base)^n, factor blocks in order

  SCSemisimple cover() const;
  std::string name() const;
};

FinAb power_center(const SimpleType& base, std::size_t n);

// Image of C <= A^n under M; NotUnimodular when |det M| != 1.
FinAbSubgroup sigma_hat(const IntMatrix& m, const FinAbSubgroup& c);

// Some M with sigma_hat(M, q1.c) == q2.c, found by BFS over the GL_n(Z)
// generators. Absence only means that no such M exists, not that the
// varieties differ. BaseMismatch when base or n differ.
std::optional<IntMatrix> variety_iso_witness(const PowerQuotient& q1, const PowerQuotient& q2,
                                             const Limits& limits = {});

struct TwinCertificate {
  FinAbSubgroup c1;
  FinAbSubgroup c2;
  IntMatrix witness;            // sigma_hat(witness, c1) == c2
  std::size_t out_orbit_size = 0;  // size of the exhausted Out_ext orbit of c1
  std::string name1;
  std::string name2;
};

// One certificate per unordered pair of group classes inside a variety
// class. C1 is the larger class representative, C2 the smaller.
std::vector<TwinCertificate> find_twin_pairs(const SimpleType& base, std::size_t n,
                                             const Limits& limits = {});

}  // namespace redgrp

#endif  // REDGRP_VARIETIES_HPP_
