// Finite abelian groups given as direct sums of cyclic groups Z/m_1 + ... +
// Z/m_k, their subgroups, homomorphisms and orbits of subgroups under
// finitely generated groups of automorphisms.
//
// A subgroup S of A is stored as the HNF of its preimage lattice in Z^k,
// which always contains diag(m_1, ..., m_k) Z^k. Equal subgroups therefore
// have identical stored forms, and the ordering (order, lattice) is total.

#ifndef REDGRP_FINAB_HPP_
#define REDGRP_FINAB_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "redgrp/intlinalg.hpp"

namespace redgrp {

// Resource bounds shared by every enumeration in the library.
struct Limits {
  Int max_order = 10000;            // largest group enumerated element- or subgroup-wise
  std::size_t max_orbit = 200000;   // largest orbit explored by BFS
  std::size_t max_results = 2000000;
  int max_rank = 3;                 // enumerate_rank bound
};

struct FinAbElem {
  IntVector coords;

  friend bool operator==(const FinAbElem& a, const FinAbElem& b) { return a.coords == b.coords; }
  friend bool operator<(const FinAbElem& a, const FinAbElem& b) { return a.coords < b.coords; }
};

class FinAb {
public:
  FinAb() = default;  // trivial group
  // Cyclic factors, each >= 2. No divisibility chain is required; see
  // invariant_factors() for the canonical form.
  explicit FinAb(IntVector cyclic_orders);
  static FinAb from_invariant_factors(IntVector factors);
  static FinAb cyclic_power(const Int& d, std::size_t n);
  static FinAb power(const FinAb& a, std::size_t n);
  static FinAb direct_sum(const FinAb& a, const FinAb& b);

  const IntVector& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  Int order() const;
  Int exponent() const;
  IntVector invariant_factors() const;
  bool is_invariant_form() const;
  bool is_trivial() const { return orders_.empty(); }

  FinAbElem zero() const;
  FinAbElem reduce(const IntVector& v) const;
  FinAbElem add(const FinAbElem& a, const FinAbElem& b) const;
  FinAbElem scale(const Int& k, const FinAbElem& a) const;
  Int element_order(const FinAbElem& a) const;
  std::vector<FinAbElem> elements(const Limits& limits = {}) const;

  // Endomorphisms act on column vectors: x -> M x, coordinate i taken mod m_i.
  bool is_endomorphism(const IntMatrix& m) const;
  bool is_automorphism(const IntMatrix& m) const;
  FinAbElem apply(const IntMatrix& m, const FinAbElem& x) const;
  IntMatrix compose(const IntMatrix& outer, const IntMatrix& inner) const;

  std::string str() const;

  friend bool operator==(const FinAb& a, const FinAb& b) { return a.orders_ == b.orders_; }

private:
  IntVector orders_;
};

class FinAbSubgroup {
public:
  static FinAbSubgroup generated_by(const FinAb& parent, std::span<const FinAbElem> gens);
  static FinAbSubgroup trivial(const FinAb& parent);
  static FinAbSubgroup whole(const FinAb& parent);
  // Adopts an HNF preimage lattice; throws NotSubgroup if it is not one.
  static FinAbSubgroup from_lattice(const FinAb& parent, const IntMatrix& lattice);

  const FinAb& parent() const { return parent_; }
  const IntMatrix& lattice() const { return lattice_; }
  Int order() const;
  Int exponent() const;
  bool is_trivial() const { return order() == 1; }

  // Nonzero reductions of the lattice rows; they generate the subgroup.
  std::vector<FinAbElem> generators() const;
  std::vector<FinAbElem> elements(const Limits& limits = {}) const;
  bool contains(const FinAbElem& x) const;
  bool is_subgroup_of(const FinAbSubgroup& other) const;

  FinAbSubgroup image(const IntMatrix& endomorphism) const;
  FinAbSubgroup join(const FinAbSubgroup& other) const;
  FinAbSubgroup intersect(const FinAbSubgroup& other) const;

  struct Structure {
    FinAb group;                          // abstract group, invariant form
    std::vector<FinAbElem> generator_images;  // image of each standard generator
  };
  Structure structure() const;

  friend bool operator==(const FinAbSubgroup& a, const FinAbSubgroup& b) {
    return a.parent_ == b.parent_ && a.lattice_ == b.lattice_;
  }
  friend bool operator<(const FinAbSubgroup& a, const FinAbSubgroup& b);
  friend std::vector<FinAbSubgroup> subgroups(const FinAb& a, const Limits& limits);

private:
  FinAbSubgroup(FinAb parent, IntMatrix lattice)
      : parent_(std::move(parent)), lattice_(std::move(lattice)) {}
  FinAb parent_;
  IntMatrix lattice_;
};

class FinAbHom {
public:
  // images: target.rank() x source.rank(); column i is the image of generator i.
  FinAbHom(FinAb source, FinAb target, IntMatrix images);

  const FinAb& source() const { return source_; }
  const FinAb& target() const { return target_; }
  const IntMatrix& images() const { return images_; }
  FinAbElem apply(const FinAbElem& x) const;
  FinAbSubgroup image() const;
  bool is_surjective() const;

  friend bool operator==(const FinAbHom& a, const FinAbHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

private:
  FinAb source_;
  FinAb target_;
  IntMatrix images_;
};

// All subgroups, canonically ordered by (order, lattice).
std::vector<FinAbSubgroup> subgroups(const FinAb& a, const Limits& limits = {});

std::vector<FinAbHom> homomorphisms(const FinAb& h, const FinAb& k, bool surjective_only,
                                    const Limits& limits = {});

FinAb quotient(const FinAb& a, const FinAbSubgroup& s);

using Word = std::vector<std::size_t>;  // generator indices, applied left to right

struct Orbit {
  std::vector<FinAbSubgroup> members;  // BFS order, members[0] is the start
  std::vector<Word> words;             // words[i] carries the start to members[i]
};

Orbit subgroup_orbit(const FinAb& a, const FinAbSubgroup& start,
                     std::span<const IntMatrix> generators, const Limits& limits = {});

std::optional<Word> orbit_equivalent(const FinAb& a, const FinAbSubgroup& s1,
                                     const FinAbSubgroup& s2,
                                     std::span<const IntMatrix> generators,
                                     const Limits& limits = {});

FinAbSubgroup apply_word(const FinAbSubgroup& s, const Word& word,
                         std::span<const IntMatrix> generators);

// Number of divisors; used for cyclic subgroup counts.
std::size_t divisor_count(const Int& n);
std::vector<Int> divisors(const Int& n);

}  // namespace redgrp

#endif  // REDGRP_FINAB_HPP_
