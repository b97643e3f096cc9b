// Connected reductive groups presented as (Z x S)/F: Z = G_m^n a torus, S simply
// connected semisimple, F a finite central subgroup with F cap Z = {e}.
//
// Coordinates. F lives in the gluing group A = center_of(S) + (Z/E)^n with
// E = exponent(center_of(S)): the center block comes first, then one
// coordinate per torus factor, z in Z/E standing for exp(2 pi i z/E). Since
// F meets Z trivially it is the graph of an epimorphism alpha: H -> K with
// H = pi_S(F) and K = pi_Z(F), and every element of F has order dividing E.
//
// Lattices use (torus, semisimple) coordinates: characters as (chi, lambda)
// with lambda in fundamental-weight coordinates, cocharacters as (y, c) with c
// in simple-coroot coordinates; the pairing is the plain dot product.

#ifndef REDGRP_REDUCTIVE_HPP_
#define REDGRP_REDUCTIVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "redgrp/finab.hpp"
#include "redgrp/semisimple.hpp"

namespace redgrp {

class GluingDatum {
public:
  GluingDatum() = default;  // the trivial group

  // F must be a subgroup of gluing_group(n, s) meeting the torus trivially
  // (BadGluing otherwise). The stored F is the canonical orbit representative.
  static GluingDatum from_subgroup(std::size_t n, const SCSemisimple& s, const FinAbSubgroup& f,
                                   const Limits& limits = {});
  // (H, K, alpha) presentation: h_rows generate H in center coordinates,
  // alpha_rows[i] in (Z/e)^n is the image of h_rows[i]. K must equal the span
  // of alpha_rows. Throws BadGluing if alpha is not well defined on H.
  static GluingDatum from_parts(std::size_t n, const SCSemisimple& s,
                                const std::vector<IntVector>& h_rows, const Int& e,
                                const std::vector<IntVector>& k_rows,
                                const std::vector<IntVector>& alpha_rows,
                                const Limits& limits = {});

  static FinAb gluing_group(std::size_t n, const SCSemisimple& s);

  std::size_t torus_rank() const { return n_; }
  const SCSemisimple& semisimple() const { return s_; }
  const FinAbSubgroup& gluing() const { return f_; }
  FinAb ambient() const { return f_.parent(); }
  Int center_exponent() const;  // E

  // pi_S(F) as a subgroup of center_of(S)
  FinAbSubgroup h() const;
  Int k_modulus() const;  // e = exponent(H)
  // pi_Z(F) as a subgroup of (Z/e)^n
  FinAbSubgroup k() const;
  // alpha on the canonical generators of H, values in (Z/e)^n
  std::vector<FinAbElem> h_generators() const;
  std::vector<FinAbElem> alpha_images() const;

  bool is_torus() const { return s_.empty(); }
  bool is_semisimple() const { return n_ == 0; }
  std::string name() const;

  friend bool operator==(const GluingDatum& a, const GluingDatum& b) {
    return a.n_ == b.n_ && a.s_ == b.s_ && a.f_ == b.f_;
  }
  friend bool operator<(const GluingDatum& a, const GluingDatum& b);

private:
  GluingDatum(std::size_t n, SCSemisimple s, FinAbSubgroup f)
      : n_(n), s_(std::move(s)), f_(std::move(f)) {}

  std::size_t n_ = 0;
  SCSemisimple s_;
  FinAbSubgroup f_ = FinAbSubgroup::trivial(FinAb());
};

// Generators of Aut(Z) x Out_ext(S) acting on the gluing group: the images
// of the GL_n(Z) generators on (Z/E)^n and the extended outer automorphisms.
std::vector<NamedMatrix> gluing_action_generators(std::size_t n, const SCSemisimple& s);

// A generator of the raw subgroup: torus part in (Z/N)^n, center part in
// center_of(S) coordinates.
struct RawGluingElement {
  IntVector torus;
  IntVector center;
};

// (Z x S)/F_raw for an arbitrary finite F_raw inside mu_N^n x center(S):
// divides out F_raw cap Z by re-coordinatizing the torus. BadModulus when
// N < 1 or a generator has the wrong shape.
GluingDatum normalize(std::size_t n, const SCSemisimple& s, const Int& modulus,
                      const std::vector<RawGluingElement>& generators, const Limits& limits = {});

std::optional<NamedWord> isomorphic(const GluingDatum& a, const GluingDatum& b,
                                    const Limits& limits = {});

// Every connected reductive group of rank r, one canonical datum per
// isomorphism class, sorted. p is the characteristic parameter of the a'
// condition on K (0: inert).
std::vector<GluingDatum> enumerate_rank(int r, const Limits& limits = {}, unsigned p = 0);

// All simply connected semisimple groups of rank s.
std::vector<SCSemisimple> semisimple_of_rank(int s);

struct CharacterLattice {
  Lattice lattice;                // X*(T) in (chi, lambda) coordinates
  std::vector<IntVector> roots;   // all roots, same coordinates
};

CharacterLattice character_lattice(const GluingDatum& d);

struct FundamentalGroup {
  std::size_t free_rank = 0;
  FinAb torsion;  // invariant form
};

FundamentalGroup fundamental_group(const GluingDatum& d);

struct InvariantReport {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t units = 0;
  std::size_t mh = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_unipotent_radical = 0;
  std::size_t pi1_free_rank = 0;
  FinAb pi1_torsion;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// mh is evaluated through the reductivity equality mh = dim.
InvariantReport invariants(const GluingDatum& d);

struct LieAlgebraInvariant {
  std::vector<SimpleType> factors;
  std::size_t torus_rank = 0;
  friend bool operator==(const LieAlgebraInvariant&, const LieAlgebraInvariant&) = default;
};

LieAlgebraInvariant lie_algebra_invariant(const GluingDatum& d);

struct Determination {
  bool determined = false;
  std::string reason;
};

// Whether the underlying variety of d is known to determine d up to
// isomorphism. This holds for tori, simply connected semisimple groups and
// simple groups.
Determination variety_determines_group(const GluingDatum& d);

using RationalVector = std::vector<Rational>;

struct TorusSplit {
  // Both in the basis of Y = X* dual to character_lattice(d).lattice.basis().
  IntMatrix coroot_saturation;  // s rows
  IntMatrix complement;         // n rows
  // The complement as cocharacters of Z x S over Q: (y, c) with y in torus
  // coordinates and c in simple-coroot coordinates. Rows are normalized: the
  // torus parts form an HNF and the coroot parts lie in [0, 1).
  std::vector<RationalVector> cocharacters;
};

TorusSplit torus_split(const GluingDatum& d);

}  // namespace redgrp

#endif  // REDGRP_REDUCTIVE_HPP_
