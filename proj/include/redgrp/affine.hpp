// Connected affine groups modeled as a reductive datum together with the
// dimension u of the unipotent radical. Only u enters the invariant formulas,
// so no further unipotent structure is kept.

#ifndef REDGRP_AFFINE_HPP_
#define REDGRP_AFFINE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "redgrp/reductive.hpp"

namespace redgrp {

struct AffineDatum {
  GluingDatum reductive_part;
  std::size_t u = 0;

  friend bool operator==(const AffineDatum&, const AffineDatum&) = default;
};

InvariantReport invariants(const AffineDatum& a);

struct StructureFlags {
  bool reductive = false;
  bool semisimple = false;
  bool solvable = false;
  bool unipotent = false;
  bool torus = false;

  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

// The flags read off the invariant report (dim, mh, units).
StructureFlags criteria_flags(const InvariantReport& r);
// The flags read off the presentation (u, n, S).
StructureFlags structural_flags(const AffineDatum& a);

// Both of the above; CriterionMismatch if they disagree.
StructureFlags classify(const AffineDatum& a);

struct SolvableSignature {
  std::size_t t = 0;  // factors A^1_* (units)
  std::size_t r = 0;  // factors A^1
};

// Underlying variety A_*^t x A^r of a solvable group; NotSolvable otherwise.
SolvableSignature solvable_variety_signature(const AffineDatum& a);

struct FactorizationReport {
  // G = D x Z as varieties, D the derived group and Z = G_m^n; present when
  // units > 0.
  bool has_torus_factor = false;
  std::size_t derived_dim = 0;
  std::size_t torus_dim = 0;
  std::vector<RationalVector> iota;  // cocharacters defining Z -> G

  // For semisimple groups: every variety factor has no nonconstant units, and
  // none is a curve, a surface, or contractible of positive dimension.
  bool semisimple_obstructions = false;
  std::vector<std::string> obstructions;
};

FactorizationReport factorization_report(const GluingDatum& d);

}  // namespace redgrp

#endif  // REDGRP_AFFINE_HPP_
