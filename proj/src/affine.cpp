#include "redgrp/affine.hpp"

#include "redgrp/error.hpp"

namespace redgrp {

InvariantReport invariants(const AffineDatum& a) {
  InvariantReport r = invariants(a.reductive_part);
  r.dim += a.u;
  // mh and units are those of the reductive quotient
  r.dim_unipotent_radical = r.dim - r.mh;
  r.dim_radical = r.dim - r.mh + r.units;
  return r;
}

StructureFlags criteria_flags(const InvariantReport& r) {
  StructureFlags f;
  f.reductive = r.dim == r.mh;
  f.semisimple = r.dim == r.mh && r.units == 0;
  f.solvable = r.mh == r.units;
  f.unipotent = r.mh == 0 && r.units == 0;
  f.torus = r.dim == r.units;
  return f;
}

StructureFlags structural_flags(const AffineDatum& a) {
  const bool no_ss = a.reductive_part.semisimple().empty();
  const std::size_t n = a.reductive_part.torus_rank();
  StructureFlags f;
  f.reductive = a.u == 0;
  f.semisimple = a.u == 0 && n == 0;
  f.solvable = no_ss;
  f.unipotent = no_ss && n == 0;
  f.torus = no_ss && a.u == 0;
  return f;
}

StructureFlags classify(const AffineDatum& a) {
  const StructureFlags by_criteria = criteria_flags(invariants(a));
  const StructureFlags by_structure = structural_flags(a);
  if (!(by_criteria == by_structure))
    fail(Errc::CriterionMismatch, "criteria and structure disagree for " +
                                      a.reductive_part.name() + " with u = " + std::to_string(a.u));
  return by_criteria;
}

SolvableSignature solvable_variety_signature(const AffineDatum& a) {
  if (!classify(a).solvable)
    fail(Errc::NotSolvable, a.reductive_part.name() + " is not solvable");
  const InvariantReport r = invariants(a);
  return SolvableSignature{r.units, r.dim - r.units};
}

FactorizationReport factorization_report(const GluingDatum& d) {
  FactorizationReport out;
  const InvariantReport r = invariants(d);
  if (r.units > 0) {
    out.has_torus_factor = true;
    out.derived_dim = r.dim - r.units;
    out.torus_dim = r.units;
    out.iota = torus_split(d).cocharacters;
  }
  if (d.is_semisimple() && !d.semisimple().empty()) {
    out.semisimple_obstructions = true;
    out.obstructions = {
        "no factor with nonconstant invertible functions",
        "no factor of dimension 1",
        "no factor of dimension 2",
        "no contractible factor of positive dimension",
    };
  }
  return out;
}

}  // namespace redgrp
