#include <doctest.h>

#include "redgrp/affine.hpp"
#include "redgrp/error.hpp"
#include "support.hpp"

using namespace redgrp;

namespace {

GluingDatum plain(std::size_t n, const char* s) {
  return GluingDatum::from_parts(n, SCSemisimple::parse(std::string_view(s)), {}, 1, {}, {});
}

GluingDatum gl(int n) {
  return GluingDatum::from_parts(1, SCSemisimple({SimpleType(Family::A, n - 1)}), {{1}}, n, {{1}},
                                 {{1}});
}

std::vector<AffineDatum> corpus() {
  std::vector<AffineDatum> out;
  for (int r = 0; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r))
      for (std::size_t u = 0; u <= 3; ++u)
        out.push_back({d, u});
  return out;
}

}  // namespace

TEST_CASE("invariant examples") {
  const InvariantReport sl2 = invariants(AffineDatum{plain(0, "A1"), 0});
  CHECK(sl2 == invariants(plain(0, "A1")));

  const InvariantReport borel = invariants(AffineDatum{plain(1, "1"), 1});
  CHECK(borel.dim == 2);
  CHECK(borel.mh == 1);
  CHECK(borel.units == 1);
  CHECK(borel.dim_radical == 2);
  CHECK(borel.dim_unipotent_radical == 1);

  const InvariantReport g = invariants(AffineDatum{gl(2), 2});
  CHECK(g.dim == 6);
  CHECK(g.mh == 4);
  CHECK(g.units == 1);
  CHECK(g.dim_unipotent_radical == 2);
  CHECK(g.dim_radical == 3);
}

TEST_CASE("classification examples") {
  const StructureFlags torus = classify({plain(2, "1"), 0});
  CHECK(torus == StructureFlags{true, false, true, false, true});
  const StructureFlags borel = classify({plain(1, "1"), 1});
  CHECK(borel == StructureFlags{false, false, true, false, false});
  const StructureFlags unip = classify({GluingDatum(), 3});
  CHECK(unip == StructureFlags{false, false, true, true, false});
  const StructureFlags sl2 = classify({plain(0, "A1"), 0});
  CHECK(sl2 == StructureFlags{true, true, false, false, false});
  // the trivial group is everything at once
  CHECK(classify({GluingDatum(), 0}) == StructureFlags{true, true, true, true, true});
}

TEST_CASE("solvable signatures") {
  const SolvableSignature t = solvable_variety_signature({plain(3, "1"), 0});
  CHECK(t.t == 3);
  CHECK(t.r == 0);
  const SolvableSignature u = solvable_variety_signature({GluingDatum(), 5});
  CHECK(u.t == 0);
  CHECK(u.r == 5);
  const SolvableSignature b = solvable_variety_signature({plain(1, "1"), 1});
  CHECK(b.t == 1);
  CHECK(b.r == 1);
  CHECK(support::error_of([] { solvable_variety_signature({plain(0, "A1"), 0}); }) ==
        Errc::NotSolvable);
}

TEST_CASE("formula suite over the corpus") {
  for (const AffineDatum& a : corpus()) {
    const InvariantReport r = invariants(a);
    const std::size_t n = a.reductive_part.torus_rank();
    // dimension of the unipotent radical and of the radical
    CHECK(r.dim - r.mh == a.u);
    CHECK(r.dim_unipotent_radical == a.u);
    CHECK(r.dim - r.mh + r.units == a.u + n);
    CHECK(r.dim_radical == a.u + n);
    // units <= mh <= dim; units = dim exactly for tori
    CHECK(r.units <= r.dim);
    CHECK(r.units <= r.mh);
    CHECK(r.mh <= r.dim);
    CHECK((r.units == r.dim) == (a.reductive_part.is_torus() && a.u == 0));

    const StructureFlags f = classify(a);
    CHECK(f == criteria_flags(r));
    CHECK(f == structural_flags(a));
    if (f.torus)
      CHECK((f.reductive && f.solvable));
    if (f.unipotent)
      CHECK(f.solvable);
    if (f.semisimple)
      CHECK(f.reductive);
    if (f.solvable) {
      const SolvableSignature s = solvable_variety_signature(a);
      CHECK(s.t + s.r == r.dim);
      CHECK(s.t == r.units);
    }
  }
}

TEST_CASE("factorization reports") {
  for (int n = 2; n <= 4; ++n) {
    const FactorizationReport f = factorization_report(gl(n));
    CHECK(f.has_torus_factor);
    CHECK(f.derived_dim == static_cast<std::size_t>(n * n - 1));
    CHECK(f.torus_dim == 1);
    CHECK(f.iota.size() == 1);
    CHECK_FALSE(f.semisimple_obstructions);
  }
  const FactorizationReport sl2 = factorization_report(plain(0, "A1"));
  CHECK_FALSE(sl2.has_torus_factor);
  CHECK(sl2.semisimple_obstructions);
  CHECK(sl2.obstructions.size() == 4);
  const FactorizationReport t = factorization_report(plain(3, "1"));
  CHECK(t.has_torus_factor);
  CHECK(t.derived_dim == 0);
  CHECK(t.torus_dim == 3);
  CHECK(t.iota.size() == 3);

  for (int r = 1; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r)) {
      const FactorizationReport f = factorization_report(d);
      CHECK(f.has_torus_factor == (d.torus_rank() > 0));
      CHECK(f.semisimple_obstructions == d.is_semisimple());
      if (f.has_torus_factor)
        CHECK(f.derived_dim + f.torus_dim == invariants(d).dim);
    }
}
