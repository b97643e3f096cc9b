#include <doctest.h>

#include <map>

#include "redgrp/error.hpp"
#include "redgrp/reductive.hpp"
#include "support.hpp"

using namespace redgrp;

namespace {

GluingDatum gl(int n) {
  const SCSemisimple s({SimpleType(Family::A, n - 1)});
  return GluingDatum::from_parts(1, s, {{1}}, n, {{1}}, {{1}});
}

GluingDatum plain(std::size_t n, const char* s) {
  return GluingDatum::from_parts(n, SCSemisimple::parse(std::string_view(s)), {}, 1, {}, {});
}

GluingDatum semisimple_quotient(const char* s, std::vector<IntVector> h_rows) {
  const SCSemisimple ss = SCSemisimple::parse(std::string_view(s));
  const FinAb z = center_of(ss);
  std::vector<FinAbElem> gens;
  for (const auto& r : h_rows)
    gens.push_back(z.reduce(r));
  return GluingDatum::from_subgroup(0, ss, FinAbSubgroup::generated_by(z, gens));
}

std::vector<std::string> names(const std::vector<GluingDatum>& list) {
  std::vector<std::string> out;
  for (const auto& d : list)
    out.push_back(d.name());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Simply connected semisimple groups of rank s, listed by hand.
std::vector<SCSemisimple> hand_semisimple(int s) {
  static const std::map<int, std::vector<const char*>> table{
      {0, {"1"}},
      {1, {"A1"}},
      {2, {"A1xA1", "A2", "B2", "G2"}},
      {3, {"A1xA1xA1", "A1xA2", "A1xB2", "A1xG2", "A3", "B3", "C3"}},
  };
  std::vector<SCSemisimple> out;
  for (const char* name : table.at(s))
    out.push_back(SCSemisimple::parse(std::string_view(name)));
  return out;
}

// Second enumeration path: every subgroup F of the gluing group found by
// brute-force closure, kept when F meets the torus trivially, deduplicated by
// pairwise orbit equivalence. No (H, K, alpha) decomposition and no
// canonical forms are involved.
struct RawClass {
  std::size_t n;
  SCSemisimple s;
  FinAbSubgroup f;
};

std::vector<RawClass> raw_enumerate(int r) {
  std::vector<RawClass> reps;
  for (int n = 0; n <= r; ++n)
    for (const SCSemisimple& s : hand_semisimple(r - n)) {
      const FinAb a = GluingDatum::gluing_group(n, s);
      const std::size_t k = center_of(s).rank();
      std::vector<long> orders;
      for (const Int& m : a.cyclic_orders())
        orders.push_back(m.get_si());
      const oracle::Group g(orders);
      std::vector<IntMatrix> gens;
      for (const NamedMatrix& m : gluing_action_generators(n, s))
        gens.push_back(m.matrix);
      const std::size_t first = reps.size();
      for (const oracle::Subset& elems : oracle::subgroups(g)) {
        bool meets_torus = false;
        std::vector<FinAbElem> fe;
        for (std::size_t x : elems) {
          const std::vector<long> c = g.coords(x);
          if (x != 0 && std::all_of(c.begin(), c.begin() + k, [](long v) { return v == 0; }))
            meets_torus = true;
          IntVector v(c.begin(), c.end());
          fe.push_back(a.reduce(v));
        }
        if (meets_torus)
          continue;
        const FinAbSubgroup f = FinAbSubgroup::generated_by(a, fe);
        bool known = false;
        for (std::size_t i = first; i < reps.size() && !known; ++i)
          known = orbit_equivalent(a, reps[i].f, f, gens).has_value();
        if (!known)
          reps.push_back({static_cast<std::size_t>(n), s, f});
      }
    }
  return reps;
}

}  // namespace

TEST_CASE("semisimple groups of a given rank") {
  for (int s = 0; s <= 3; ++s) {
    auto want = hand_semisimple(s);
    std::sort(want.begin(), want.end());
    CHECK(semisimple_of_rank(s) == want);
  }
}

TEST_CASE("gluing data from parts") {
  const GluingDatum g2 = gl(2);
  CHECK(g2.name() == "GL2");
  CHECK(g2.h().order() == 2);
  CHECK(g2.k_modulus() == 2);
  CHECK(g2.k().order() == 2);
  CHECK(gl(3).name() == "GL3");
  CHECK(plain(1, "A1").name() == "SL2xGm");
  CHECK(plain(2, "1").name() == "Gm^2");
  CHECK(GluingDatum().name() == "1");

  const SCSemisimple a1 = SCSemisimple::parse("A1");
  CHECK(support::error_of([&] { GluingDatum::from_parts(1, a1, {{1}}, 3, {{1}}, {{1}}); }) ==
        Errc::BadModulus);
  CHECK(support::error_of([&] { GluingDatum::from_parts(1, a1, {{1}}, 2, {{0}}, {{1}}); }) ==
        Errc::BadGluing);
  CHECK(support::error_of([&] { GluingDatum::from_parts(1, a1, {{1}}, 2, {{1}}, {}); }) ==
        Errc::BadGluing);
  CHECK(support::error_of([&] { GluingDatum::from_parts(1, a1, {{1, 0}}, 2, {{1}}, {{1}}); }) ==
        Errc::BadGluing);

  const FinAb a = GluingDatum::gluing_group(1, a1);
  const FinAbElem torus_elem = a.reduce({0, 1});
  CHECK(support::error_of([&] {
          GluingDatum::from_subgroup(1, a1, FinAbSubgroup::generated_by(a, std::span(&torus_elem, 1)));
        }) == Errc::BadGluing);
}

TEST_CASE("normalize") {
  const SCSemisimple a1 = SCSemisimple::parse("A1");
  CHECK(normalize(1, a1, 2, {}) == plain(1, "A1"));
  CHECK(normalize(1, SCSemisimple(), 2, {{{1}, {}}}) == plain(1, "1"));
  const GluingDatum g = normalize(1, a1, 2, {{{1}, {1}}});
  CHECK(g == gl(2));
  CHECK(g.h().order() == 2);
  CHECK(g.k().order() == 2);
  // mu_4 in the torus glued to -I: divides out mu_2 first, then GL2 again
  CHECK(normalize(1, a1, 4, {{{1}, {1}}}) == gl(2));
  // mu_6 glued to the center of SL3: again GL3
  CHECK(normalize(1, SCSemisimple::parse("A2"), 6, {{{2}, {1}}}) == gl(3));
  CHECK(support::error_of([&] { normalize(1, a1, 0, {}); }) == Errc::BadModulus);
  CHECK(support::error_of([&] { normalize(1, a1, 2, {{{1, 1}, {1}}}); }) == Errc::BadModulus);
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(gl(2), gl(2)) == NamedWord{});
  CHECK_FALSE(isomorphic(gl(2), plain(1, "A1")));
  CHECK(isomorphic(normalize(1, SCSemisimple::parse("A1"), 2, {{{-1}, {1}}}), gl(2)));
  // alpha = -1 and alpha = 1 give the same group
  const SCSemisimple a2 = SCSemisimple::parse("A2");
  CHECK(GluingDatum::from_parts(1, a2, {{1}}, 3, {{1}}, {{2}}) == gl(3));
  const GluingDatum sl2 = plain(0, "A1");
  const GluingDatum pgl2 = semisimple_quotient("A1", {{1}});
  CHECK_FALSE(isomorphic(sl2, pgl2));
  CHECK(lie_algebra_invariant(sl2) == lie_algebra_invariant(pgl2));
  CHECK(lie_algebra_invariant(gl(2)) == lie_algebra_invariant(plain(1, "A1")));
  CHECK_FALSE(lie_algebra_invariant(plain(1, "1")) == lie_algebra_invariant(sl2));
}

TEST_CASE("enumeration: small ranks") {
  const auto r0 = enumerate_rank(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == GluingDatum());

  CHECK(names(enumerate_rank(1)) == std::vector<std::string>{"SL2", "PGL2", "Gm"});

  const auto n2 = names(enumerate_rank(2));
  CHECK(n2.size() == 13);
  for (const char* want : {"SL3", "PGL3", "Sp4", "SO5", "G2", "SO4", "GL2", "SL2xGm", "PGL2xGm",
                           "Gm^2", "SL2xSL2", "PGL2xSL2", "PGL2xPGL2"})
    CHECK_MESSAGE(contains(n2, want), want);

  CHECK(enumerate_rank(3).size() == 45);

  Limits low;
  low.max_rank = 2;
  CHECK(support::error_of([&] { enumerate_rank(3, low); }) == Errc::TooLarge);
}

TEST_CASE("enumeration agrees with the raw second path") {
  for (int r = 0; r <= 3; ++r) {
    const auto list = enumerate_rank(r);
    const auto raw = raw_enumerate(r);
    CHECK_MESSAGE(list.size() == raw.size(), "rank " << r);
    // every raw class matches exactly one listed datum and vice versa
    for (const RawClass& c : raw) {
      std::size_t matches = 0;
      for (const GluingDatum& d : list)
        if (d.torus_rank() == c.n && d.semisimple() == c.s) {
          std::vector<IntMatrix> gens;
          for (const NamedMatrix& m : gluing_action_generators(c.n, c.s))
            gens.push_back(m.matrix);
          matches += orbit_equivalent(d.ambient(), d.gluing(), c.f, gens).has_value();
        }
      CHECK(matches == 1);
    }
    // pairwise non-isomorphic
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        CHECK_FALSE(isomorphic(list[i], list[j]));
  }
}

TEST_CASE("character lattices") {
  const CharacterLattice t = character_lattice(plain(3, "1"));
  CHECK(t.lattice == Lattice::full(3));
  CHECK(t.roots.empty());

  const CharacterLattice sl2 = character_lattice(plain(0, "A1"));
  CHECK(sl2.lattice == Lattice::full(1));
  CHECK(sl2.roots == std::vector<IntVector>{{-2}, {2}});

  const CharacterLattice g2 = character_lattice(gl(2));
  CHECK(std::abs(oracle::det(support::to_ll(g2.lattice.basis()))) == 2);
  CHECK(g2.lattice.contains({2, 0}));
  CHECK(g2.lattice.contains({1, 1}));
  CHECK_FALSE(g2.lattice.contains({1, 0}));
  CHECK(g2.roots == std::vector<IntVector>{{0, -2}, {0, 2}});
}

TEST_CASE("character lattice index equals |F| and contains the roots") {
  for (int r = 1; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r)) {
      const CharacterLattice x = character_lattice(d);
      REQUIRE(x.lattice.rank() == d.torus_rank() + d.semisimple().rank());
      CHECK(std::llabs(oracle::det(support::to_ll(x.lattice.basis()))) ==
            d.gluing().order().get_si());
      for (const IntVector& root : x.roots)
        CHECK(x.lattice.contains(root));
    }
}

TEST_CASE("fundamental groups") {
  const FundamentalGroup sl2 = fundamental_group(plain(0, "A1"));
  CHECK(sl2.free_rank == 0);
  CHECK(sl2.torsion.is_trivial());
  const FundamentalGroup pgl2 = fundamental_group(semisimple_quotient("A1", {{1}}));
  CHECK(pgl2.free_rank == 0);
  CHECK(pgl2.torsion == support::finab({2}));
  for (int n = 2; n <= 5; ++n) {
    const FundamentalGroup g = fundamental_group(gl(n));
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.is_trivial());
  }
  // n = 0: the torsion is H itself
  for (int r = 1; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r))
      if (d.is_semisimple())
        CHECK(fundamental_group(d).torsion == d.h().structure().group);
      else
        CHECK(fundamental_group(d).free_rank == d.torus_rank());
}

TEST_CASE("invariants") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const InvariantReport t = invariants(plain(n, "1"));
    CHECK(t.dim == n);
    CHECK(t.units == n);
    CHECK(t.mh == n);
    CHECK(t.dim_radical == n);
  }
  const InvariantReport sl2 = invariants(plain(0, "A1"));
  CHECK(sl2.dim == 3);
  CHECK(sl2.units == 0);
  CHECK(sl2.mh == 3);
  for (std::size_t n = 2; n <= 5; ++n) {
    const InvariantReport g = invariants(gl(static_cast<int>(n)));
    CHECK(g.dim == n * n);
    CHECK(g.units == 1);
    CHECK(g.mh == n * n);
    CHECK(g.dim_radical == 1);
    CHECK(g.pi1_free_rank == 1);
    CHECK(g.pi1_torsion.is_trivial());
  }
}

TEST_CASE("units bounded by dimension, with equality exactly for tori") {
  for (int r = 0; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r)) {
      const InvariantReport rep = invariants(d);
      CHECK(rep.units <= rep.dim);
      CHECK((rep.units == rep.dim) == d.is_torus());
    }
}

TEST_CASE("invariants are constant along isomorphisms") {
  // walk the whole orbit of every rank-2 datum and compare reports
  for (const GluingDatum& d : enumerate_rank(2)) {
    std::vector<IntMatrix> gens;
    for (const NamedMatrix& m : gluing_action_generators(d.torus_rank(), d.semisimple()))
      gens.push_back(m.matrix);
    const Orbit orbit = subgroup_orbit(d.ambient(), d.gluing(), gens);
    for (const FinAbSubgroup& f : orbit.members) {
      const GluingDatum e = GluingDatum::from_subgroup(d.torus_rank(), d.semisimple(), f);
      CHECK(isomorphic(d, e));
      CHECK(invariants(e) == invariants(d));
    }
  }
}

TEST_CASE("variety determines group") {
  CHECK(variety_determines_group(plain(2, "1")).determined);
  CHECK(variety_determines_group(plain(0, "D4")).determined);
  const GluingDatum so4 = semisimple_quotient("A1xA1", {{1, 1}});
  CHECK(so4.name() == "SO4");
  CHECK_FALSE(variety_determines_group(so4).determined);
  CHECK(variety_determines_group(semisimple_quotient("A3", {{2}})).determined);
  CHECK_FALSE(variety_determines_group(gl(2)).determined);
}

TEST_CASE("torus split") {
  for (int n = 2; n <= 5; ++n) {
    const TorusSplit s = torus_split(gl(n));
    REQUIRE(s.cocharacters.size() == 1);
    // t -> diag(t, 1, ..., 1) is t^(1/n) times diag(t^((n-1)/n), t^(-1/n), ...),
    // whose coroot coordinates are (n-i)/n
    RationalVector want{Rational(1, n)};
    for (int i = 1; i < n; ++i)
      want.push_back(Rational(n - i, n));
    for (Rational& q : want)
      q.canonicalize();
    CHECK(s.cocharacters[0] == want);
  }
  CHECK(torus_split(plain(0, "A2")).complement.rows() == 0);
  const TorusSplit t = torus_split(plain(2, "1"));
  CHECK(t.complement.rows() == 2);
  CHECK(t.coroot_saturation.rows() == 0);

  for (int r = 1; r <= 3; ++r)
    for (const GluingDatum& d : enumerate_rank(r)) {
      const TorusSplit s = torus_split(d);
      CHECK(s.complement.rows() == invariants(d).units);
      const IntMatrix stacked = vstack(s.coroot_saturation, s.complement);
      CHECK(stacked.rows() == d.torus_rank() + d.semisimple().rank());
      CHECK(is_unimodular(stacked));
    }
}
