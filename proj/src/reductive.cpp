#include "redgrp/reductive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "redgrp/error.hpp"

namespace redgrp {

namespace {

// Number of torus coordinates present in the gluing group (none when E = 1).
std::size_t torus_coords(std::size_t n, const Int& e) { return e > 1 ? n : 0; }

IntMatrix block_cartan(const SCSemisimple& s) {
  IntMatrix c(0, 0);
  for (const SimpleType& t : s.factors())
    c = block_diagonal(c, cartan_matrix(t));
  return c;
}

FinAbElem join_elem(const IntVector& center, const IntVector& torus) {
  FinAbElem x{center};
  x.coords.insert(x.coords.end(), torus.begin(), torus.end());
  return x;
}

FinAbSubgroup torus_subgroup(const FinAb& a, std::size_t center_rank) {
  std::vector<FinAbElem> gens;
  for (std::size_t i = center_rank; i < a.rank(); ++i) {
    FinAbElem e = a.zero();
    e.coords[i] = 1;
    gens.push_back(e);
  }
  return FinAbSubgroup::generated_by(a, gens);
}

std::vector<IntMatrix> matrices(const std::vector<NamedMatrix>& named) {
  std::vector<IntMatrix> out;
  for (const NamedMatrix& g : named)
    out.push_back(g.matrix);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GluingDatum

FinAb GluingDatum::gluing_group(std::size_t n, const SCSemisimple& s) {
  const FinAb z = center_of(s);
  return FinAb::direct_sum(z, FinAb::cyclic_power(z.exponent(), n));
}

std::vector<NamedMatrix> gluing_action_generators(std::size_t n, const SCSemisimple& s) {
  const FinAb z = center_of(s);
  const std::size_t k = z.rank();
  const std::size_t t = torus_coords(n, z.exponent());
  std::vector<NamedMatrix> out;
  for (const NamedMatrix& g : extended_out_generators(s))
    out.push_back({g.name, block_diagonal(g.matrix, IntMatrix::identity(t))});
  if (t > 0)
    for (const NamedMatrix& g : gl_generators(n))
      out.push_back({"torus:" + g.name, block_diagonal(IntMatrix::identity(k), g.matrix)});
  return out;
}

GluingDatum GluingDatum::from_subgroup(std::size_t n, const SCSemisimple& s,
                                       const FinAbSubgroup& f, const Limits& limits) {
  const FinAb a = gluing_group(n, s);
  if (!(f.parent() == a))
    fail(Errc::NotSubgroup, "gluing subgroup does not live in " + a.str());
  const std::size_t k = center_of(s).rank();
  if (!f.intersect(torus_subgroup(a, k)).is_trivial())
    fail(Errc::BadGluing, "the gluing subgroup meets the torus");
  const std::vector<IntMatrix> gens = matrices(gluing_action_generators(n, s));
  const Orbit orbit = subgroup_orbit(a, f, gens, limits);
  const FinAbSubgroup rep = *std::min_element(orbit.members.begin(), orbit.members.end());
  return GluingDatum(n, s, rep);
}

GluingDatum GluingDatum::from_parts(std::size_t n, const SCSemisimple& s,
                                    const std::vector<IntVector>& h_rows, const Int& e,
                                    const std::vector<IntVector>& k_rows,
                                    const std::vector<IntVector>& alpha_rows,
                                    const Limits& limits) {
  const FinAb z = center_of(s);
  const Int big_e = z.exponent();
  if (e < 1 || big_e % e != 0)
    fail(Errc::BadModulus, "K modulus " + e.get_str() + " does not divide the center exponent " +
                               big_e.get_str());
  if (alpha_rows.size() != h_rows.size())
    fail(Errc::BadGluing, "alpha needs one image per generator of H");
  auto check_len = [](const IntVector& v, std::size_t len, const char* what) {
    if (v.size() != len)
      fail(Errc::BadGluing, std::string(what) + " row has length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(len));
  };
  const FinAb ke = FinAb::cyclic_power(e, n);
  const std::size_t t = torus_coords(n, big_e);
  std::vector<FinAbElem> hs, ks, alphas, fs;
  for (std::size_t i = 0; i < h_rows.size(); ++i) {
    check_len(h_rows[i], z.rank(), "H");
    check_len(alpha_rows[i], n, "alpha");
    hs.push_back(z.reduce(h_rows[i]));
    IntVector torus(t, Int(0));
    for (std::size_t j = 0; j < t; ++j)
      torus[j] = floor_mod(alpha_rows[i][j] * (big_e / e), big_e);
    fs.push_back(join_elem(hs.back().coords, torus));
    if (ke.rank() > 0)
      alphas.push_back(ke.reduce(alpha_rows[i]));
  }
  for (const IntVector& r : k_rows) {
    check_len(r, n, "K");
    if (ke.rank() > 0)
      ks.push_back(ke.reduce(r));
  }
  const FinAbSubgroup h = FinAbSubgroup::generated_by(z, hs);
  if (h.exponent() != e)
    fail(Errc::BadGluing, "K modulus " + e.get_str() + " differs from the exponent of H, " +
                              h.exponent().get_str());
  if (!(FinAbSubgroup::generated_by(ke, ks) == FinAbSubgroup::generated_by(ke, alphas)))
    fail(Errc::BadGluing, "K is not the image of alpha");
  const FinAb a = gluing_group(n, s);
  const FinAbSubgroup f = FinAbSubgroup::generated_by(a, fs);
  if (!f.intersect(torus_subgroup(a, z.rank())).is_trivial())
    fail(Errc::BadGluing, "alpha is not a well-defined homomorphism on H");
  return from_subgroup(n, s, f, limits);
}

Int GluingDatum::center_exponent() const { return center_of(s_).exponent(); }

FinAbSubgroup GluingDatum::h() const {
  const FinAb z = center_of(s_);
  std::vector<FinAbElem> gens;
  for (const FinAbElem& g : f_.generators())
    gens.push_back(FinAbElem{IntVector(g.coords.begin(), g.coords.begin() + z.rank())});
  return FinAbSubgroup::generated_by(z, gens);
}

Int GluingDatum::k_modulus() const { return h().exponent(); }

FinAbSubgroup GluingDatum::k() const {
  const FinAb ke = FinAb::cyclic_power(k_modulus(), n_);
  std::vector<FinAbElem> gens;
  for (const FinAbElem& a : alpha_images())
    gens.push_back(a);
  return FinAbSubgroup::generated_by(ke, gens);
}

std::vector<FinAbElem> GluingDatum::h_generators() const { return h().generators(); }

std::vector<FinAbElem> GluingDatum::alpha_images() const {
  const std::size_t k = center_of(s_).rank();
  const Int big_e = center_exponent();
  const Int e = k_modulus();
  const FinAb ke = FinAb::cyclic_power(e, n_);
  std::map<IntVector, IntVector> graph;
  for (const FinAbElem& x : f_.elements())
    graph.emplace(IntVector(x.coords.begin(), x.coords.begin() + k),
                  IntVector(x.coords.begin() + k, x.coords.end()));
  std::vector<FinAbElem> out;
  for (const FinAbElem& g : h_generators()) {
    const IntVector& torus = graph.at(g.coords);
    FinAbElem img = ke.zero();
    for (std::size_t j = 0; j < img.coords.size(); ++j)
      img.coords[j] = torus[j] / (big_e / e);
    out.push_back(img);
  }
  return out;
}

std::string GluingDatum::name() const {
  const std::string torus = n_ == 1 ? "Gm" : "Gm^" + std::to_string(n_);
  if (s_.empty())
    return n_ == 0 ? "1" : torus;
  const FinAbSubgroup hh = h();
  const std::vector<FinAbElem> alpha = alpha_images();
  const bool k_trivial = std::all_of(alpha.begin(), alpha.end(), [](const FinAbElem& x) {
    return std::all_of(x.coords.begin(), x.coords.end(), [](const Int& c) { return c == 0; });
  });
  if (k_trivial) {
    const std::string ss = quotient_name(s_, hh);
    return n_ == 0 ? ss : ss + "x" + torus;
  }
  const auto& factors = s_.factors();
  if (n_ == 1 && factors.size() == 1 && factors[0].family() == Family::A &&
      hh.order() == center_exponent() && alpha.size() == 1) {
    // H is the whole center, generated by the class of omega_1^vee
    const Int& a = alpha[0].coords[0];
    if (a == 1 || a == k_modulus() - 1)
      return "GL" + std::to_string(factors[0].rank() + 1);
  }
  const std::size_t k = center_of(s_).rank();
  std::string gens;
  for (const FinAbElem& g : f_.generators()) {
    std::string c;
    for (std::size_t i = 0; i < g.coords.size(); ++i)
      c += (i == 0 ? "" : (i == k ? ";" : ",")) + g.coords[i].get_str();
    gens += (gens.empty() ? "(" : ",(") + c + ")";
  }
  std::string cover;
  for (const SimpleType& st : factors)
    cover += (cover.empty() ? "" : "x") + simply_connected_name(st);
  return "(" + cover + "x" + torus + ")/<" + gens + ">";
}

bool operator<(const GluingDatum& a, const GluingDatum& b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  if (!(a.s_ == b.s_))
    return a.s_ < b.s_;
  return a.f_ < b.f_;
}

// ---------------------------------------------------------------------------

GluingDatum normalize(std::size_t n, const SCSemisimple& s, const Int& modulus,
                      const std::vector<RawGluingElement>& generators, const Limits& limits) {
  if (modulus < 1)
    fail(Errc::BadModulus, "modulus must be positive, got " + modulus.get_str());
  const SemisimpleCenter zc(s);
  const std::size_t k = zc.group().rank();
  const std::size_t sr = static_cast<std::size_t>(s.rank());
  for (const RawGluingElement& g : generators)
    if (g.torus.size() != n || g.center.size() != k)
      fail(Errc::BadModulus, "raw gluing element has the wrong shape for torus rank " +
                                 std::to_string(n) + " and center " + zc.group().str());

  // Cocharacter lattice of (Z x S)/F_raw; torus coordinates scaled by N.
  const IntMatrix cartan = block_cartan(s);
  IntMatrix rows(0, n + sr);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix r(1, n + sr);
    r(0, i) = modulus;
    rows = vstack(rows, r);
  }
  for (std::size_t j = 0; j < sr; ++j) {
    IntMatrix r(1, n + sr);
    for (std::size_t i = 0; i < sr; ++i)
      r(0, n + i) = cartan(i, j);
    rows = vstack(rows, r);
  }
  for (const RawGluingElement& g : generators) {
    IntMatrix r(1, n + sr);
    for (std::size_t i = 0; i < n; ++i)
      r(0, i) = floor_mod(g.torus[i], modulus);
    const IntVector w = zc.lift(zc.group().reduce(g.center));
    for (std::size_t i = 0; i < sr; ++i)
      r(0, n + i) = w[i];
    rows = vstack(rows, r);
  }
  const IntMatrix y = hermite_normal_form(rows);

  const FinAb a = GluingDatum::gluing_group(n, s);
  const Int big_e = zc.group().exponent();
  const std::size_t t = torus_coords(n, big_e);
  std::vector<FinAbElem> fs;
  if (n == 0) {
    for (const RawGluingElement& g : generators)
      fs.push_back(zc.group().reduce(g.center));
  } else {
    // torus cocharacters of the quotient: {z : (z, 0) in Y}
    IntMatrix lambda_z;
    if (sr == 0) {
      lambda_z = y;
    } else {
      const IntMatrix coeffs = integer_kernel(y.columns(n, sr).transpose());
      lambda_z = hermite_normal_form(coeffs * y.columns(0, n));
    }
    const RationalInverse inv = rational_inverse(lambda_z);
    for (const RawGluingElement& g : generators) {
      IntVector torus(t, Int(0));
      for (std::size_t j = 0; j < t; ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < n; ++i)
          acc += floor_mod(g.torus[i], modulus) * inv.numerator(i, j);
        Rational u(acc * big_e, inv.denominator);
        u.canonicalize();
        if (u.get_den() != 1)
          throw std::logic_error("normalize: gluing element of unexpected order");
        torus[j] = floor_mod(u.get_num(), big_e);
      }
      fs.push_back(join_elem(zc.group().reduce(g.center).coords, torus));
    }
  }
  return GluingDatum::from_subgroup(n, s, FinAbSubgroup::generated_by(a, fs), limits);
}

std::optional<NamedWord> isomorphic(const GluingDatum& a, const GluingDatum& b,
                                    const Limits& limits) {
  if (a.torus_rank() != b.torus_rank() || !(a.semisimple() == b.semisimple()))
    return std::nullopt;
  const std::vector<NamedMatrix> gens =
      gluing_action_generators(a.torus_rank(), a.semisimple());
  const std::optional<Word> w =
      orbit_equivalent(a.ambient(), a.gluing(), b.gluing(), matrices(gens), limits);
  if (!w)
    return std::nullopt;
  NamedWord out;
  for (std::size_t g : *w)
    out.push_back(gens[g].name);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<SimpleType> types_of_rank(int k) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    try {
      out.emplace_back(f, k);
    } catch (const Error&) {
    }
  }
  return out;
}

void extend_types(int remaining, const std::vector<SimpleType>& all, std::size_t from,
                  std::vector<SimpleType>& current, std::vector<SCSemisimple>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = from; i < all.size(); ++i) {
    if (all[i].rank() > remaining)
      continue;
    current.push_back(all[i]);
    extend_types(remaining - all[i].rank(), all, i, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SCSemisimple> semisimple_of_rank(int s) {
  std::vector<SimpleType> all;
  for (int k = 1; k <= s; ++k)
    for (const SimpleType& t : types_of_rank(k))
      all.push_back(t);
  std::sort(all.begin(), all.end());
  std::vector<SimpleType> current;
  std::vector<SCSemisimple> out;
  extend_types(s, all, 0, current, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GluingDatum> enumerate_rank(int r, const Limits& limits, unsigned p) {
  if (r < 0)
    throw std::invalid_argument("enumerate_rank: negative rank");
  if (r > limits.max_rank)
    fail(Errc::TooLarge, "rank " + std::to_string(r) + " exceeds the enumeration bound " +
                             std::to_string(limits.max_rank));
  std::set<GluingDatum> found;
  for (int n = 0; n <= r; ++n) {
    for (const SCSemisimple& s : semisimple_of_rank(r - n)) {
      const FinAb z = center_of(s);
      const Int big_e = z.exponent();
      const FinAb a = GluingDatum::gluing_group(n, s);
      const std::size_t t = torus_coords(n, big_e);
      for (const FinAbSubgroup& h : subgroups(z, limits)) {
        const Int e = h.exponent();
        const FinAbSubgroup::Structure hs = h.structure();
        for (const FinAbSubgroup& k : subgroups(FinAb::cyclic_power(e, n), limits)) {
          const FinAbSubgroup::Structure ks = k.structure();
          bool admissible = true;
          for (const Int& d : ks.group.cyclic_orders())
            admissible = admissible && prime_to_p_part(d, p) == d;
          if (!admissible)
            continue;
          for (const FinAbHom& alpha : homomorphisms(hs.group, ks.group, true, limits)) {
            std::vector<FinAbElem> fs;
            for (std::size_t i = 0; i < hs.generator_images.size(); ++i) {
              IntVector torus(t, Int(0));
              for (std::size_t j = 0; j < ks.generator_images.size(); ++j) {
                const Int& coeff = alpha.images()(j, i);
                for (std::size_t c = 0; c < t; ++c)
                  torus[c] += coeff * ks.generator_images[j].coords[c];
              }
              for (Int& c : torus)
                c = floor_mod(c * (big_e / e), big_e);
              fs.push_back(join_elem(hs.generator_images[i].coords, torus));
            }
            found.insert(
                GluingDatum::from_subgroup(n, s, FinAbSubgroup::generated_by(a, fs), limits));
            if (found.size() > limits.max_results)
              fail(Errc::TooLarge, "enumeration exceeds the result bound");
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Lattices

CharacterLattice character_lattice(const GluingDatum& d) {
  const std::size_t n = d.torus_rank();
  const SCSemisimple& s = d.semisimple();
  const std::size_t sr = static_cast<std::size_t>(s.rank());
  const SemisimpleCenter zc(s);
  const std::size_t k = zc.group().rank();
  const Int big_e = zc.group().exponent();
  const IntMatrix cartan = block_cartan(s);
  const RationalInverse inv =
      sr ? rational_inverse(cartan) : RationalInverse{IntMatrix(0, 0), Int(1)};
  const Int modulus = big_e * inv.denominator;

  // (chi, lambda) pairs to an integer with (z/E, C^{-1} w) for each gluing
  // generator; scaled by the modulus.
  std::vector<FinAbElem> gens = d.gluing().generators();
  IntMatrix m(gens.size(), n + sr);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const IntVector& x = gens[g].coords;
    for (std::size_t i = 0; i + k < x.size(); ++i)
      m(g, i) = x[k + i] * inv.denominator;
    const IntVector w = zc.lift(FinAbElem{IntVector(x.begin(), x.begin() + k)});
    const IntVector cw = inv.numerator * w;
    for (std::size_t i = 0; i < sr; ++i)
      m(g, n + i) = big_e * cw[i];
  }
  CharacterLattice out;
  out.lattice = Lattice::from_generators(n + sr, congruence_kernel(m, modulus));

  std::size_t offset = n;
  for (const SimpleType& t : s.factors()) {
    const RootSystem rs = generate_roots(t);
    for (const std::vector<long>& beta : rs.roots) {
      IntVector v(n + sr, Int(0));
      for (int j = 0; j < t.rank(); ++j)
        for (int i = 0; i < t.rank(); ++i)
          v[offset + j] += Int(beta[i]) * rs.cartan(i, j);
      out.roots.push_back(v);
    }
    offset += t.rank();
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

FundamentalGroup fundamental_group(const GluingDatum& d) {
  const std::size_t n = d.torus_rank();
  const std::size_t sr = static_cast<std::size_t>(d.semisimple().rank());
  if (sr == 0)
    return FundamentalGroup{n, FinAb()};
  const IntMatrix b = character_lattice(d).lattice.basis();
  // coroot j evaluates to column n + j on the basis of X
  const CokernelInvariants c = cokernel_invariants(b.columns(n, sr));
  return FundamentalGroup{c.free_rank, FinAb::from_invariant_factors(c.torsion)};
}

InvariantReport invariants(const GluingDatum& d) {
  InvariantReport r;
  const std::size_t n = d.torus_rank();
  r.dim = n + static_cast<std::size_t>(d.semisimple().dim());
  r.rank = n + static_cast<std::size_t>(d.semisimple().rank());
  r.units = n;
  r.mh = r.dim;
  r.dim_unipotent_radical = 0;
  r.dim_radical = n;
  const FundamentalGroup pi1 = fundamental_group(d);
  r.pi1_free_rank = pi1.free_rank;
  r.pi1_torsion = pi1.torsion;
  return r;
}

LieAlgebraInvariant lie_algebra_invariant(const GluingDatum& d) {
  return LieAlgebraInvariant{d.semisimple().factors(), d.torus_rank()};
}

Determination variety_determines_group(const GluingDatum& d) {
  if (d.is_torus())
    return {true, "torus: a variety isomorphic to a torus determines it"};
  if (d.is_semisimple() && d.gluing().is_trivial())
    return {true, "simply connected semisimple: determined by its underlying variety"};
  if (d.is_semisimple() && d.semisimple().factors().size() == 1)
    return {true, "simple: determined by its underlying variety"};
  return {false, "not covered by the torus, simply connected or simple cases"};
}

TorusSplit torus_split(const GluingDatum& d) {
  const std::size_t n = d.torus_rank();
  const std::size_t sr = static_cast<std::size_t>(d.semisimple().rank());
  const std::size_t m = n + sr;
  const IntMatrix b = character_lattice(d).lattice.basis();

  TorusSplit out;
  out.coroot_saturation = saturation(b.columns(n, sr).transpose(), m);
  const Lattice comp =
      saturated_complement(Lattice::from_generators(m, out.coroot_saturation));
  out.complement = IntMatrix(0, m);
  if (n == 0)
    return out;

  // y = B^{-1} c for each complement vector c
  const RationalInverse binv = rational_inverse(b);
  std::vector<RationalVector> ys;
  for (std::size_t r = 0; r < comp.rank(); ++r) {
    const IntVector num = binv.numerator * comp.basis().row(r);
    RationalVector y(m);
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = Rational(num[i], binv.denominator);
      y[i].canonicalize();
    }
    ys.push_back(y);
  }

  // Rebase so the torus parts form an HNF of their (fractional) lattice.
  const Int den = binv.denominator;
  IntMatrix p(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i)
      p(r, i) = Int(ys[r][i] * den);
  const IntMatrix t = hermite_normal_form(p);
  const RationalInverse pinv = rational_inverse(p);
  for (std::size_t r = 0; r < n; ++r) {
    const IntVector trow = t.row(r);
    RationalVector y(m, Rational(0));
    for (std::size_t q = 0; q < n; ++q) {
      Int a = 0;
      for (std::size_t i = 0; i < n; ++i)
        a += trow[i] * pinv.numerator(i, q);
      Rational coeff(a, pinv.denominator);
      coeff.canonicalize();
      for (std::size_t i = 0; i < m; ++i)
        y[i] += coeff * ys[q][i];
    }
    for (std::size_t i = n; i < m; ++i) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), y[i].get_num_mpz_t(), y[i].get_den_mpz_t());
      y[i] -= fl;
    }
    out.cocharacters.push_back(y);
  }

  for (const RationalVector& y : out.cocharacters) {
    IntMatrix row(1, m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < m; ++j)
        acc += Rational(b(i, j)) * y[j];
      if (acc.get_den() != 1)
        throw std::logic_error("torus_split: cocharacter left the lattice");
      row(0, i) = acc.get_num();
    }
    out.complement = vstack(out.complement, row);
  }
  return out;
}

}  // namespace redgrp
