#include "redgrp/varieties.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "redgrp/error.hpp"

namespace redgrp {

SCSemisimple PowerQuotient::cover() const {
  return SCSemisimple(std::vector<SimpleType>(n, base));
}

std::string PowerQuotient::name() const { return quotient_name(cover(), c); }

FinAb power_center(const SimpleType& base, std::size_t n) {
  return FinAb::power(center(base), n);
}

namespace {

IntMatrix block_action(const IntMatrix& m, std::size_t block) {
  return kronecker(m, IntMatrix::identity(block));
}

std::size_t block_size(const FinAb& a, std::size_t n) {
  if (n == 0 || a.rank() % n != 0)
    throw std::invalid_argument("sigma_hat: matrix size does not match the power");
  return a.rank() / n;
}

std::vector<IntMatrix> gl_block_generators(std::size_t n, std::size_t block) {
  std::vector<IntMatrix> out;
  for (const NamedMatrix& g : gl_generators(n))
    out.push_back(block_action(g.matrix, block));
  return out;
}

}  // namespace

FinAbSubgroup sigma_hat(const IntMatrix& m, const FinAbSubgroup& c) {
  if (!is_unimodular(m))
    fail(Errc::NotUnimodular, "sigma_hat needs a matrix in GL_n(Z), got " + m.str());
  return c.image(block_action(m, block_size(c.parent(), m.rows())));
}

std::optional<IntMatrix> variety_iso_witness(const PowerQuotient& q1, const PowerQuotient& q2,
                                             const Limits& limits) {
  if (!(q1.base == q2.base) || q1.n != q2.n)
    fail(Errc::BaseMismatch, "quotients of " + q1.cover().name() + " and " + q2.cover().name());
  const FinAb a = power_center(q1.base, q1.n);
  const std::size_t block = center(q1.base).rank();
  const std::vector<NamedMatrix> named = gl_generators(q1.n);
  const std::vector<IntMatrix> gens = gl_block_generators(q1.n, block);
  const std::optional<Word> w = orbit_equivalent(a, q1.c, q2.c, gens, limits);
  if (!w)
    return std::nullopt;
  IntMatrix total = IntMatrix::identity(q1.n);
  for (std::size_t g : *w)
    total = named[g].matrix * total;
  return total;
}

std::vector<TwinCertificate> find_twin_pairs(const SimpleType& base, std::size_t n,
                                             const Limits& limits) {
  if (n == 0)
    throw std::invalid_argument("find_twin_pairs: n must be positive");
  const FinAb a = power_center(base, n);
  const std::size_t block = center(base).rank();
  const SCSemisimple cover(std::vector<SimpleType>(n, base));
  const std::vector<IntMatrix> gl = gl_block_generators(n, block);
  std::vector<IntMatrix> out_gens;
  for (const NamedMatrix& g : extended_out_generators(cover))
    out_gens.push_back(g.matrix);

  const std::vector<FinAbSubgroup> all = subgroups(a, limits);
  std::map<IntMatrix, bool> placed;
  std::vector<TwinCertificate> certs;
  for (const FinAbSubgroup& start : all) {
    if (placed.count(start.lattice()))
      continue;
    const Orbit variety_class = subgroup_orbit(a, start, gl, limits);
    for (const FinAbSubgroup& c : variety_class.members)
      placed[c.lattice()] = true;

    // split the variety class into group classes
    std::map<IntMatrix, bool> grouped;
    std::vector<std::pair<FinAbSubgroup, std::size_t>> reps;  // min member, orbit size
    std::vector<FinAbSubgroup> members = variety_class.members;
    std::sort(members.begin(), members.end());
    for (const FinAbSubgroup& c : members) {
      if (grouped.count(c.lattice()))
        continue;
      const Orbit group_class = subgroup_orbit(a, c, out_gens, limits);
      for (const FinAbSubgroup& g : group_class.members)
        grouped[g.lattice()] = true;
      reps.emplace_back(c, group_class.members.size());
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const PowerQuotient q1{base, n, reps[j].first};
        const PowerQuotient q2{base, n, reps[i].first};
        const std::optional<IntMatrix> m = variety_iso_witness(q1, q2, limits);
        if (!m || !(sigma_hat(*m, q1.c) == q2.c))
          throw std::logic_error("find_twin_pairs: variety class without a witness");
        if (isomorphic_quotients(cover, q1.c, q2.c, limits))
          throw std::logic_error("find_twin_pairs: group classes are not separated");
        certs.push_back(
            TwinCertificate{q1.c, q2.c, *m, reps[j].second, q1.name(), q2.name()});
      }
  }
  return certs;
}

}  // namespace redgrp
