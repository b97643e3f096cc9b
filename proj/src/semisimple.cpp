#include "redgrp/semisimple.hpp"

#include <algorithm>
#include <sstream>

#include "redgrp/error.hpp"

namespace redgrp {

SCSemisimple::SCSemisimple(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

SCSemisimple SCSemisimple::parse(const std::vector<std::string>& names) {
  std::vector<SimpleType> factors;
  for (const std::string& n : names)
    factors.push_back(SimpleType::parse(n));
  return SCSemisimple(std::move(factors));
}

SCSemisimple SCSemisimple::parse(std::string_view product) {
  if (product.empty() || product == "1")
    return SCSemisimple();
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = product.find('x', start);
    names.emplace_back(product.substr(start, x - start));
    if (x == std::string_view::npos)
      break;
    start = x + 1;
  }
  return parse(names);
}

int SCSemisimple::rank() const {
  int r = 0;
  for (const SimpleType& t : factors_)
    r += t.rank();
  return r;
}

int SCSemisimple::dim() const {
  int d = 0;
  for (const SimpleType& t : factors_)
    d += dimension(t);
  return d;
}

std::vector<std::string> SCSemisimple::factor_names() const {
  std::vector<std::string> out;
  for (const SimpleType& t : factors_)
    out.push_back(t.name());
  return out;
}

std::string SCSemisimple::name() const {
  if (factors_.empty())
    return "1";
  std::string out;
  for (const SimpleType& t : factors_) {
    if (!out.empty())
      out += 'x';
    out += t.name();
  }
  return out;
}

// ---------------------------------------------------------------------------

SemisimpleCenter::SemisimpleCenter(const SCSemisimple& s) : s_(s) {
  offsets_.push_back(0);
  node_offsets_.push_back(0);
  for (const SimpleType& t : s.factors()) {
    coords_.emplace_back(t);
    group_ = FinAb::direct_sum(group_, coords_.back().group());
    offsets_.push_back(offsets_.back() + coords_.back().group().rank());
    node_offsets_.push_back(node_offsets_.back() + t.rank());
  }
}

FinAbElem SemisimpleCenter::reduce(const IntVector& coweight) const {
  if (coweight.size() != node_offsets_.back())
    throw std::invalid_argument("SemisimpleCenter::reduce: wrong coweight length");
  FinAbElem out;
  for (std::size_t f = 0; f < coords_.size(); ++f) {
    const IntVector part(coweight.begin() + node_offsets_[f],
                         coweight.begin() + node_offsets_[f + 1]);
    const FinAbElem x = coords_[f].reduce(part);
    out.coords.insert(out.coords.end(), x.coords.begin(), x.coords.end());
  }
  return out;
}

IntVector SemisimpleCenter::lift(const FinAbElem& x) const {
  IntVector out;
  for (std::size_t f = 0; f < coords_.size(); ++f) {
    const FinAbElem part{IntVector(x.coords.begin() + offsets_[f],
                                   x.coords.begin() + offsets_[f + 1])};
    const IntVector w = coords_[f].lift(part);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

FinAb center_of(const SCSemisimple& s) { return SemisimpleCenter(s).group(); }

std::vector<NamedMatrix> extended_out_generators(const SCSemisimple& s) {
  const SemisimpleCenter zc(s);
  const std::size_t k = zc.group().rank();
  const auto& factors = s.factors();
  std::vector<NamedMatrix> out;

  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (zc.size(f) == 0)
      continue;
    for (const Permutation& p : diagram_automorphisms(factors[f])) {
      const IntMatrix local = center_action(factors[f], p);
      if (local == IntMatrix::identity(local.rows()))
        continue;
      IntMatrix m = IntMatrix::identity(k);
      for (std::size_t i = 0; i < zc.size(f); ++i)
        for (std::size_t j = 0; j < zc.size(f); ++j)
          m(zc.offset(f) + i, zc.offset(f) + j) = local(i, j);
      std::ostringstream name;
      name << "diagram(" << factors[f].name() << "#" << f << ":";
      for (std::size_t i = 0; i < p.size(); ++i)
        name << (i ? "," : "") << p[i];
      name << ")";
      out.push_back({name.str(), m});
    }
  }

  for (std::size_t f = 0; f + 1 < factors.size(); ++f) {
    if (!(factors[f] == factors[f + 1]) || zc.size(f) == 0)
      continue;
    IntMatrix m = IntMatrix::identity(k);
    for (std::size_t i = 0; i < zc.size(f); ++i) {
      const std::size_t a = zc.offset(f) + i, b = zc.offset(f + 1) + i;
      m(a, a) = 0;
      m(b, b) = 0;
      m(a, b) = 1;
      m(b, a) = 1;
    }
    out.push_back({"swap(" + factors[f].name() + "#" + std::to_string(f) + "," +
                       factors[f].name() + "#" + std::to_string(f + 1) + ")",
                   m});
  }
  return out;
}

std::optional<NamedWord> isomorphic_quotients(const SCSemisimple& s, const FinAbSubgroup& c1,
                                              const FinAbSubgroup& c2, const Limits& limits) {
  const FinAb z = center_of(s);
  const std::vector<NamedMatrix> gens = extended_out_generators(s);
  std::vector<IntMatrix> mats;
  for (const NamedMatrix& g : gens)
    mats.push_back(g.matrix);
  const std::optional<Word> w = orbit_equivalent(z, c1, c2, mats, limits);
  if (!w)
    return std::nullopt;
  NamedWord out;
  for (std::size_t g : *w)
    out.push_back(gens[g].name);
  return out;
}

// ---------------------------------------------------------------------------
// Names

std::string simply_connected_name(const SimpleType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return "SL" + std::to_string(l + 1);
    case Family::B: return l == 2 ? "Sp4" : "Spin" + std::to_string(2 * l + 1);
    case Family::C: return "Sp" + std::to_string(2 * l);
    case Family::D: return "Spin" + std::to_string(2 * l);
    default: return t.name();
  }
}

namespace {

std::string adjoint_name(const SimpleType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return "PGL" + std::to_string(l + 1);
    case Family::B: return "SO" + std::to_string(2 * l + 1);
    case Family::C: return "PSp" + std::to_string(2 * l);
    case Family::D: return "PSO" + std::to_string(2 * l);
    default: return t.name() + "ad";
  }
}

std::string elem_str(const FinAbElem& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    out += (i ? "," : "") + x.coords[i].get_str();
  return out + ")";
}

std::string generic_name(const std::string& cover, const FinAbSubgroup& c) {
  std::string gens;
  for (const FinAbElem& g : c.generators())
    gens += (gens.empty() ? "" : ",") + elem_str(g);
  return cover + "/<" + gens + ">";
}

}  // namespace

std::string quotient_name(const SimpleType& t, const FinAbSubgroup& c) {
  const FinAb z = center(t);
  if (!(c.parent() == z))
    fail(Errc::NotSubgroup, "subgroup is not central in " + t.name());
  if (c.is_trivial())
    return simply_connected_name(t);
  if (c.order() == z.order())
    return adjoint_name(t);
  const int l = t.rank();
  if (t.family() == Family::A)
    return "SL" + std::to_string(l + 1) + "/mu" + c.order().get_str();
  if (t.family() == Family::D && c.order() == 2) {
    if (l % 2 == 1)
      return "SO" + std::to_string(2 * l);
    // The first center coordinate is the class of omega_1^vee, the kernel of
    // Spin -> SO.
    const FinAbElem vec{IntVector{1, 0}};
    const FinAbSubgroup so = FinAbSubgroup::generated_by(z, std::span(&vec, 1));
    std::vector<IntMatrix> gens;
    for (const Permutation& p : diagram_automorphisms(t))
      gens.push_back(center_action(t, p));
    if (orbit_equivalent(z, c, so, gens))
      return "SO" + std::to_string(2 * l);
    return "SSpin" + std::to_string(2 * l);
  }
  return generic_name(simply_connected_name(t), c);
}

std::string quotient_name(const SCSemisimple& s, const FinAbSubgroup& c) {
  const SemisimpleCenter zc(s);
  if (!(c.parent() == zc.group()))
    fail(Errc::NotSubgroup, "subgroup is not central in " + s.name());
  const auto& factors = s.factors();
  if (factors.empty())
    return "1";
  if (factors.size() == 1)
    return quotient_name(factors[0], c);

  std::vector<std::string> cover_names;
  for (const SimpleType& t : factors)
    cover_names.push_back(simply_connected_name(t));
  auto joined = [](const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts)
      out += (out.empty() ? "" : "x") + p;
    return out;
  };

  if (factors.size() == 2 && factors[0] == SimpleType(Family::A, 1) &&
      factors[1] == SimpleType(Family::A, 1)) {
    const FinAbElem diag{IntVector{1, 1}};
    if (c == FinAbSubgroup::generated_by(zc.group(), std::span(&diag, 1)))
      return "SO4";
  }

  // Split along the factors when C is the product of its block intersections.
  const std::size_t k = zc.group().rank();
  std::vector<std::string> parts;
  Int product = 1;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    std::vector<FinAbElem> block;
    for (std::size_t i = 0; i < zc.size(f); ++i) {
      FinAbElem e{IntVector(k, Int(0))};
      e.coords[zc.offset(f) + i] = 1;
      block.push_back(e);
    }
    const FinAbSubgroup part =
        c.intersect(FinAbSubgroup::generated_by(zc.group(), block));
    product *= part.order();
    std::vector<FinAbElem> local;
    for (const FinAbElem& g : part.generators())
      local.push_back(FinAbElem{IntVector(g.coords.begin() + zc.offset(f),
                                          g.coords.begin() + zc.offset(f) + zc.size(f))});
    const FinAb zf = zc.factor_coordinates(f).group();
    parts.push_back(quotient_name(factors[f], FinAbSubgroup::generated_by(zf, local)));
  }
  if (product == c.order())
    return joined(parts);
  return generic_name("(" + joined(cover_names) + ")", c);
}

}  // namespace redgrp
