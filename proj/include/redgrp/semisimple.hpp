// Simply connected semisimple groups as sorted lists of simple factors, their
// centers (block sums of factor centers), the extended outer automorphism
// group acting on the center, and isomorphism of central quotients.

#ifndef REDGRP_SEMISIMPLE_HPP_
#define REDGRP_SEMISIMPLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "redgrp/finab.hpp"
#include "redgrp/roots.hpp"

namespace redgrp {

class SCSemisimple {
public:
  SCSemisimple() = default;  // trivial group
  explicit SCSemisimple(std::vector<SimpleType> factors);
  static SCSemisimple parse(const std::vector<std::string>& names);
  // "A1xA1", "B2"; the empty string or "1" is the trivial group
  static SCSemisimple parse(std::string_view product);

  const std::vector<SimpleType>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int rank() const;
  int dim() const;
  std::vector<std::string> factor_names() const;
  std::string name() const;  // "A1xA1", "1" for the trivial group

  friend bool operator==(const SCSemisimple&, const SCSemisimple&) = default;
  friend bool operator<(const SCSemisimple& a, const SCSemisimple& b) {
    return a.factors_ < b.factors_;
  }

private:
  std::vector<SimpleType> factors_;
};

// Center of S with its block structure: factor i owns the coordinates
// [offset(i), offset(i) + size(i)).
class SemisimpleCenter {
public:
  explicit SemisimpleCenter(const SCSemisimple& s);

  const FinAb& group() const { return group_; }
  std::size_t offset(std::size_t factor) const { return offsets_[factor]; }
  std::size_t size(std::size_t factor) const { return offsets_[factor + 1] - offsets_[factor]; }
  const CenterCoordinates& factor_coordinates(std::size_t factor) const { return coords_[factor]; }

  // Coweights are given on all simple roots of S, factor after factor.
  FinAbElem reduce(const IntVector& coweight) const;
  IntVector lift(const FinAbElem& x) const;

private:
  SCSemisimple s_;
  FinAb group_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> node_offsets_;
  std::vector<CenterCoordinates> coords_;
};

FinAb center_of(const SCSemisimple& s);

// Generators of the image of Out_ext(S) = (diagram automorphisms of the
// factors) x (permutations of equal factors) in Aut(center_of(S)). Only
// generators acting nontrivially are listed.
std::vector<NamedMatrix> extended_out_generators(const SCSemisimple& s);

// Witness: names of the generators applied, left to right.
using NamedWord = std::vector<std::string>;

std::optional<NamedWord> isomorphic_quotients(const SCSemisimple& s, const FinAbSubgroup& c1,
                                              const FinAbSubgroup& c2, const Limits& limits = {});

// Conventional names: SL3, PGL2, SO8, SSpin12, PSp6, E6ad, ...
std::string quotient_name(const SimpleType& t, const FinAbSubgroup& c);
std::string simply_connected_name(const SimpleType& t);
// Product names such as "PGL2xSL2" when C splits along the factors, "SO4"
// for the diagonal of A1xA1, otherwise "(SL3xSL3)/<(1,1)>".
std::string quotient_name(const SCSemisimple& s, const FinAbSubgroup& c);

}  // namespace redgrp

#endif  // REDGRP_SEMISIMPLE_HPP_
