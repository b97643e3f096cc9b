// Simple Dynkin types (Bourbaki numbering), Cartan matrices, root systems,
// centers of simply connected simple groups and the diagram action on them.
//
// Conventions. cartan(i, j) = <alpha_i, alpha_j^vee>, so G2 is
// [[2,-1],[-3,2]] with alpha_1 short. The center of the simply connected
// group is P^vee / Q^vee, written in fundamental-coweight coordinates; the
// coroot alpha_j^vee is column j of the Cartan matrix there, so the center is
// the cokernel of the Cartan matrix.

#ifndef REDGRP_ROOTS_HPP_
#define REDGRP_ROOTS_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "redgrp/finab.hpp"
#include "redgrp/intlinalg.hpp"

namespace redgrp {

enum class Family { A, B, C, D, E, F, G };

class SimpleType {
public:
  // Enforces A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.
  SimpleType(Family family, int rank);
  static SimpleType parse(std::string_view name);  // "A1", "D4", ...

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

private:
  Family family_;
  int rank_;
};

char family_letter(Family f);

IntMatrix cartan_matrix(const SimpleType& t);

struct RootSystem {
  SimpleType type;
  IntMatrix cartan;
  std::vector<std::vector<long>> roots;  // simple-root coordinates, sorted
};

RootSystem generate_roots(const SimpleType& t);
int dimension(const SimpleType& t);  // rank + number of roots

using Permutation = std::vector<int>;  // node i -> perm[i]

// Automorphisms of the Dynkin diagram (with arrows), sorted, identity first.
std::vector<Permutation> diagram_automorphisms(const SimpleType& t);
bool preserves_cartan(const IntMatrix& cartan, const Permutation& perm);

// Coordinates on the center. Each coordinate is the class of a fundamental
// coweight: a cyclic center is generated by the first node whose coweight
// class has full order, the Klein four center by the first two distinct
// nontrivial classes.
class CenterCoordinates {
public:
  explicit CenterCoordinates(const SimpleType& t);

  const FinAb& group() const { return group_; }
  const std::vector<int>& basis_nodes() const { return basis_nodes_; }
  FinAbElem reduce(const IntVector& coweight) const;
  IntVector lift(const FinAbElem& x) const;

private:
  IntVector invariant_coords(const IntVector& coweight) const;

  int rank_;
  FinAb group_;
  std::vector<int> basis_nodes_;
  IntMatrix snf_u_;
  IntVector snf_factors_;                  // factors > 1 and their rows of U
  std::vector<std::size_t> snf_rows_;
  std::map<IntVector, FinAbElem> table_;   // invariant coords -> natural coords
};

FinAb center(const SimpleType& t);

// Automorphism of center(t) induced by a diagram automorphism.
IntMatrix center_action(const SimpleType& t, const Permutation& perm);

}  // namespace redgrp

#endif  // REDGRP_ROOTS_HPP_
