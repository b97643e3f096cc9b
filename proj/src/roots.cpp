#include "redgrp/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "redgrp/error.hpp"

namespace redgrp {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    fail(Errc::InvalidType, std::string("no simple type ") + family_letter(family) +
                                std::to_string(rank));
}

SimpleType SimpleType::parse(std::string_view name) {
  if (name.size() < 2)
    fail(Errc::InvalidType, "bad type name '" + std::string(name) + "'");
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(name[0]);
  if (pos == std::string::npos)
    fail(Errc::InvalidType, "bad type family in '" + std::string(name) + "'");
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9' || rank > 100000)
      fail(Errc::InvalidType, "bad type rank in '" + std::string(name) + "'");
    rank = rank * 10 + (c - '0');
  }
  return SimpleType(static_cast<Family>(pos), rank);
}

std::string SimpleType::name() const { return family_letter(family_) + std::to_string(rank_); }

IntMatrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank();
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    c(i, i) = 2;
  auto edge = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i)
        edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i)
        edge(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i)
        edge(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i)
        edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i)
        edge(i, i + 1);
      break;
    case Family::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c(1, 2) = -2;
      break;
    case Family::G:
      edge(0, 1);
      c(1, 0) = -3;
      break;
  }
  return c;
}

RootSystem generate_roots(const SimpleType& t) {
  const IntMatrix c = cartan_matrix(t);
  const int n = t.rank();
  std::vector<long> cart(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cart[i * n + j] = c(i, j).get_si();

  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long> a(n, 0);
    a[i] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const std::vector<long> beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
      long pairing = 0;
      for (int j = 0; j < n; ++j)
        pairing += beta[j] * cart[j * n + i];
      std::vector<long> img = beta;
      img[i] -= pairing;
      if (seen.insert(img).second)
        queue.push_back(std::move(img));
    }
  }
  return RootSystem{t, c, std::vector<std::vector<long>>(seen.begin(), seen.end())};
}

int dimension(const SimpleType& t) {
  return t.rank() + static_cast<int>(generate_roots(t).roots.size());
}

bool preserves_cartan(const IntMatrix& cartan, const Permutation& perm) {
  const std::size_t n = cartan.rows();
  if (perm.size() != n)
    return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != static_cast<int>(i))
      return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cartan(perm[i], perm[j]) != cartan(i, j))
        return false;
  return true;
}

namespace {

void extend_automorphism(const IntMatrix& c, Permutation& perm, std::vector<bool>& used,
                         std::size_t next, std::vector<Permutation>& out) {
  const std::size_t n = c.rows();
  if (next == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img] || c(img, img) != c(next, next))
      continue;
    bool ok = true;
    for (std::size_t k = 0; k < next && ok; ++k)
      ok = c(perm[k], img) == c(k, next) && c(img, perm[k]) == c(next, k);
    if (!ok)
      continue;
    perm[next] = static_cast<int>(img);
    used[img] = true;
    extend_automorphism(c, perm, used, next + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<Permutation> diagram_automorphisms(const SimpleType& t) {
  const IntMatrix c = cartan_matrix(t);
  Permutation perm(t.rank(), -1);
  std::vector<bool> used(t.rank(), false);
  std::vector<Permutation> out;
  extend_automorphism(c, perm, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Center

CenterCoordinates::CenterCoordinates(const SimpleType& t) : rank_(t.rank()) {
  const IntMatrix c = cartan_matrix(t);
  const SmithForm s = smith_normal_form(c);
  snf_u_ = s.U;
  for (int i = 0; i < rank_; ++i)
    if (s.D(i, i) > 1) {
      snf_factors_.push_back(s.D(i, i));
      snf_rows_.push_back(i);
    }
  const FinAb inv(snf_factors_);

  auto unit = [&](int node) {
    IntVector e(rank_, Int(0));
    e[node] = 1;
    return e;
  };
  auto inv_elem = [&](const IntVector& w) { return FinAbElem{invariant_coords(w)}; };

  if (snf_factors_.size() == 1) {
    for (int i = 0; i < rank_; ++i)
      if (inv.element_order(inv_elem(unit(i))) == snf_factors_[0]) {
        basis_nodes_.push_back(i);
        break;
      }
    group_ = FinAb({snf_factors_[0]});
  } else if (snf_factors_.size() == 2 && snf_factors_[0] == 2 && snf_factors_[1] == 2) {
    for (int i = 0; i < rank_ && basis_nodes_.size() < 2; ++i) {
      const FinAbElem x = inv_elem(unit(i));
      if (x == inv.zero())
        continue;
      if (!basis_nodes_.empty() && x == inv_elem(unit(basis_nodes_[0])))
        continue;
      basis_nodes_.push_back(i);
    }
    group_ = FinAb({2, 2});
  } else if (!snf_factors_.empty()) {
    throw std::logic_error("unexpected center structure for " + t.name());
  }

  for (const FinAbElem& x : group_.elements())
    table_.emplace(invariant_coords(lift(x)), x);
  if (table_.size() != static_cast<std::size_t>(group_.order().get_ui()))
    throw std::logic_error("center basis does not generate for " + t.name());
}

IntVector CenterCoordinates::invariant_coords(const IntVector& coweight) const {
  const IntVector u = snf_u_ * coweight;
  IntVector out;
  for (std::size_t k = 0; k < snf_rows_.size(); ++k)
    out.push_back(floor_mod(u[snf_rows_[k]], snf_factors_[k]));
  return out;
}

FinAbElem CenterCoordinates::reduce(const IntVector& coweight) const {
  if (coweight.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("CenterCoordinates::reduce: wrong coweight length");
  return table_.at(invariant_coords(coweight));
}

IntVector CenterCoordinates::lift(const FinAbElem& x) const {
  IntVector w(rank_, Int(0));
  for (std::size_t k = 0; k < basis_nodes_.size(); ++k)
    w[basis_nodes_[k]] += x.coords[k];
  return w;
}

FinAb center(const SimpleType& t) { return CenterCoordinates(t).group(); }

IntMatrix center_action(const SimpleType& t, const Permutation& perm) {
  if (!preserves_cartan(cartan_matrix(t), perm))
    fail(Errc::NotDiagramAutomorphism, "permutation is not an automorphism of " + t.name());
  const CenterCoordinates cc(t);
  const std::size_t k = cc.group().rank();
  IntMatrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector w(t.rank(), Int(0));
    w[perm[cc.basis_nodes()[j]]] = 1;
    const FinAbElem img = cc.reduce(w);
    for (std::size_t i = 0; i < k; ++i)
      m(i, j) = img.coords[i];
  }
  return m;
}

}  // namespace redgrp
