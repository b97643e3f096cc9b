#include "redgrp/finab.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "redgrp/error.hpp"

namespace redgrp {

namespace {

IntMatrix relation_matrix(const FinAb& a) { return IntMatrix::diagonal(a.cyclic_orders()); }

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void check_bound(const Int& size, const Limits& limits, const char* what) {
  if (size > limits.max_order)
    fail(Errc::TooLarge, std::string(what) + " of order " + size.get_str() +
                             " exceeds the enumeration bound " + limits.max_order.get_str());
}

}  // namespace

// ---------------------------------------------------------------------------
// FinAb

FinAb::FinAb(IntVector cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (const Int& m : orders_)
    if (m < 2)
      throw std::invalid_argument("FinAb: cyclic orders must be >= 2");
}

FinAb FinAb::from_invariant_factors(IntVector factors) {
  FinAb a(std::move(factors));
  if (!a.is_invariant_form())
    throw std::invalid_argument("FinAb: invariant factors must form a divisibility chain");
  return a;
}

FinAb FinAb::cyclic_power(const Int& d, std::size_t n) {
  if (d == 1)
    return FinAb();
  return FinAb(IntVector(n, d));
}

FinAb FinAb::power(const FinAb& a, std::size_t n) {
  IntVector orders;
  for (std::size_t i = 0; i < n; ++i)
    orders.insert(orders.end(), a.orders_.begin(), a.orders_.end());
  return FinAb(std::move(orders));
}

FinAb FinAb::direct_sum(const FinAb& a, const FinAb& b) {
  IntVector orders = a.orders_;
  orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
  return FinAb(std::move(orders));
}

Int FinAb::order() const {
  Int out = 1;
  for (const Int& m : orders_)
    out *= m;
  return out;
}

Int FinAb::exponent() const {
  Int out = 1;
  for (const Int& m : orders_)
    out = lcm(out, m);
  return out;
}

IntVector FinAb::invariant_factors() const {
  return cokernel_invariants(relation_matrix(*this)).torsion;
}

bool FinAb::is_invariant_form() const {
  for (std::size_t i = 0; i + 1 < orders_.size(); ++i)
    if (!mpz_divisible_p(orders_[i + 1].get_mpz_t(), orders_[i].get_mpz_t()))
      return false;
  return true;
}

FinAbElem FinAb::zero() const { return FinAbElem{IntVector(rank(), Int(0))}; }

FinAbElem FinAb::reduce(const IntVector& v) const {
  if (v.size() != rank())
    throw std::invalid_argument("FinAb::reduce: coordinate count mismatch");
  FinAbElem out{v};
  for (std::size_t i = 0; i < rank(); ++i)
    out.coords[i] = floor_mod(v[i], orders_[i]);
  return out;
}

FinAbElem FinAb::add(const FinAbElem& a, const FinAbElem& b) const {
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    v[i] = a.coords[i] + b.coords[i];
  return reduce(v);
}

FinAbElem FinAb::scale(const Int& k, const FinAbElem& a) const {
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    v[i] = k * a.coords[i];
  return reduce(v);
}

Int FinAb::element_order(const FinAbElem& a) const {
  Int out = 1;
  for (std::size_t i = 0; i < rank(); ++i)
    out = lcm(out, orders_[i] / gcd(a.coords[i], orders_[i]));
  return out;
}

std::vector<FinAbElem> FinAb::elements(const Limits& limits) const {
  check_bound(order(), limits, "group");
  std::vector<FinAbElem> out;
  FinAbElem x = zero();
  for (;;) {
    out.push_back(x);
    std::size_t i = 0;
    for (; i < rank(); ++i) {
      x.coords[i] += 1;
      if (x.coords[i] < orders_[i])
        break;
      x.coords[i] = 0;
    }
    if (i == rank())
      break;
  }
  return out;
}

bool FinAb::is_endomorphism(const IntMatrix& m) const {
  if (m.rows() != rank() || m.cols() != rank())
    return false;
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t i = 0; i < rank(); ++i)
      if (!mpz_divisible_p(Int(orders_[j] * m(i, j)).get_mpz_t(), orders_[i].get_mpz_t()))
        return false;
  return true;
}

bool FinAb::is_automorphism(const IntMatrix& m) const {
  if (!is_endomorphism(m))
    return false;
  return FinAbSubgroup::whole(*this).image(m).order() == order();
}

FinAbElem FinAb::apply(const IntMatrix& m, const FinAbElem& x) const { return reduce(m * x.coords); }

IntMatrix FinAb::compose(const IntMatrix& outer, const IntMatrix& inner) const {
  IntMatrix c = outer * inner;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      c(i, j) = floor_mod(c(i, j), orders_[i]);
  return c;
}

std::string FinAb::str() const {
  if (orders_.empty())
    return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    os << (i ? " + " : "") << "Z/" << orders_[i].get_str();
  return os.str();
}

// ---------------------------------------------------------------------------
// FinAbSubgroup

FinAbSubgroup FinAbSubgroup::generated_by(const FinAb& parent, std::span<const FinAbElem> gens) {
  IntMatrix g(gens.size(), parent.rank());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].coords.size() != parent.rank())
      throw std::invalid_argument("generated_by: element of the wrong group");
    for (std::size_t j = 0; j < parent.rank(); ++j)
      g(i, j) = gens[i].coords[j];
  }
  return FinAbSubgroup(parent, hermite_normal_form(vstack(g, relation_matrix(parent))));
}

FinAbSubgroup FinAbSubgroup::trivial(const FinAb& parent) {
  return FinAbSubgroup(parent, relation_matrix(parent));
}

FinAbSubgroup FinAbSubgroup::whole(const FinAb& parent) {
  return FinAbSubgroup(parent, IntMatrix::identity(parent.rank()));
}

FinAbSubgroup FinAbSubgroup::from_lattice(const FinAb& parent, const IntMatrix& lattice) {
  if (lattice.rows() != parent.rank() || lattice.cols() != parent.rank() ||
      hermite_normal_form(lattice) != lattice)
    fail(Errc::NotSubgroup, "not a canonical preimage lattice");
  FinAbSubgroup s(parent, lattice);
  for (std::size_t i = 0; i < parent.rank(); ++i) {
    IntVector e(parent.rank(), Int(0));
    e[i] = parent.cyclic_orders()[i];
    IntVector c;
    if (!solve_triangular(lattice, e, c))
      fail(Errc::NotSubgroup, "lattice does not contain the relations");
  }
  return s;
}

Int FinAbSubgroup::order() const {
  Int index = 1;
  for (std::size_t i = 0; i < lattice_.rows(); ++i)
    index *= lattice_(i, i);
  return parent_.order() / index;
}

Int FinAbSubgroup::exponent() const {
  Int out = 1;
  for (const FinAbElem& g : generators())
    out = lcm(out, parent_.element_order(g));
  return out;
}

std::vector<FinAbElem> FinAbSubgroup::generators() const {
  std::vector<FinAbElem> out;
  for (std::size_t i = 0; i < lattice_.rows(); ++i) {
    FinAbElem g = parent_.reduce(lattice_.row(i));
    if (g != parent_.zero())
      out.push_back(std::move(g));
  }
  return out;
}

std::vector<FinAbElem> FinAbSubgroup::elements(const Limits& limits) const {
  check_bound(order(), limits, "subgroup");
  const Structure st = structure();
  std::vector<FinAbElem> out{parent_.zero()};
  const auto& orders = st.group.cyclic_orders();
  for (std::size_t g = 0; g < orders.size(); ++g) {
    std::vector<FinAbElem> next;
    next.reserve(out.size() * orders[g].get_ui());
    for (const FinAbElem& x : out) {
      FinAbElem y = x;
      for (Int k = 0; k < orders[g]; ++k) {
        next.push_back(y);
        y = parent_.add(y, st.generator_images[g]);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinAbSubgroup::contains(const FinAbElem& x) const {
  if (x.coords.size() != parent_.rank())
    return false;
  IntVector c;
  return solve_triangular(lattice_, x.coords, c);
}

bool FinAbSubgroup::is_subgroup_of(const FinAbSubgroup& other) const {
  if (!(parent_ == other.parent_))
    return false;
  for (const FinAbElem& g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

FinAbSubgroup FinAbSubgroup::image(const IntMatrix& endomorphism) const {
  std::vector<FinAbElem> imgs;
  for (const FinAbElem& g : generators())
    imgs.push_back(parent_.apply(endomorphism, g));
  return generated_by(parent_, imgs);
}

FinAbSubgroup FinAbSubgroup::join(const FinAbSubgroup& other) const {
  if (!(parent_ == other.parent_))
    fail(Errc::NotSubgroup, "join of subgroups of different groups");
  std::vector<FinAbElem> gens = generators();
  const std::vector<FinAbElem> more = other.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return generated_by(parent_, gens);
}

FinAbSubgroup FinAbSubgroup::intersect(const FinAbSubgroup& other) const {
  if (!(parent_ == other.parent_))
    fail(Errc::NotSubgroup, "intersection of subgroups of different groups");
  const std::size_t k = parent_.rank();
  if (k == 0)
    return *this;
  IntMatrix neg = other.lattice_;
  for (std::size_t i = 0; i < k; ++i)
    neg.negate_row(i);
  const IntMatrix left_kernel = integer_kernel(vstack(lattice_, neg).transpose());
  const IntMatrix coeffs = left_kernel.columns(0, k);
  const IntMatrix meet = coeffs * lattice_;
  return FinAbSubgroup(parent_, hermite_normal_form(vstack(meet, relation_matrix(parent_))));
}

FinAbSubgroup::Structure FinAbSubgroup::structure() const {
  const std::size_t k = parent_.rank();
  // relations diag(m) written in the lattice basis
  IntMatrix rel(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, Int(0));
    e[i] = parent_.cyclic_orders()[i];
    IntVector c;
    solve_triangular(lattice_, e, c);
    for (std::size_t j = 0; j < k; ++j)
      rel(i, j) = c[j];
  }
  const SmithForm s = smith_normal_form(rel.transpose());
  const IntMatrix uinv = k ? unimodular_inverse(s.U) : IntMatrix();
  Structure out;
  IntVector factors;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.D(i, i) <= 1)
      continue;
    factors.push_back(s.D(i, i));
    const IntVector y = uinv.col(i);
    out.generator_images.push_back(parent_.reduce(row_times(y, lattice_)));
  }
  out.group = FinAb(std::move(factors));
  return out;
}

bool operator<(const FinAbSubgroup& a, const FinAbSubgroup& b) {
  const Int oa = a.order(), ob = b.order();
  if (oa != ob)
    return oa < ob;
  return a.lattice_ < b.lattice_;
}

// ---------------------------------------------------------------------------
// FinAbHom

FinAbHom::FinAbHom(FinAb source, FinAb target, IntMatrix images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.rows() != target_.rank() || images_.cols() != source_.rank())
    throw std::invalid_argument("FinAbHom: image matrix has the wrong shape");
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    const FinAbElem img = target_.reduce(images_.col(j));
    if (target_.scale(source_.cyclic_orders()[j], img) != target_.zero())
      throw std::invalid_argument("FinAbHom: image does not respect generator order");
    for (std::size_t i = 0; i < target_.rank(); ++i)
      images_(i, j) = img.coords[i];
  }
}

FinAbElem FinAbHom::apply(const FinAbElem& x) const { return target_.reduce(images_ * x.coords); }

FinAbSubgroup FinAbHom::image() const {
  std::vector<FinAbElem> gens;
  for (std::size_t j = 0; j < source_.rank(); ++j)
    gens.push_back(target_.reduce(images_.col(j)));
  return FinAbSubgroup::generated_by(target_, gens);
}

bool FinAbHom::is_surjective() const { return image().order() == target_.order(); }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      if (d * d != n)
        out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t divisor_count(const Int& n) { return divisors(n).size(); }

namespace {

// Fills rows k-1 .. 0 of an upper-triangular HNF. Row i is admissible when
// m_i e_i lies in the span of rows i..k-1.
void extend_subgroup_rows(const FinAb& a, std::size_t i, IntMatrix& lat,
                          std::vector<std::pair<Int, IntMatrix>>& out, const Limits& limits) {
  const std::size_t k = a.rank();
  if (i == 0) {
    Int index = 1;
    for (std::size_t j = 0; j < k; ++j)
      index *= lat(j, j);
    out.emplace_back(a.order() / index, lat);
    if (out.size() > limits.max_results)
      fail(Errc::TooLarge, "subgroup count exceeds the result bound");
    return;
  }
  const std::size_t row = i - 1;
  const Int& m = a.cyclic_orders()[row];
  IntVector target(k);
  Int q;
  for (const Int& h : divisors(m)) {
    // off-diagonal entries h_{row,j} in [0, h_jj) for j > row
    std::vector<Int> radices;
    for (std::size_t j = row + 1; j < k; ++j)
      radices.push_back(lat(j, j));
    IntVector offs(radices.size(), Int(0));
    for (;;) {
      lat(row, row) = h;
      for (std::size_t j = row + 1; j < k; ++j)
        lat(row, j) = offs[j - row - 1];
      for (std::size_t j = 0; j < row; ++j)
        lat(row, j) = 0;
      // m e_row in the span of rows row..k-1; the pivots sit on the diagonal
      for (std::size_t j = row; j < k; ++j)
        target[j] = j == row ? m : Int(0);
      bool admissible = true;
      for (std::size_t j = row; j < k && admissible; ++j) {
        if (!mpz_divisible_p(target[j].get_mpz_t(), lat(j, j).get_mpz_t())) {
          admissible = false;
          break;
        }
        mpz_divexact(q.get_mpz_t(), target[j].get_mpz_t(), lat(j, j).get_mpz_t());
        for (std::size_t l = j; l < k; ++l)
          target[l] -= q * lat(j, l);
      }
      if (admissible)
        extend_subgroup_rows(a, row, lat, out, limits);
      std::size_t t = 0;
      for (; t < offs.size(); ++t) {
        offs[t] += 1;
        if (offs[t] < radices[t])
          break;
        offs[t] = 0;
      }
      if (t == offs.size())
        break;
    }
  }
}

}  // namespace

std::vector<FinAbSubgroup> subgroups(const FinAb& a, const Limits& limits) {
  check_bound(a.order(), limits, "group");
  std::vector<std::pair<Int, IntMatrix>> found;
  IntMatrix lat(a.rank(), a.rank());
  extend_subgroup_rows(a, a.rank(), lat, found, limits);
  std::sort(found.begin(), found.end());
  std::vector<FinAbSubgroup> out;
  out.reserve(found.size());
  for (auto& [order, lattice] : found)
    out.push_back(FinAbSubgroup(a, std::move(lattice)));
  return out;
}

std::vector<FinAbHom> homomorphisms(const FinAb& h, const FinAb& k, bool surjective_only,
                                    const Limits& limits) {
  check_bound(h.order(), limits, "source group");
  check_bound(k.order(), limits, "target group");
  // admissible images of each generator: d_i * y == 0 in k
  std::vector<std::vector<FinAbElem>> choices;
  Int total = 1;
  for (const Int& d : h.cyclic_orders()) {
    std::vector<FinAbElem> opts;
    for (const FinAbElem& y : k.elements(limits))
      if (k.scale(d, y) == k.zero())
        opts.push_back(y);
    total *= Int(static_cast<unsigned long>(opts.size()));
    choices.push_back(std::move(opts));
  }
  if (total > Int(static_cast<unsigned long>(limits.max_results)))
    fail(Errc::TooLarge, "homomorphism count " + total.get_str() + " exceeds the result bound");

  std::vector<FinAbHom> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    IntMatrix images(k.rank(), h.rank());
    for (std::size_t j = 0; j < h.rank(); ++j)
      for (std::size_t i = 0; i < k.rank(); ++i)
        images(i, j) = choices[j][idx[j]].coords[i];
    FinAbHom f(h, k, images);
    if (!surjective_only || f.is_surjective())
      out.push_back(std::move(f));
    std::size_t t = 0;
    for (; t < idx.size(); ++t) {
      if (++idx[t] < choices[t].size())
        break;
      idx[t] = 0;
    }
    if (t == idx.size())
      break;
  }
  return out;
}

FinAb quotient(const FinAb& a, const FinAbSubgroup& s) {
  if (!(s.parent() == a))
    fail(Errc::NotSubgroup, "subgroup of " + s.parent().str() + " is not a subgroup of " + a.str());
  return FinAb(cokernel_invariants(s.lattice().transpose()).torsion);
}

namespace {

void check_automorphisms(const FinAb& a, std::span<const IntMatrix> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!a.is_automorphism(generators[i]))
      fail(Errc::NotAutomorphism,
           "generator " + std::to_string(i) + " " + generators[i].str() + " is not invertible on " +
               a.str());
}

Word unwind(const std::vector<std::size_t>& parent, const std::vector<std::size_t>& via,
            std::size_t node) {
  Word w;
  while (node != 0) {
    w.push_back(via[node]);
    node = parent[node];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// BFS over the orbit; stops early once `goal` is reached when one is given.
Orbit bfs_orbit(const FinAb& a, const FinAbSubgroup& start, std::span<const IntMatrix> generators,
                const Limits& limits, const FinAbSubgroup* goal, bool& found,
                std::size_t& found_index) {
  check_automorphisms(a, generators);
  Orbit orbit;
  std::map<IntMatrix, std::size_t> seen;
  std::vector<std::size_t> parent{0}, via{0};
  orbit.members.push_back(start);
  seen.emplace(start.lattice(), 0);
  found = goal && *goal == start;
  found_index = 0;
  for (std::size_t head = 0; head < orbit.members.size() && !found; ++head) {
    for (std::size_t g = 0; g < generators.size() && !found; ++g) {
      FinAbSubgroup next = orbit.members[head].image(generators[g]);
      if (seen.count(next.lattice()))
        continue;
      const std::size_t idx = orbit.members.size();
      seen.emplace(next.lattice(), idx);
      parent.push_back(head);
      via.push_back(g);
      if (goal && *goal == next) {
        found = true;
        found_index = idx;
      }
      orbit.members.push_back(std::move(next));
      if (orbit.members.size() > limits.max_orbit)
        fail(Errc::TooLarge, "orbit exceeds the BFS bound");
    }
  }
  for (std::size_t i = 0; i < orbit.members.size(); ++i)
    orbit.words.push_back(unwind(parent, via, i));
  return orbit;
}

}  // namespace

Orbit subgroup_orbit(const FinAb& a, const FinAbSubgroup& start,
                     std::span<const IntMatrix> generators, const Limits& limits) {
  if (!(start.parent() == a))
    fail(Errc::NotSubgroup, "orbit start is not a subgroup of " + a.str());
  bool found = false;
  std::size_t idx = 0;
  return bfs_orbit(a, start, generators, limits, nullptr, found, idx);
}

std::optional<Word> orbit_equivalent(const FinAb& a, const FinAbSubgroup& s1,
                                     const FinAbSubgroup& s2,
                                     std::span<const IntMatrix> generators, const Limits& limits) {
  if (!(s1.parent() == a) || !(s2.parent() == a))
    fail(Errc::NotSubgroup, "orbit_equivalent: subgroups of a different group");
  bool found = false;
  std::size_t idx = 0;
  if (s1.order() != s2.order()) {
    check_automorphisms(a, generators);
    return std::nullopt;
  }
  Orbit o = bfs_orbit(a, s1, generators, limits, &s2, found, idx);
  if (!found)
    return std::nullopt;
  return o.words[idx];
}

FinAbSubgroup apply_word(const FinAbSubgroup& s, const Word& word,
                         std::span<const IntMatrix> generators) {
  FinAbSubgroup cur = s;
  for (std::size_t g : word) {
    if (g >= generators.size())
      throw std::out_of_range("apply_word: generator index out of range");
    cur = cur.image(generators[g]);
  }
  return cur;
}

}  // namespace redgrp
