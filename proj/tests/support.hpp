// Conversions between library values and the plain integers used by the
// oracles.

#ifndef REDGRP_TESTS_SUPPORT_HPP_
#define REDGRP_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>

#include "oracles.hpp"
#include "redgrp/error.hpp"
#include "redgrp/finab.hpp"
#include "redgrp/intlinalg.hpp"

namespace support {

// The error code thrown by f, if any.
template <class F>
std::optional<redgrp::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const redgrp::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline redgrp::IntMatrix to_int(const oracle::Mat& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  redgrp::IntMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

inline oracle::Mat to_ll(const redgrp::IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m(i, j).get_si();
  return out;
}

inline oracle::Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  oracle::Mat m(rows, std::vector<long long>(cols));
  for (auto& row : m)
    for (auto& x : row)
      x = d(rng);
  return m;
}

// A product of random elementary row operations.
inline redgrp::IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 8) {
  redgrp::IntMatrix w = redgrp::IntMatrix::identity(n);
  if (n == 0)
    return w;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b)
      w.negate_row(a);
    else if (s % 3 == 0)
      w.swap_rows(a, b);
    else
      w.add_row_multiple(a, b, factor(rng));
  }
  return w;
}

inline redgrp::FinAb finab(const std::vector<long>& orders) {
  redgrp::IntVector v;
  for (long m : orders)
    v.push_back(m);
  return redgrp::FinAb(v);
}

// Element index of a library element in the oracle's mixed-radix numbering.
inline std::size_t index_of(const oracle::Group& g, const redgrp::FinAbElem& x) {
  std::vector<long> c;
  for (const redgrp::Int& v : x.coords)
    c.push_back(v.get_si());
  return g.index(c);
}

// Element set of a subgroup, enumerated by the library.
inline oracle::Subset element_set(const oracle::Group& g, const redgrp::FinAbSubgroup& s) {
  oracle::Subset out;
  for (const redgrp::FinAbElem& x : s.elements())
    out.push_back(index_of(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

// Element set of a subgroup, closed up from its generators by the oracle.
inline oracle::Subset generated_set(const oracle::Group& g, const redgrp::FinAbSubgroup& s) {
  std::vector<std::size_t> gens;
  for (const redgrp::FinAbElem& x : s.generators())
    gens.push_back(index_of(g, x));
  return oracle::closure(g, gens);
}

}  // namespace support

#endif  // REDGRP_TESTS_SUPPORT_HPP_
