#pragma once

// Test-only reference computations. None of these call into the library's
// arithmetic beyond constructing values to compare against.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "cyclemotive/poly.hpp"

namespace oracle {

using cyclemotive::Integer;

/// Binomial coefficient from Pascal's triangle.
inline Integer pascal(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  std::vector<Integer> row{1};
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 1);
    for (std::uint32_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// Number of multisets of size d drawn from v kinds, by direct recursion on
/// how many of the first kind are taken.
inline Integer multisets(std::uint32_t kinds, std::uint32_t size) {
  if (kinds == 0) return size == 0 ? 1 : 0;
  Integer total = 0;
  for (std::uint32_t first = 0; first <= size; ++first) total += multisets(kinds - 1, size - first);
  return total;
}

/// Dense bivariate polynomial, coefficient [p][q] of u^p v^q.
using Dense = std::vector<std::vector<long>>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size(), std::vector<long>(a[0].size() + b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].size(); ++l) out[i + k][j + l] += a[i][j] * b[k][l];
  return out;
}

inline Dense dense_add(const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()), std::vector<long>(std::max(a[0].size(), b[0].size()), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

inline cyclemotive::Poly2 from_dense(const Dense& d) {
  cyclemotive::Poly2 p;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, d[i][j]);
  return p;
}

/// Number of ways to write `target` as a sum of the given exponents, where
/// exponent i may be used with multiplicity[i] distinguishable colours.
/// Exhaustive search over (colour, count) assignments.
inline Integer colored_compositions(const std::vector<std::vector<std::uint32_t>>& exps,
                                    const std::vector<std::uint32_t>& multiplicity,
                                    const std::vector<std::uint32_t>& target) {
  // Expand colours into separate generators.
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (std::uint32_t c = 0; c < multiplicity[i]; ++c) gens.push_back(exps[i]);
  std::function<Integer(std::size_t, std::vector<std::uint32_t>)> go = [&](std::size_t g,
                                                                          std::vector<std::uint32_t> rest) {
    bool zero = true;
    for (auto r : rest) zero = zero && r == 0;
    if (g == gens.size()) return Integer(zero ? 1 : 0);
    Integer total = 0;
    while (true) {
      total += go(g + 1, rest);
      bool fits = true;
      for (std::size_t i = 0; i < rest.size(); ++i) fits = fits && rest[i] >= gens[g][i];
      if (!fits) break;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= gens[g][i];
    }
    return total;
  };
  return go(0, target);
}

inline cyclemotive::Poly2 random_poly(std::mt19937& rng, int max_terms = 5, std::uint32_t max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-9, 9);
  cyclemotive::Poly2 p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p.add_term({exp(rng), exp(rng)}, coeff(rng));
  return p;
}

}  // namespace oracle
