#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclemotive/integer.hpp"

namespace cyclemotive {

using MultiExponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const MultiExponent& e);

/// Graded order: lower total degree first, then lexicographically larger
/// exponent first (x1 before x2).
struct GradedOrder {
  bool operator()(const MultiExponent& a, const MultiExponent& b) const;
};

/// Truncated power series in `arity` variables, keeping every monomial of
/// total degree <= order. Arity 0 is allowed (the series is a constant).
class MultiSeries {
 public:
  using Terms = std::map<MultiExponent, Integer, GradedOrder>;

  MultiSeries(std::size_t arity, std::uint32_t order);

  static MultiSeries one(std::size_t arity, std::uint32_t order);

  std::size_t arity() const { return arity_; }
  std::uint32_t order() const { return order_; }
  const Terms& terms() const { return terms_; }

  Integer coefficient(const MultiExponent& e) const;

  /// Adds c·x^e; terms beyond the truncation order are discarded.
  void add_term(const MultiExponent& e, const Integer& c);

  MultiSeries& operator+=(const MultiSeries& other);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  /// Truncated product; runs the OpenMP kernel.
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  /// Relabels variables: variable i of this series becomes variable
  /// slot_map[i] of a series with `new_arity` variables.
  MultiSeries embed(const std::vector<std::size_t>& slot_map, std::size_t new_arity) const;

  /// Coefficients of a univariate series, index = degree, padded to order+1.
  std::vector<Integer> univariate_coefficients() const;

  /// Renders with variable `t` when arity is 1, otherwise x1..xr.
  std::string to_string() const;

 private:
  void check_shape(const MultiExponent& e) const;

  std::size_t arity_;
  std::uint32_t order_;
  Terms terms_;
};

/// One factor (1 - x^exponent)^(-multiplicity) of an inverse product.
struct InverseFactor {
  MultiExponent exponent;
  std::uint64_t multiplicity = 1;
};

/// Expands prod_i (1 - x^{m_i})^{-c_i} to total degree `order`. The
/// coefficient of x^a counts the ways to write a as a sum of the m_i with
/// the i-th exponent available in c_i distinguishable colours.
/// Throws DomainError for a zero exponent, multiplicity 0, or an arity mismatch.
MultiSeries expand_inverse_product(const std::vector<InverseFactor>& factors, std::size_t arity,
                                   std::uint32_t order);

}  // namespace cyclemotive
