#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclemotive/multi_series.hpp"
#include "cyclemotive/poly.hpp"

namespace cyclemotive {

class FanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rational polyhedral fan. Every counted cone must be listed explicitly;
/// the zero cone is implicit and faces are not generated.
struct Fan {
  std::uint32_t dim = 0;
  std::vector<std::vector<std::int64_t>> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// Rank of the integer matrix whose rows are `rows`.
std::uint32_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Returns the census d_0..d_n (d_0 = 1 for the zero cone). Throws FanError
/// on a zero, non-primitive or wrong-length ray, an empty or unsorted cone,
/// an index out of range, or a duplicate cone.
std::vector<std::uint64_t> fan_validate(const Fan& fan);

/// Number of top-dimensional cones.
std::uint64_t toric_lambda(const Fan& fan);

/// Orbit decomposition: sum_k d_k (uv - 1)^(n - k).
Poly2 toric_E_poly(const Fan& fan);

/// Same decomposition in the class of the affine line.
LPoly toric_count_poly(const Fan& fan);

/// Closure of the torus orbit of a cone; `cone` is empty for the zero cone.
struct OrbitClosure {
  std::vector<std::size_t> cone;
  std::uint32_t dimension = 0;

  friend bool operator==(const OrbitClosure&, const OrbitClosure&) = default;
};

/// The p-dimensional torus-invariant subvarieties: one per cone of
/// dimension n - p, in the fan's cone order (zero cone when p = n).
std::vector<OrbitClosure> invariant_subvarieties(const Fan& fan, std::uint32_t p);

/// Assigns a multi-exponent to each invariant subvariety, in the order
/// returned by invariant_subvarieties.
struct Grading {
  std::size_t arity = 0;
  std::vector<MultiExponent> exponents;
};

/// Identity grading: subvariety i gets basis vector e_i.
Grading free_grading(std::size_t count);

/// Every subvariety gets the single variable t.
Grading single_variable_grading(std::size_t count);

/// Euler series prod_i 1/(1 - x^{grading_i}) over the p-dimensional invariant
/// subvarieties, truncated at total degree `order`. Uses the free grading
/// when none is supplied.
MultiSeries euler_series(const Fan& fan, std::uint32_t p, const std::optional<Grading>& grading,
                         std::uint32_t order);

/// Product fan: rays (r, 0) and (0, s); cones are products of listed cones
/// or the zero cone, excluding zero x zero.
Fan product_fan(const Fan& a, const Fan& b);

namespace fans {

Fan projective_space(std::uint32_t n);
Fan affine_space(std::uint32_t n);
/// Hirzebruch surface F_a with rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch(std::int64_t a);

}  // namespace fans

}  // namespace cyclemotive
