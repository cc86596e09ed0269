#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclemotive/integer.hpp"
#include "cyclemotive/poly.hpp"
#include "cyclemotive/toric.hpp"

namespace cyclemotive {

/// A leaf whose Hodge data cannot be written as a polynomial in L.
class NotCountable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown measure name or leaf kind.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace leaf {

struct Point {};
struct AffineSpace {
  std::uint32_t n = 0;
};
/// The split torus of rank n >= 1.
struct Torus {
  std::uint32_t n = 1;
};
struct ProjSpace {
  std::uint32_t n = 0;
};
/// k-dimensional subspaces of an n-dimensional space, 1 <= k <= n.
struct Grassmannian {
  std::uint32_t k = 1;
  std::uint32_t n = 1;
};
/// Cell dimensions, non-decreasing; one affine cell per entry.
struct Cellular {
  std::vector<std::uint32_t> dims;
};
struct ToricFan {
  Fan fan;
};
struct SmoothProjective {
  std::string name;
  Poly2 e_poly;
  bool countable = false;
};

}  // namespace leaf

/// Immutable expression tree of variety classes. Copies share structure.
class MotiveExpr {
 public:
  enum class Op { DisjointUnion, Difference, Product, Cone };

  struct Compound {
    Op op;
    std::vector<MotiveExpr> args;
  };

  using Node = std::variant<leaf::Point, leaf::AffineSpace, leaf::Torus, leaf::ProjSpace, leaf::Grassmannian,
                            leaf::Cellular, leaf::ToricFan, leaf::SmoothProjective, Compound>;

  static MotiveExpr point();
  static MotiveExpr affine_space(std::uint32_t n);
  static MotiveExpr torus(std::uint32_t n);
  static MotiveExpr proj_space(std::uint32_t n);
  static MotiveExpr grassmannian(std::uint32_t k, std::uint32_t n);
  static MotiveExpr cellular(std::vector<std::uint32_t> dims);
  static MotiveExpr toric_fan(Fan fan);
  static MotiveExpr smooth_projective(std::string name, Poly2 e_poly, bool countable);
  /// Genus-one curve: E-polynomial 1 - u - v + uv, not countable.
  static MotiveExpr elliptic_curve();

  static MotiveExpr disjoint_union(MotiveExpr a, MotiveExpr b);
  /// Formal class difference [a] - [b]; no embedding is checked.
  static MotiveExpr difference(MotiveExpr a, MotiveExpr b);
  static MotiveExpr product(MotiveExpr a, MotiveExpr b);
  /// Projective cone: vertex plus an affine-line bundle, [pt] + L[a].
  static MotiveExpr cone(MotiveExpr a);

  const Node& node() const { return *node_; }

 private:
  explicit MotiveExpr(Node node);
  std::shared_ptr<const Node> node_;
};

struct Measure {
  enum class Kind { EPoly, Euler, HTildeQuotient, HBarQuotient, CountPoly, CountAt };

  Kind kind = Kind::EPoly;
  Integer q = 0;
  std::uint32_t m = 1;

  static Measure of(Kind kind);
  /// Point count over F_{q^m}; q must be a prime power, m >= 1.
  static Measure count_at(std::uint64_t q, std::uint32_t m = 1);
  /// Accepts e-poly, euler, h-tilde, h-bar, count-poly, count:q[,m].
  /// Throws Unsupported for an unknown name, DomainError for bad q or m.
  static Measure parse(std::string_view text);

  std::string name() const;
};

using MeasureValue = std::variant<Integer, Poly2, Laurent1, LPoly>;

std::string render(const MeasureValue& value);

Poly2 eval_E(const MotiveExpr& e);

/// Throws NotCountable if some leaf has no expression in L.
LPoly eval_count_poly(const MotiveExpr& e);

MeasureValue eval_measure(const MotiveExpr& e, const Measure& m);

/// Fixed-point constraints on a Hodge polynomial.
struct HodgeReport {
  /// Antidiagonal sums vanish for |p - q| > fixed_dim_bound.
  bool antidiagonal_ok = true;
  /// Sum of diagonal coefficients equals the Euler characteristic.
  bool diagonal_ok = true;
  /// No pure u^p or v^q term with p, q > 0.
  bool axis_ok = true;

  std::vector<std::int64_t> offending_antidiagonals;
  Integer diagonal_sum;
  std::vector<Monomial> offending_axis;

  bool all_pass() const { return antidiagonal_ok && diagonal_ok && axis_ok; }
};

HodgeReport hodge_constraints_check(const Poly2& h, const Integer& chi, std::uint32_t fixed_dim_bound);

}  // namespace cyclemotive
