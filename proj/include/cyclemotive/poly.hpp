#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cyclemotive/integer.hpp"

namespace cyclemotive {

/// Exponent pair of the monomial u^u v^v.
struct Monomial {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  std::uint32_t degree() const { return u + v; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lex with u before v: 1, u, v, u^2, uv, v^2, ...
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.u > b.u;
  }
};

class Laurent1;

/// Sparse polynomial in Z[u,v]. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class Poly2 {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  Poly2() = default;
  Poly2(long c) : Poly2(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  Poly2(const Integer& c);              // NOLINT(google-explicit-constructor)

  static Poly2 term(std::uint32_t u_exp, std::uint32_t v_exp, const Integer& c);
  static Poly2 u() { return term(1, 0, 1); }
  static Poly2 v() { return term(0, 1, 1); }
  static Poly2 uv() { return term(1, 1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::uint32_t u_exp, std::uint32_t v_exp) const;
  std::uint32_t total_degree() const;

  /// Adds c·u^a v^b in place, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  Poly2& operator+=(const Poly2& other);
  Poly2& operator-=(const Poly2& other);
  Poly2& operator*=(const Poly2& other);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Canonical rendering, e.g. "1+u+v+uv-u^2*v-u*v^2+2u^2*v^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

Poly2 pow(const Poly2& base, std::uint32_t exp);

/// Parses the rendering produced by Poly2::to_string. `*` between factors is
/// optional and whitespace is ignored. Throws std::invalid_argument.
Poly2 parse_poly2(std::string_view text);

/// Laurent polynomial in Z[u, u^-1].
class Laurent1 {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  Laurent1() = default;
  Laurent1(const Integer& c);  // NOLINT(google-explicit-constructor)

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coefficient(std::int64_t e) const;
  void add_term(std::int64_t e, const Integer& c);

  Laurent1& operator+=(const Laurent1& other);
  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b);
  friend bool operator==(const Laurent1&, const Laurent1&) = default;

  /// Value at u = 1.
  Integer at_one() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Univariate polynomial in the class L of the affine line.
class LPoly {
 public:
  LPoly() = default;
  LPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit LPoly(std::vector<Integer> coeffs);

  static LPoly L() { return LPoly(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }

  LPoly& operator+=(const LPoly& other);
  LPoly& operator-=(const LPoly& other);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly&, const LPoly&) = default;

  Integer evaluate(const Integer& at) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

LPoly pow(const LPoly& base, std::uint32_t exp);

/// Image under v -> u^-1, i.e. in Z[u,v]/<uv-1>.
Laurent1 quotient_uv_minus1(const Poly2& a);

/// Axis-supported representative modulo <uv>: mixed monomials are dropped.
Poly2 quotient_uv(const Poly2& a);

Integer specialize(const Poly2& a, const Integer& u0, const Integer& v0);

/// Sum of coefficients along each line p - q = i; zero sums are omitted.
std::map<std::int64_t, Integer> antidiagonal_sums(const Poly2& a);

/// Substitutes uv -> L. Throws DomainError if `a` has an off-diagonal term.
LPoly diagonal_to_lpoly(const Poly2& a);

/// Substitutes L -> uv.
Poly2 lpoly_to_diagonal(const LPoly& a);

}  // namespace cyclemotive
