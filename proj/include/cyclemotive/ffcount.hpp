#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclemotive/integer.hpp"
#include "cyclemotive/poly.hpp"

namespace cyclemotive {

struct Fan;

inline constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("brute-force enumeration exceeds budget of " + std::to_string(budget) + " points") {}
};

/// q = prime^exponent.
struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  /// Throws DomainError unless q >= 2 is a prime power.
  static PrimePower factor(std::uint64_t q);
};

/// Budget from CYCLEMOTIVE_BUDGET, falling back to kDefaultBruteForceBudget.
std::uint64_t brute_force_budget_from_env();

/// Number of k-dimensional subspaces of an n-dimensional space over F_q.
Integer gaussian_binomial(std::uint32_t n, std::uint32_t k, const Integer& q);

/// Gaussian binomial [n choose k] as a polynomial in L, built from the
/// q-Pascal rule [n,k] = [n-1,k-1] + L^k [n-1,k].
LPoly gaussian_binomial_poly(std::uint32_t n, std::uint32_t k);

/// Counts k-subspaces of F_q^n by enumerating reduced row echelon forms.
/// q must be a prime <= 7.
Integer grassmannian_count_brute(std::uint32_t k, std::uint32_t n, std::uint32_t q,
                                 std::uint64_t budget = kDefaultBruteForceBudget);

/// Counts points of P^n(F_q) by normalising nonzero vectors of F_q^{n+1}.
Integer projective_space_count_brute(std::uint32_t n, std::uint32_t q,
                                     std::uint64_t budget = kDefaultBruteForceBudget);

/// Points of the toric variety over F_{q^m}: sum over cones of (q^m - 1)^(n - dim).
Integer toric_count(const Fan& fan, const Integer& q, std::uint32_t m);

/// Computed residues against expected residues modulo q and q - 1.
struct CongruenceReport {
  Integer q;
  std::optional<Integer> actual;
  Integer expected_mod_q;
  Integer expected_mod_qm1;
  std::optional<bool> pass_mod_q;
  std::optional<bool> pass_mod_qm1;
  std::string status;  // "verified", "failed" or "untestable at desk scale"
  std::string count_source;

  bool passed() const { return status == "verified"; }
};

CongruenceReport congruence_check(const Integer& actual, const Integer& expected_mod_q,
                                  const Integer& expected_mod_qm1, const Integer& q);

}  // namespace cyclemotive
