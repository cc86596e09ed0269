#include <doctest.h>

#include <cstdlib>
#include <set>

#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/kernels.hpp"
#include "oracles.hpp"

using namespace cyclemotive;

namespace {

// Number of k x n full-rank matrices over F_q divided by |GL_k(F_q)|.
Integer subspaces_by_bases(std::uint32_t k, std::uint32_t n, std::uint64_t q) {
  Integer ordered_bases = 1, gl = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    Integer qn = 1, qk = 1, qi = 1;
    for (std::uint32_t j = 0; j < n; ++j) qn *= static_cast<unsigned long>(q);
    for (std::uint32_t j = 0; j < k; ++j) qk *= static_cast<unsigned long>(q);
    for (std::uint32_t j = 0; j < i; ++j) qi *= static_cast<unsigned long>(q);
    ordered_bases *= qn - qi;
    gl *= qk - qi;
  }
  return ordered_bases / gl;
}

}  // namespace

TEST_CASE("prime powers") {
  const auto pp = PrimePower::factor(9);
  CHECK(pp.prime == 3);
  CHECK(pp.exponent == 2);
  CHECK(PrimePower::factor(7).exponent == 1);
  CHECK(PrimePower::factor(8).prime == 2);
  CHECK_THROWS_AS(PrimePower::factor(1), DomainError);
  CHECK_THROWS_AS(PrimePower::factor(12), DomainError);
}

TEST_CASE("gaussian binomial examples") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  for (std::uint32_t n = 0; n <= 6; ++n) CHECK(gaussian_binomial(n, 0, 5) == 1);
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), DomainError);
  CHECK_THROWS_AS(gaussian_binomial(2, 1, 1), DomainError);
}

TEST_CASE("gaussian binomial against ordered bases") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::uint32_t n = 0; n <= 7; ++n)
      for (std::uint32_t k = 0; k <= n; ++k) {
        const Integer g = gaussian_binomial(n, k, static_cast<unsigned long>(q));
        CHECK(g == subspaces_by_bases(k, n, q));
        CHECK(g == gaussian_binomial(n, n - k, static_cast<unsigned long>(q)));
        CHECK(g == gaussian_binomial_poly(n, k).evaluate(static_cast<unsigned long>(q)));
      }
}

TEST_CASE("gaussian polynomial at 1 is the binomial") {
  for (std::uint32_t n = 0; n <= 10; ++n)
    for (std::uint32_t k = 0; k <= n; ++k) CHECK(gaussian_binomial_poly(n, k).evaluate(1) == oracle::pascal(n, k));
  CHECK(gaussian_binomial_poly(4, 2).to_string() == "1+L+2L^2+L^3+L^4");
}

TEST_CASE("brute-force Grassmannian examples") {
  CHECK(grassmannian_count_brute(1, 3, 2) == 7);
  CHECK(grassmannian_count_brute(2, 4, 2) == 35);
  for (std::uint32_t n = 0; n <= 4; ++n) CHECK(grassmannian_count_brute(n, n, 3) == 1);
  CHECK_THROWS_AS(grassmannian_count_brute(1, 3, 4), DomainError);
  CHECK_THROWS_AS(grassmannian_count_brute(1, 3, 11), DomainError);
}

TEST_CASE("brute force equals gaussian binomial") {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (std::uint32_t n = 0; n <= 5; ++n)
      for (std::uint32_t k = 0; k <= n; ++k) CHECK(grassmannian_count_brute(k, n, q) == gaussian_binomial(n, k, q));
}

TEST_CASE("census patterns are Schubert cells") {
  // A pivot set {c_1 < ... < c_k} leaves sum_i (n - c_i - (k - i)) free
  // entries, one per non-pivot column to the right of each pivot.
  for (std::uint32_t q : {2u, 3u})
    for (std::uint32_t n = 1; n <= 5; ++n)
      for (std::uint32_t k = 1; k <= n; ++k) {
        const auto census = kernels::rref_census_serial(k, n, q, kDefaultBruteForceBudget);
        CHECK(census.pivot_sets.size() == oracle::pascal(n, k));
        std::uint64_t total = 0;
        for (std::size_t s = 0; s < census.pivot_sets.size(); ++s) {
          const auto& piv = census.pivot_sets[s];
          std::uint32_t free = 0;
          for (std::uint32_t i = 0; i < k; ++i) free += (n - piv[i] - 1) - (k - i - 1);
          std::uint64_t expected = 1;
          for (std::uint32_t j = 0; j < free; ++j) expected *= q;
          CHECK(census.counts[s] == expected);
          total += census.counts[s];
        }
        CHECK(total == census.total);
      }
}

TEST_CASE("serial and parallel census agree") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 0; n <= 4; ++n)
      for (std::uint32_t k = 0; k <= n; ++k) {
        const auto a = kernels::rref_census_serial(k, n, q, kDefaultBruteForceBudget);
        const auto b = kernels::rref_census_parallel(k, n, q, kDefaultBruteForceBudget);
        CHECK(a.pivot_sets == b.pivot_sets);
        CHECK(a.counts == b.counts);
        CHECK(a.total == b.total);
      }
}

TEST_CASE("serial and parallel series products agree") {
  const auto a = expand_inverse_product({{{1, 0, 0}, 2}, {{0, 1, 1}, 3}}, 3, 8);
  const auto b = expand_inverse_product({{{0, 0, 1}, 4}, {{1, 1, 0}, 1}}, 3, 8);
  const kernels::SeriesTermList la(a.terms().begin(), a.terms().end());
  const kernels::SeriesTermList lb(b.terms().begin(), b.terms().end());
  const auto serial = kernels::truncated_product_serial(la, lb, 8);
  CHECK(serial == kernels::truncated_product_parallel(la, lb, 8));
  CHECK(serial == (a * b).terms());
  const auto all = expand_inverse_product({{{1, 0, 0}, 2}, {{0, 1, 1}, 3}, {{0, 0, 1}, 4}, {{1, 1, 0}, 1}}, 3, 8);
  CHECK(serial == all.terms());
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_AS(grassmannian_count_brute(3, 6, 5, 1000), BudgetExceeded);
  CHECK_THROWS_AS(kernels::rref_census_serial(2, 4, 2, 10), BudgetExceeded);
  CHECK_THROWS_AS(kernels::rref_census_parallel(2, 4, 2, 10), BudgetExceeded);
  CHECK(grassmannian_count_brute(2, 4, 2, 35) == 35);
  CHECK_THROWS_AS(projective_space_count_brute(5, 7, 100), BudgetExceeded);
}

TEST_CASE("budget from the environment") {
  ::setenv("CYCLEMOTIVE_BUDGET", "12345", 1);
  CHECK(brute_force_budget_from_env() == 12345);
  ::setenv("CYCLEMOTIVE_BUDGET", "not-a-number", 1);
  CHECK_THROWS_AS(brute_force_budget_from_env(), DomainError);
  ::unsetenv("CYCLEMOTIVE_BUDGET");
  CHECK(brute_force_budget_from_env() == kDefaultBruteForceBudget);
}

TEST_CASE("projective space counts") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    for (std::uint32_t n = 0; n <= 3; ++n) {
      Integer expected = 0, qi = 1;
      for (std::uint32_t i = 0; i <= n; ++i, qi *= q) expected += qi;
      CHECK(projective_space_count_brute(n, q) == expected);
    }
}

TEST_CASE("congruence checks") {
  CHECK(congruence_check(130, 1, 6, 3).passed());
  CHECK(congruence_check(7, 1, 3, 2).passed());
  CHECK(congruence_check(4, 1, 2, 3).passed());
  const auto bad = congruence_check(5, 1, 2, 3);
  CHECK_FALSE(bad.passed());
  CHECK(bad.status == "failed");
  CHECK(bad.pass_mod_q.value() == false);
}

TEST_CASE("d = 1 counting congruences") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::uint32_t n = 0; n <= 6; ++n)
      for (std::uint32_t p = 0; p <= n; ++p) {
        const Integer g = gaussian_binomial(n + 1, p + 1, static_cast<unsigned long>(q));
        const Integer qi(static_cast<unsigned long>(q));
        CHECK(residue(g, qi) == 1);
        CHECK(residue(g - oracle::pascal(n + 1, p + 1), qi - 1) == 0);
      }
}

TEST_CASE("residues") {
  CHECK(residue(-1, 3) == 2);
  CHECK(residue(21, 1) == 0);
  CHECK_THROWS_AS(residue(5, 0), DomainError);
}
