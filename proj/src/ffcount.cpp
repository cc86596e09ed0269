#include "cyclemotive/ffcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cyclemotive/kernels.hpp"
#include "cyclemotive/toric.hpp"

namespace cyclemotive {

PrimePower PrimePower::factor(std::uint64_t q) {
  if (q < 2) throw DomainError("field size must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, q, 1};
  std::uint64_t rest = q;
  std::uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return PrimePower{q, p, e};
}

std::uint64_t brute_force_budget_from_env() {
  const char* raw = std::getenv("CYCLEMOTIVE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteForceBudget;
  char* end = nullptr;
  const auto v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw DomainError(std::string("CYCLEMOTIVE_BUDGET is not a positive integer: ") + raw);
  return v;
}

Integer gaussian_binomial(std::uint32_t n, std::uint32_t k, const Integer& q) {
  if (k > n) throw DomainError("gaussian_binomial: need 0 <= k <= n");
  if (q < 2) throw DomainError("gaussian_binomial: need q >= 2");
  Integer num = 1;
  Integer den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num *= power(q, n - i) - 1;
    den *= power(q, k - i) - 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

LPoly gaussian_binomial_poly(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw DomainError("gaussian_binomial_poly: need 0 <= k <= n");
  // row[j] holds [i, j] while sweeping i = 0..n.
  std::vector<LPoly> row(k + 1);
  row[0] = LPoly(1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + pow(LPoly::L(), j) * row[j];
    }
  }
  return row[k];
}

Integer grassmannian_count_brute(std::uint32_t k, std::uint32_t n, std::uint32_t q, std::uint64_t budget) {
  if (PrimePower::factor(q).exponent != 1 || q > 7) {
    throw DomainError("brute-force enumeration needs a prime q <= 7");
  }
  const auto census = kernels::rref_census_parallel(k, n, q, budget);
  return Integer(static_cast<unsigned long>(census.total));
}

Integer projective_space_count_brute(std::uint32_t n, std::uint32_t q, std::uint64_t budget) {
  if (PrimePower::factor(q).exponent != 1 || q > 7) {
    throw DomainError("brute-force enumeration needs a prime q <= 7");
  }
  // Walk all of F_q^{n+1}; keep the vectors whose first nonzero entry is 1.
  std::vector<std::uint32_t> digits(n + 1, 0);
  std::uint64_t visited = 0;
  std::uint64_t count = 0;
  while (true) {
    if (++visited > budget) throw BudgetExceeded(budget);
    for (auto d : digits) {
      if (d == 0) continue;
      if (d == 1) ++count;
      break;
    }
    std::size_t s = 0;
    while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
    if (s == digits.size()) break;
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer toric_count(const Fan& fan, const Integer& q, std::uint32_t m) {
  if (q < 2) throw DomainError("toric_count: need q >= 2");
  if (m < 1) throw DomainError("toric_count: need m >= 1");
  const auto census = fan_validate(fan);
  const Integer torus_points = power(q, m) - 1;
  Integer total = 0;
  for (std::uint32_t k = 0; k <= fan.dim; ++k) {
    total += Integer(static_cast<unsigned long>(census[k])) * power(torus_points, fan.dim - k);
  }
  return total;
}

CongruenceReport congruence_check(const Integer& actual, const Integer& expected_mod_q,
                                  const Integer& expected_mod_qm1, const Integer& q) {
  if (q < 2) throw DomainError("congruence_check: need q >= 2");
  CongruenceReport r;
  r.q = q;
  r.actual = actual;
  r.expected_mod_q = residue(expected_mod_q, q);
  r.expected_mod_qm1 = residue(expected_mod_qm1, q - 1);
  r.pass_mod_q = residue(actual, q) == r.expected_mod_q;
  r.pass_mod_qm1 = residue(actual, q - 1) == r.expected_mod_qm1;
  r.status = (*r.pass_mod_q && *r.pass_mod_qm1) ? "verified" : "failed";
  return r;
}

}  // namespace cyclemotive
