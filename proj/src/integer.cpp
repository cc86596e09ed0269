#include "cyclemotive/integer.hpp"

namespace cyclemotive {

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer power(const Integer& base, std::uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer residue(const Integer& value, const Integer& modulus) {
  if (modulus <= 0) throw DomainError("residue: modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace cyclemotive
