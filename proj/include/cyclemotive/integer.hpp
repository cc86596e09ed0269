#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cyclemotive {

using Integer = mpz_class;

/// Thrown when an operation is called outside its documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer binomial(std::uint64_t n, std::uint64_t k);
Integer power(const Integer& base, std::uint64_t exp);

/// Least non-negative residue; modulus 1 always yields 0.
Integer residue(const Integer& value, const Integer& modulus);

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace cyclemotive
