#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference with the
// same contract; tests compare them and bench/ times them.

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclemotive/integer.hpp"
#include "cyclemotive/multi_series.hpp"

namespace cyclemotive::kernels {

using SeriesTermList = std::vector<std::pair<MultiExponent, Integer>>;

/// Truncated product of two sparse series of equal arity.
MultiSeries::Terms truncated_product_serial(const SeriesTermList& a, const SeriesTermList& b,
                                            std::uint32_t order);
MultiSeries::Terms truncated_product_parallel(const SeriesTermList& a, const SeriesTermList& b,
                                              std::uint32_t order);

/// Per-pattern counts of k x n reduced row echelon matrices over F_p, one
/// entry per pivot-column set (in lexicographic order of the sets). Every
/// enumerated matrix is re-reduced and must be a fixed point of RREF.
struct RrefCensus {
  std::vector<std::vector<std::uint32_t>> pivot_sets;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Throws BudgetExceeded (see ffcount.hpp) once more than `budget`
/// matrices would be enumerated.
RrefCensus rref_census_serial(std::uint32_t k, std::uint32_t n, std::uint32_t p, std::uint64_t budget);
RrefCensus rref_census_parallel(std::uint32_t k, std::uint32_t n, std::uint32_t p, std::uint64_t budget);

}  // namespace cyclemotive::kernels
