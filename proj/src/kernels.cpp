#include "cyclemotive/kernels.hpp"

#include <atomic>
#include <exception>
#include <omp.h>

#include "cyclemotive/ffcount.hpp"

namespace cyclemotive::kernels {

namespace {

void accumulate_pair(MultiSeries::Terms& out, const MultiExponent& ea, const Integer& ca,
                     const MultiExponent& eb, const Integer& cb, std::uint32_t order) {
  if (total_degree(ea) + total_degree(eb) > order) return;
  MultiExponent e(ea.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
  auto [it, inserted] = out.try_emplace(std::move(e), ca * cb);
  if (!inserted) it->second += ca * cb;
}

void drop_zeros(MultiSeries::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw DomainError("no inverse modulo " + std::to_string(p));
}

// Gauss-Jordan elimination over F_p.
Matrix rref(Matrix m, std::uint32_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const std::uint32_t inv = inverse_mod(m[r][c], p);
    for (auto& x : m[r]) x = (x * inv) % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint32_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
    }
    ++r;
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> pivot_sets(std::uint32_t k, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(k);
  for (std::uint32_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Enumerates every RREF matrix with the given pivot columns. `on_matrix`
// returns false to stop early.
template <typename OnMatrix>
std::uint64_t enumerate_pattern(const std::vector<std::uint32_t>& pivots, std::uint32_t n, std::uint32_t p,
                                OnMatrix on_matrix) {
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::pair<std::size_t, std::uint32_t>> free_slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t j = pivots[i] + 1; j < n; ++j) {
      if (!is_pivot[j]) free_slots.emplace_back(i, j);
    }
  }

  Matrix m(k, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][pivots[i]] = 1;

  std::vector<std::uint32_t> digits(free_slots.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t s = 0; s < free_slots.size(); ++s) m[free_slots[s].first][free_slots[s].second] = digits[s];
    if (rref(m, p) != m) throw std::logic_error("enumerated matrix is not in reduced row echelon form");
    ++count;
    if (!on_matrix()) return count;
    std::size_t s = 0;
    while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
    if (s == digits.size()) break;
  }
  return count;
}

void check_census_args(std::uint32_t k, std::uint32_t n, std::uint32_t p) {
  if (k > n) throw DomainError("rref census: need k <= n");
  if (p < 2 || p > 7 || p == 4 || p == 6) throw DomainError("rref census: field size must be a prime <= 7");
}

}  // namespace

MultiSeries::Terms truncated_product_serial(const SeriesTermList& a, const SeriesTermList& b,
                                            std::uint32_t order) {
  MultiSeries::Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) accumulate_pair(out, ea, ca, eb, cb, order);
  }
  drop_zeros(out);
  return out;
}

MultiSeries::Terms truncated_product_parallel(const SeriesTermList& a, const SeriesTermList& b,
                                              std::uint32_t order) {
  MultiSeries::Terms out;
  const auto rows = static_cast<std::int64_t>(a.size());
#pragma omp parallel
  {
    MultiSeries::Terms local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < rows; ++i) {
      const auto& [ea, ca] = a[static_cast<std::size_t>(i)];
      for (const auto& [eb, cb] : b) accumulate_pair(local, ea, ca, eb, cb, order);
    }
#pragma omp critical(cyclemotive_series_merge)
    for (auto& [e, c] : local) {
      auto [it, inserted] = out.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  drop_zeros(out);
  return out;
}

RrefCensus rref_census_serial(std::uint32_t k, std::uint32_t n, std::uint32_t p, std::uint64_t budget) {
  check_census_args(k, n, p);
  RrefCensus census;
  census.pivot_sets = pivot_sets(k, n);
  for (const auto& piv : census.pivot_sets) {
    const auto c = enumerate_pattern(piv, n, p, [&] { return census.total++ < budget; });
    if (census.total > budget) throw BudgetExceeded(budget);
    census.counts.push_back(c);
  }
  return census;
}

RrefCensus rref_census_parallel(std::uint32_t k, std::uint32_t n, std::uint32_t p, std::uint64_t budget) {
  check_census_args(k, n, p);
  RrefCensus census;
  census.pivot_sets = pivot_sets(k, n);
  census.counts.assign(census.pivot_sets.size(), 0);
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> over{false};
  std::exception_ptr failure;
  const auto patterns = static_cast<std::int64_t>(census.pivot_sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < patterns; ++i) {
    if (over.load(std::memory_order_relaxed)) continue;
    const auto idx = static_cast<std::size_t>(i);
    try {
      census.counts[idx] = enumerate_pattern(census.pivot_sets[idx], n, p, [&] {
        if (total.fetch_add(1, std::memory_order_relaxed) >= budget) {
          over.store(true, std::memory_order_relaxed);
          return false;
        }
        return !over.load(std::memory_order_relaxed);
      });
    } catch (...) {
#pragma omp critical(cyclemotive_census_failure)
      if (!failure) failure = std::current_exception();
      over.store(true, std::memory_order_relaxed);
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (over.load()) throw BudgetExceeded(budget);
  census.total = total.load();
  return census;
}

}  // namespace cyclemotive::kernels
