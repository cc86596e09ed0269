#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/integer.hpp"
#include "cyclemotive/multi_series.hpp"
#include "cyclemotive/poly.hpp"

namespace cyclemotive {

/// Effective p-cycles of degree d in P^n.
struct ChowIndex {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint32_t n = 0;
};

/// Number of p-dimensional coordinate subspaces of P^n: binom(n+1, p+1).
Integer v_pn(std::uint32_t p, std::uint32_t n);

/// binom(v_pn + d - 1, d), with value 1 at d = 0.
Integer chow_invariant_closed(const ChowIndex& idx);

/// Same value computed only through the fixed-point recursions: the
/// convolution over cone decompositions for p >= 1 and the point tower
/// lambda(C_{0,d}(P^{n+1})) = sum_m lambda(C_{0,d-m}(P^n)) for p = 0.
Integer chow_invariant_recursive(const ChowIndex& idx);

/// (1 - t)^(-v_pn) up to t^order.
MultiSeries chow_series(std::uint32_t p, std::uint32_t n, std::uint32_t order);

/// The u-independent image in Z[u, u^-1].
Laurent1 chow_htilde(const ChowIndex& idx);

/// Invariant of the irreducible locus: v_pn for d = 1, zero for d > 1.
Integer irreducible_invariant(std::uint32_t p, std::uint32_t d, std::uint32_t n);

/// Slots (k, l) with k + l = p, k <= n, l <= m, ordered by k.
std::vector<std::pair<std::uint32_t, std::uint32_t>> product_slots(std::uint32_t p, std::uint32_t n,
                                                                   std::uint32_t m);

/// Multidegree of a p-cycle class on P^n x P^m, one entry per product slot.
struct MultiDegree {
  std::vector<std::uint32_t> entries;
};

Integer irreducible_invariant_product(const MultiDegree& alpha, std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// prod over slots (k, l) of (1 - x_{(k,l)})^(-binom(n+1,k+1) binom(m+1,l+1)).
MultiSeries euler_chow_product_formula(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t order);

/// The same series by induction on n: the P^{n+1} x P^m series is the
/// product of the embedded P^n x P^m series for p, the cone-shifted series
/// for p - 1 (slot (k, l) -> (k+1, l)) and the P^m series at slot (0, p).
MultiSeries euler_chow_product_recursive(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t order);

/// Expected residues for point counts of C_{p,d}(P^n) over F_{q^m}: 1 mod q
/// and binom(v + d - 1, d) mod (q - 1). For d <= 1 the actual count is known
/// (a point for d = 0, the Grassmannian for d = 1) and is checked.
CongruenceReport chow_congruence_targets(const ChowIndex& idx, std::uint64_t q, std::uint32_t m);

}  // namespace cyclemotive
