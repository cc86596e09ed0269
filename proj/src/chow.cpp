#include "cyclemotive/chow.hpp"

#include <map>
#include <string>
#include <tuple>

namespace cyclemotive {

namespace {

void check_index(std::uint32_t p, std::uint32_t n) {
  if (p > n) throw DomainError("need 0 <= p <= n (got p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
}

class RecursiveChow {
 public:
  Integer operator()(std::uint32_t p, std::uint32_t d, std::uint32_t n) {
    if (d == 0) return 1;
    if (p > n) return 0;
    const auto key = std::make_tuple(p, d, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Integer value = 0;
    if (p == 0) {
      // Fixed points: m copies of the new vertex plus a degree d - m cycle
      // on the hyperplane.
      if (n == 0) {
        value = 1;
      } else {
        for (std::uint32_t j = 0; j <= d; ++j) value += (*this)(0, j, n - 1);
      }
    } else {
      // Fixed cycles split into a part inside the hyperplane and cones over
      // (p-1)-cycles of the hyperplane.
      for (std::uint32_t i = 0; i <= d; ++i) value += (*this)(p, i, n - 1) * (*this)(p - 1, d - i, n - 1);
    }
    memo_.emplace(key, value);
    return value;
  }

 private:
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Integer> memo_;
};

std::size_t slot_index(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& slots, std::uint32_t k,
                       std::uint32_t l) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].first == k && slots[i].second == l) return i;
  }
  throw std::logic_error("missing product slot");
}

MultiSeries product_recursive(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t order,
                              RecursiveChow& chow) {
  // No p-cycles once p exceeds the dimension: the series is 1.
  if (p > n + m) return MultiSeries::one(0, order);
  if (n == 0) return euler_chow_product_formula(p, 0, m, order);
  const auto target = product_slots(p, n, m);
  MultiSeries out = MultiSeries::one(target.size(), order);
  if (target.empty()) return out;

  // Cycles supported on the hyperplane P^{n-1} x P^m keep their slot.
  {
    const auto src = product_slots(p, n - 1, m);
    std::vector<std::size_t> map;
    for (const auto& [k, l] : src) map.push_back(slot_index(target, k, l));
    out = out * product_recursive(p, n - 1, m, order, chow).embed(map, target.size());
  }
  // Cones from the fixed vertex raise the first index.
  if (p >= 1) {
    const auto src = product_slots(p - 1, n - 1, m);
    std::vector<std::size_t> map;
    for (const auto& [k, l] : src) map.push_back(slot_index(target, k + 1, l));
    out = out * product_recursive(p - 1, n - 1, m, order, chow).embed(map, target.size());
  }
  // Cycles in the fibre {vertex} x P^m sit in slot (0, p).
  if (p <= m) {
    const auto slot = slot_index(target, 0, p);
    MultiSeries fibre(target.size(), order);
    for (std::uint32_t d = 0; d <= order; ++d) {
      MultiExponent e(target.size(), 0);
      e[slot] = d;
      fibre.add_term(e, chow(p, d, m));
    }
    out = out * fibre;
  }
  return out;
}

}  // namespace

Integer v_pn(std::uint32_t p, std::uint32_t n) {
  check_index(p, n);
  return binomial(n + 1, p + 1);
}

Integer chow_invariant_closed(const ChowIndex& idx) {
  const Integer v = v_pn(idx.p, idx.n);
  if (idx.d == 0) return 1;
  return binomial(v.get_ui() + idx.d - 1, idx.d);
}

Integer chow_invariant_recursive(const ChowIndex& idx) {
  check_index(idx.p, idx.n);
  RecursiveChow chow;
  return chow(idx.p, idx.d, idx.n);
}

MultiSeries chow_series(std::uint32_t p, std::uint32_t n, std::uint32_t order) {
  const Integer v = v_pn(p, n);
  return expand_inverse_product({InverseFactor{{1}, v.get_ui()}}, 1, order);
}

Laurent1 chow_htilde(const ChowIndex& idx) { return Laurent1(chow_invariant_closed(idx)); }

Integer irreducible_invariant(std::uint32_t p, std::uint32_t d, std::uint32_t n) {
  check_index(p, n);
  if (d < 1) throw DomainError("irreducible locus needs degree d >= 1");
  return d == 1 ? v_pn(p, n) : Integer(0);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> product_slots(std::uint32_t p, std::uint32_t n,
                                                                   std::uint32_t m) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t k = 0; k <= std::min(p, n); ++k) {
    if (p - k <= m) out.emplace_back(k, p - k);
  }
  return out;
}

Integer irreducible_invariant_product(const MultiDegree& alpha, std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  if (p > n + m) throw DomainError("need p <= n + m");
  const auto slots = product_slots(p, n, m);
  if (alpha.entries.size() != slots.size()) {
    throw DomainError("multidegree has " + std::to_string(alpha.entries.size()) + " entries, expected " +
                      std::to_string(slots.size()));
  }
  std::size_t hot = slots.size();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (alpha.entries[i] == 0) continue;
    if (alpha.entries[i] != 1 || hot != slots.size()) return 0;
    hot = i;
  }
  if (hot == slots.size()) return 0;
  const auto [k, l] = slots[hot];
  return binomial(n + 1, k + 1) * binomial(m + 1, l + 1);
}

MultiSeries euler_chow_product_formula(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t order) {
  if (p > n + m) throw DomainError("need p <= n + m");
  const auto slots = product_slots(p, n, m);
  std::vector<InverseFactor> factors;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    MultiExponent e(slots.size(), 0);
    e[i] = 1;
    const auto [k, l] = slots[i];
    const Integer mult = binomial(n + 1, k + 1) * binomial(m + 1, l + 1);
    factors.push_back(InverseFactor{std::move(e), mult.get_ui()});
  }
  return expand_inverse_product(factors, slots.size(), order);
}

MultiSeries euler_chow_product_recursive(std::uint32_t p, std::uint32_t n, std::uint32_t m, std::uint32_t order) {
  if (p > n + m) throw DomainError("need p <= n + m");
  RecursiveChow chow;
  return product_recursive(p, n, m, order, chow);
}

CongruenceReport chow_congruence_targets(const ChowIndex& idx, std::uint64_t q, std::uint32_t m) {
  check_index(idx.p, idx.n);
  const auto pp = PrimePower::factor(q);
  if (m < 1) throw DomainError("need m >= 1");
  const Integer qi(static_cast<unsigned long>(q));
  const Integer expected_qm1 = chow_invariant_closed(idx);

  if (idx.d >= 2) {
    CongruenceReport r;
    r.q = qi;
    r.expected_mod_q = 1;
    r.expected_mod_qm1 = residue(expected_qm1, qi - 1);
    r.status = "untestable at desk scale";
    return r;
  }

  Integer actual = 1;
  std::string source = "zero cycle";
  if (idx.d == 1) {
    source = "gaussian binomial";
    actual = gaussian_binomial(idx.n + 1, idx.p + 1, power(qi, m));
    if (m == 1 && pp.exponent == 1 && q <= 7) {
      try {
        actual = grassmannian_count_brute(idx.p + 1, idx.n + 1, static_cast<std::uint32_t>(q),
                                          brute_force_budget_from_env());
        source = "brute force";
      } catch (const BudgetExceeded&) {
      }
    }
  }
  auto r = congruence_check(actual, 1, expected_qm1, qi);
  r.count_source = source;
  return r;
}

}  // namespace cyclemotive
