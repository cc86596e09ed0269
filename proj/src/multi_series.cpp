#include "cyclemotive/multi_series.hpp"

#include <numeric>

#include "cyclemotive/kernels.hpp"

namespace cyclemotive {

std::uint32_t total_degree(const MultiExponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GradedOrder::operator()(const MultiExponent& a, const MultiExponent& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

MultiSeries::MultiSeries(std::size_t arity, std::uint32_t order) : arity_(arity), order_(order) {}

MultiSeries MultiSeries::one(std::size_t arity, std::uint32_t order) {
  MultiSeries s(arity, order);
  s.add_term(MultiExponent(arity, 0), 1);
  return s;
}

void MultiSeries::check_shape(const MultiExponent& e) const {
  if (e.size() != arity_) throw DomainError("multi-exponent length does not match series arity");
}

Integer MultiSeries::coefficient(const MultiExponent& e) const {
  check_shape(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultiSeries::add_term(const MultiExponent& e, const Integer& c) {
  check_shape(e);
  if (c == 0 || total_degree(e) > order_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
  if (other.arity_ != arity_) throw DomainError("series arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.arity_ != b.arity_) throw DomainError("series arity mismatch");
  MultiSeries out(a.arity_, std::min(a.order_, b.order_));
  kernels::SeriesTermList ta(a.terms_.begin(), a.terms_.end());
  kernels::SeriesTermList tb(b.terms_.begin(), b.terms_.end());
  out.terms_ = kernels::truncated_product_parallel(ta, tb, out.order_);
  return out;
}

MultiSeries MultiSeries::embed(const std::vector<std::size_t>& slot_map, std::size_t new_arity) const {
  if (slot_map.size() != arity_) throw DomainError("embed: slot map length does not match arity");
  for (auto s : slot_map) {
    if (s >= new_arity) throw DomainError("embed: slot out of range");
  }
  MultiSeries out(new_arity, order_);
  for (const auto& [e, c] : terms_) {
    MultiExponent mapped(new_arity, 0);
    for (std::size_t i = 0; i < arity_; ++i) mapped[slot_map[i]] += e[i];
    out.add_term(mapped, c);
  }
  return out;
}

std::vector<Integer> MultiSeries::univariate_coefficients() const {
  if (arity_ != 1) throw DomainError("univariate_coefficients: series has arity " + std::to_string(arity_));
  std::vector<Integer> out(order_ + 1);
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += arity_ == 1 ? std::string("t") : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Integer mag = abs(c);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

MultiSeries expand_inverse_product(const std::vector<InverseFactor>& factors, std::size_t arity,
                                   std::uint32_t order) {
  for (const auto& f : factors) {
    if (f.exponent.size() != arity) throw DomainError("inverse product: factor arity mismatch");
    if (total_degree(f.exponent) == 0) throw DomainError("inverse product: zero exponent diverges");
    if (f.multiplicity == 0) throw DomainError("inverse product: multiplicity must be positive");
  }

  MultiSeries s = MultiSeries::one(arity, order);
  // Dividing by (1 - x^m) is f[a] += f[a - m]. Walking keys in graded order
  // and pushing each final value forward to a + m keeps that in place, since
  // a + m always sorts after a.
  MultiSeries::Terms terms = s.terms();
  for (const auto& f : factors) {
    const auto step = total_degree(f.exponent);
    for (std::uint64_t rep = 0; rep < f.multiplicity; ++rep) {
      for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (total_degree(it->first) + step > order) continue;
        MultiExponent next = it->first;
        for (std::size_t i = 0; i < arity; ++i) next[i] += f.exponent[i];
        terms[next] += it->second;
      }
    }
  }
  MultiSeries out(arity, order);
  for (const auto& [e, c] : terms) out.add_term(e, c);
  return out;
}

}  // namespace cyclemotive
