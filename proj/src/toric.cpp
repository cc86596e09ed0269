#include "cyclemotive/toric.hpp"

#include <numeric>
#include <set>
#include <string>

namespace cyclemotive {

std::uint32_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Integer>> m;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  const std::size_t cols = m[0].size();
  std::uint32_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Integer a = m[rank][c];
      const Integer b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<std::int64_t>> cone_rows(const Fan& fan, const std::vector<std::size_t>& cone) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto i : cone) rows.push_back(fan.rays[i]);
  return rows;
}

}  // namespace

std::vector<std::uint64_t> fan_validate(const Fan& fan) {
  if (fan.dim == 0) throw FanError("fan dimension must be at least 1");
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const auto& ray = fan.rays[r];
    if (ray.size() != fan.dim) {
      throw FanError("ray " + std::to_string(r) + " has length " + std::to_string(ray.size()) + ", expected " +
                     std::to_string(fan.dim));
    }
    std::int64_t g = 0;
    for (auto x : ray) g = std::gcd(g, x);
    if (g == 0) throw FanError("ray " + std::to_string(r) + " is zero");
    if (g != 1) throw FanError("ray " + std::to_string(r) + " is not primitive");
  }

  std::vector<std::uint64_t> census(fan.dim + 1, 0);
  census[0] = 1;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    const auto where = "cone " + std::to_string(c);
    if (cone.empty()) throw FanError(where + " is empty; the zero cone is implicit");
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (cone[i] >= fan.rays.size()) throw FanError(where + " has ray index out of range");
      if (i > 0 && cone[i] <= cone[i - 1]) throw FanError(where + " is not strictly increasing");
    }
    if (!seen.insert(cone).second) throw FanError(where + " duplicates an earlier cone");
    ++census[integer_rank(cone_rows(fan, cone))];
  }
  return census;
}

std::uint64_t toric_lambda(const Fan& fan) { return fan_validate(fan).back(); }

Poly2 toric_E_poly(const Fan& fan) {
  const auto census = fan_validate(fan);
  const Poly2 torus = Poly2::uv() - Poly2(1);
  Poly2 out;
  for (std::uint32_t k = 0; k <= fan.dim; ++k) {
    out += Poly2(Integer(static_cast<unsigned long>(census[k]))) * pow(torus, fan.dim - k);
  }
  return out;
}

LPoly toric_count_poly(const Fan& fan) {
  const auto census = fan_validate(fan);
  const LPoly torus = LPoly::L() - LPoly(1);
  LPoly out;
  for (std::uint32_t k = 0; k <= fan.dim; ++k) {
    out += LPoly(Integer(static_cast<unsigned long>(census[k]))) * pow(torus, fan.dim - k);
  }
  return out;
}

std::vector<OrbitClosure> invariant_subvarieties(const Fan& fan, std::uint32_t p) {
  fan_validate(fan);
  if (p > fan.dim) throw DomainError("invariant_subvarieties: p exceeds the fan dimension");
  const std::uint32_t cone_dim = fan.dim - p;
  std::vector<OrbitClosure> out;
  if (cone_dim == 0) {
    out.push_back(OrbitClosure{{}, p});
    return out;
  }
  for (const auto& cone : fan.cones) {
    if (integer_rank(cone_rows(fan, cone)) == cone_dim) out.push_back(OrbitClosure{cone, p});
  }
  return out;
}

Grading free_grading(std::size_t count) {
  Grading g{count, {}};
  for (std::size_t i = 0; i < count; ++i) {
    MultiExponent e(count, 0);
    e[i] = 1;
    g.exponents.push_back(std::move(e));
  }
  return g;
}

Grading single_variable_grading(std::size_t count) {
  return Grading{1, std::vector<MultiExponent>(count, MultiExponent{1})};
}

MultiSeries euler_series(const Fan& fan, std::uint32_t p, const std::optional<Grading>& grading,
                         std::uint32_t order) {
  const auto subvarieties = invariant_subvarieties(fan, p);
  const Grading g = grading ? *grading : free_grading(subvarieties.size());
  if (g.exponents.size() != subvarieties.size()) {
    throw DomainError("grading lists " + std::to_string(g.exponents.size()) + " exponents for " +
                      std::to_string(subvarieties.size()) + " invariant subvarieties");
  }
  std::vector<InverseFactor> factors;
  for (const auto& e : g.exponents) {
    if (e.size() != g.arity) throw DomainError("grading exponent has wrong arity");
    if (total_degree(e) == 0) throw DomainError("grading assigns the zero exponent");
    factors.push_back(InverseFactor{e, 1});
  }
  return expand_inverse_product(factors, g.arity, order);
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan out;
  out.dim = a.dim + b.dim;
  for (const auto& r : a.rays) {
    auto v = r;
    v.resize(out.dim, 0);
    out.rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays) {
    std::vector<std::int64_t> v(a.dim, 0);
    v.insert(v.end(), r.begin(), r.end());
    out.rays.push_back(std::move(v));
  }
  const std::size_t offset = a.rays.size();
  std::vector<std::vector<std::size_t>> ca{{}};
  ca.insert(ca.end(), a.cones.begin(), a.cones.end());
  std::vector<std::vector<std::size_t>> cb{{}};
  cb.insert(cb.end(), b.cones.begin(), b.cones.end());
  for (const auto& x : ca) {
    for (const auto& y : cb) {
      if (x.empty() && y.empty()) continue;
      auto cone = x;
      for (auto i : y) cone.push_back(i + offset);
      out.cones.push_back(std::move(cone));
    }
  }
  return out;
}

namespace fans {

Fan projective_space(std::uint32_t n) {
  if (n == 0) throw DomainError("projective_space fan needs n >= 1");
  Fan f;
  f.dim = n;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  f.rays.emplace_back(n, -1);
  // Every proper nonempty subset of the n + 1 rays, by size then lex.
  for (std::uint32_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> cur(size);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
      f.cones.push_back(cur);
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && cur[i] == n + 1 - size + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++cur[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return f;
}

Fan affine_space(std::uint32_t n) {
  if (n == 0) throw DomainError("affine_space fan needs n >= 1");
  Fan f;
  f.dim = n;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  // All nonempty subsets of the coordinate rays.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> cone;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) cone.push_back(i);
    }
    f.cones.push_back(std::move(cone));
  }
  return f;
}

Fan hirzebruch(std::int64_t a) {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  f.cones = {{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return f;
}

}  // namespace fans

}  // namespace cyclemotive
