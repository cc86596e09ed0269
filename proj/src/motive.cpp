#include "cyclemotive/motive.hpp"

#include <algorithm>
#include <charconv>

#include "cyclemotive/ffcount.hpp"

namespace cyclemotive {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Poly2 uv_power(std::uint32_t n) { return Poly2::term(n, n, 1); }

}  // namespace

MotiveExpr::MotiveExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

MotiveExpr MotiveExpr::point() { return MotiveExpr(leaf::Point{}); }

MotiveExpr MotiveExpr::affine_space(std::uint32_t n) { return MotiveExpr(leaf::AffineSpace{n}); }

MotiveExpr MotiveExpr::torus(std::uint32_t n) {
  if (n < 1) throw DomainError("torus rank must be at least 1");
  return MotiveExpr(leaf::Torus{n});
}

MotiveExpr MotiveExpr::proj_space(std::uint32_t n) { return MotiveExpr(leaf::ProjSpace{n}); }

MotiveExpr MotiveExpr::grassmannian(std::uint32_t k, std::uint32_t n) {
  if (k < 1 || k > n) throw DomainError("grassmannian needs 1 <= k <= n");
  return MotiveExpr(leaf::Grassmannian{k, n});
}

MotiveExpr MotiveExpr::cellular(std::vector<std::uint32_t> dims) {
  if (dims.empty()) throw DomainError("cellular variety needs at least one cell");
  if (!std::is_sorted(dims.begin(), dims.end())) throw DomainError("cell dimensions must be non-decreasing");
  return MotiveExpr(leaf::Cellular{std::move(dims)});
}

MotiveExpr MotiveExpr::toric_fan(Fan fan) {
  fan_validate(fan);
  return MotiveExpr(leaf::ToricFan{std::move(fan)});
}

MotiveExpr MotiveExpr::smooth_projective(std::string name, Poly2 e_poly, bool countable) {
  return MotiveExpr(leaf::SmoothProjective{std::move(name), std::move(e_poly), countable});
}

MotiveExpr MotiveExpr::elliptic_curve() {
  return smooth_projective("elliptic", parse_poly2("1-u-v+uv"), false);
}

MotiveExpr MotiveExpr::disjoint_union(MotiveExpr a, MotiveExpr b) {
  return MotiveExpr(Compound{Op::DisjointUnion, {std::move(a), std::move(b)}});
}

MotiveExpr MotiveExpr::difference(MotiveExpr a, MotiveExpr b) {
  return MotiveExpr(Compound{Op::Difference, {std::move(a), std::move(b)}});
}

MotiveExpr MotiveExpr::product(MotiveExpr a, MotiveExpr b) {
  return MotiveExpr(Compound{Op::Product, {std::move(a), std::move(b)}});
}

MotiveExpr MotiveExpr::cone(MotiveExpr a) { return MotiveExpr(Compound{Op::Cone, {std::move(a)}}); }

namespace {

// Homomorphic image of the class: `leaf_value` maps leaves, `lefschetz` is
// the image of the affine line.
template <typename Value, typename LeafFn>
Value fold(const MotiveExpr& e, const Value& lefschetz, const LeafFn& leaf_value) {
  if (const auto* c = std::get_if<MotiveExpr::Compound>(&e.node())) {
    const auto& a = c->args;
    switch (c->op) {
      case MotiveExpr::Op::DisjointUnion:
        return fold(a[0], lefschetz, leaf_value) + fold(a[1], lefschetz, leaf_value);
      case MotiveExpr::Op::Difference:
        return fold(a[0], lefschetz, leaf_value) - fold(a[1], lefschetz, leaf_value);
      case MotiveExpr::Op::Product:
        return fold(a[0], lefschetz, leaf_value) * fold(a[1], lefschetz, leaf_value);
      case MotiveExpr::Op::Cone:
        return Value(1) + lefschetz * fold(a[0], lefschetz, leaf_value);
    }
  }
  return leaf_value(e.node());
}

}  // namespace

Poly2 eval_E(const MotiveExpr& e) {
  return fold(e, Poly2::uv(), [](const MotiveExpr::Node& node) {
    return std::visit(
        Overloaded{
            [](const leaf::Point&) { return Poly2(1); },
            [](const leaf::AffineSpace& x) { return uv_power(x.n); },
            [](const leaf::Torus& x) { return pow(Poly2::uv() - Poly2(1), x.n); },
            [](const leaf::ProjSpace& x) {
              Poly2 s;
              for (std::uint32_t i = 0; i <= x.n; ++i) s += uv_power(i);
              return s;
            },
            [](const leaf::Grassmannian& x) { return lpoly_to_diagonal(gaussian_binomial_poly(x.n, x.k)); },
            [](const leaf::Cellular& x) {
              Poly2 s;
              for (auto d : x.dims) s += uv_power(d);
              return s;
            },
            [](const leaf::ToricFan& x) { return toric_E_poly(x.fan); },
            [](const leaf::SmoothProjective& x) { return x.e_poly; },
            [](const MotiveExpr::Compound&) -> Poly2 { throw std::logic_error("compound reached leaf evaluation"); },
        },
        node);
  });
}

LPoly eval_count_poly(const MotiveExpr& e) {
  const LPoly L = LPoly::L();
  return fold(e, L, [&L](const MotiveExpr::Node& node) {
    return std::visit(
        Overloaded{
            [](const leaf::Point&) { return LPoly(1); },
            [&](const leaf::AffineSpace& x) { return pow(L, x.n); },
            [&](const leaf::Torus& x) { return pow(L - LPoly(1), x.n); },
            [&](const leaf::ProjSpace& x) {
              LPoly s;
              for (std::uint32_t i = 0; i <= x.n; ++i) s += pow(L, i);
              return s;
            },
            [](const leaf::Grassmannian& x) { return gaussian_binomial_poly(x.n, x.k); },
            [&](const leaf::Cellular& x) {
              LPoly s;
              for (auto d : x.dims) s += pow(L, d);
              return s;
            },
            [](const leaf::ToricFan& x) { return toric_count_poly(x.fan); },
            [](const leaf::SmoothProjective& x) {
              if (!x.countable) throw NotCountable("leaf '" + x.name + "' has no point count in terms of L");
              try {
                return diagonal_to_lpoly(x.e_poly);
              } catch (const DomainError&) {
                throw NotCountable("leaf '" + x.name + "' E-polynomial is not a polynomial in uv");
              }
            },
            [](const MotiveExpr::Compound&) -> LPoly { throw std::logic_error("compound reached leaf evaluation"); },
        },
        node);
  });
}

Measure Measure::of(Kind kind) {
  if (kind == Kind::CountAt) throw DomainError("use Measure::count_at for point counts");
  Measure m;
  m.kind = kind;
  return m;
}

Measure Measure::count_at(std::uint64_t q, std::uint32_t m) {
  PrimePower::factor(q);
  if (m < 1) throw DomainError("count measure needs m >= 1");
  Measure out;
  out.kind = Kind::CountAt;
  out.q = Integer(static_cast<unsigned long>(q));
  out.m = m;
  return out;
}

Measure Measure::parse(std::string_view text) {
  if (text == "e-poly") return of(Kind::EPoly);
  if (text == "euler") return of(Kind::Euler);
  if (text == "h-tilde") return of(Kind::HTildeQuotient);
  if (text == "h-bar") return of(Kind::HBarQuotient);
  if (text == "count-poly") return of(Kind::CountPoly);
  if (text.starts_with("count:")) {
    auto rest = text.substr(6);
    auto comma = rest.find(',');
    auto parse_uint = [&](std::string_view s) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw DomainError("bad count measure '" + std::string(text) + "'");
      }
      return v;
    };
    const auto q = parse_uint(rest.substr(0, comma));
    const auto m = comma == std::string_view::npos ? 1 : parse_uint(rest.substr(comma + 1));
    return count_at(q, static_cast<std::uint32_t>(m));
  }
  throw Unsupported("unknown measure '" + std::string(text) + "'");
}

std::string Measure::name() const {
  switch (kind) {
    case Kind::EPoly:
      return "e-poly";
    case Kind::Euler:
      return "euler";
    case Kind::HTildeQuotient:
      return "h-tilde";
    case Kind::HBarQuotient:
      return "h-bar";
    case Kind::CountPoly:
      return "count-poly";
    case Kind::CountAt:
      return "count:" + q.get_str() + (m == 1 ? "" : "," + std::to_string(m));
  }
  return {};
}

std::string render(const MeasureValue& value) {
  return std::visit(Overloaded{[](const Integer& x) { return x.get_str(); },
                               [](const auto& x) { return x.to_string(); }},
                    value);
}

MeasureValue eval_measure(const MotiveExpr& e, const Measure& m) {
  switch (m.kind) {
    case Measure::Kind::EPoly:
      return eval_E(e);
    case Measure::Kind::Euler:
      return specialize(eval_E(e), 1, 1);
    case Measure::Kind::HTildeQuotient:
      return quotient_uv_minus1(eval_E(e));
    case Measure::Kind::HBarQuotient:
      return quotient_uv(eval_E(e));
    case Measure::Kind::CountPoly:
      return eval_count_poly(e);
    case Measure::Kind::CountAt:
      return eval_count_poly(e).evaluate(power(m.q, m.m));
  }
  throw std::logic_error("unhandled measure kind");
}

HodgeReport hodge_constraints_check(const Poly2& h, const Integer& chi, std::uint32_t fixed_dim_bound) {
  HodgeReport r;
  r.diagonal_sum = 0;
  for (const auto& [i, s] : antidiagonal_sums(h)) {
    if (static_cast<std::uint64_t>(i < 0 ? -i : i) > fixed_dim_bound) r.offending_antidiagonals.push_back(i);
  }
  r.antidiagonal_ok = r.offending_antidiagonals.empty();
  for (const auto& [mono, c] : h.terms()) {
    if (mono.u == mono.v) r.diagonal_sum += c;
    if ((mono.u > 0 && mono.v == 0) || (mono.u == 0 && mono.v > 0)) r.offending_axis.push_back(mono);
  }
  r.diagonal_ok = r.diagonal_sum == chi;
  r.axis_ok = r.offending_axis.empty();
  return r;
}

}  // namespace cyclemotive
