#include <doctest.h>

#include <filesystem>

#include "cyclemotive/chow.hpp"
#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/json_io.hpp"
#include "cyclemotive/motive.hpp"
#include "cyclemotive/toric.hpp"
#include "oracles.hpp"

using namespace cyclemotive;

namespace {

const std::filesystem::path kData = CYCLEMOTIVE_TEST_DATA;

Fan load(const std::string& name) { return io::fan_from_json(io::read_json_file(kData / name)); }

const Poly2 uv = Poly2::uv();

}  // namespace

TEST_CASE("census of fixture fans") {
  using C = std::vector<std::uint64_t>;
  CHECK(fan_validate(load("p1.fan.json")) == C{1, 2});
  CHECK(fan_validate(load("p2.fan.json")) == C{1, 3, 3});
  CHECK(fan_validate(load("p3.fan.json")) == C{1, 4, 6, 4});
  CHECK(fan_validate(load("p1xp1.fan.json")) == C{1, 4, 4});
  CHECK(fan_validate(load("hirzebruch1.fan.json")) == C{1, 4, 4});
  CHECK(fan_validate(load("a2.fan.json")) == C{1, 2, 1});
}

TEST_CASE("built-in fans agree with the fixture files") {
  CHECK(fan_validate(fans::projective_space(2)) == fan_validate(load("p2.fan.json")));
  CHECK(fan_validate(fans::projective_space(3)) == fan_validate(load("p3.fan.json")));
  CHECK(fan_validate(fans::hirzebruch(1)) == fan_validate(load("hirzebruch1.fan.json")));
  CHECK(fan_validate(fans::affine_space(2)) == fan_validate(load("a2.fan.json")));
  CHECK(fan_validate(product_fan(fans::projective_space(1), fans::projective_space(1))) ==
        fan_validate(load("p1xp1.fan.json")));
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto census = fan_validate(fans::projective_space(n));
    for (std::uint32_t k = 0; k <= n; ++k) CHECK(census[k] == oracle::pascal(n + 1, k));
  }
}

TEST_CASE("fan validation errors") {
  CHECK_THROWS_AS(fan_validate(load("bad-nonprimitive.fan.json")), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{0, {}, {}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{0, 0}}, {}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{1, 0, 0}}, {}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{1, 0}, {0, 1}}, {{}}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{1, 0}, {0, 1}}, {{1, 0}}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{1, 0}, {0, 1}}, {{0, 2}}}), FanError);
  CHECK_THROWS_AS(fan_validate(Fan{2, {{1, 0}, {0, 1}}, {{0}, {0}}}), FanError);
  CHECK_THROWS_AS(io::read_json_file(kData / "bad-syntax.fan.json"), io::ParseError);
}

TEST_CASE("toric lambda") {
  CHECK(toric_lambda(load("p2.fan.json")) == 3);
  CHECK(toric_lambda(load("hirzebruch1.fan.json")) == 4);
  CHECK(toric_lambda(load("a2.fan.json")) == 1);
}

TEST_CASE("toric E-polynomials") {
  CHECK(toric_E_poly(load("p2.fan.json")) == 1 + uv + pow(uv, 2));
  CHECK(toric_E_poly(load("a2.fan.json")) == pow(uv, 2));
  CHECK(toric_E_poly(load("p1xp1.fan.json")) == pow(1 + uv, 2));
  CHECK(toric_count_poly(load("p2.fan.json")).to_string() == "1+L+L^2");
  for (const char* name : {"p1.fan.json", "p2.fan.json", "p3.fan.json", "p1xp1.fan.json", "hirzebruch1.fan.json",
                           "a2.fan.json"}) {
    const Fan f = load(name);
    CHECK(specialize(toric_E_poly(f), 1, 1) == toric_lambda(f));
    CHECK(lpoly_to_diagonal(toric_count_poly(f)) == toric_E_poly(f));
  }
}

TEST_CASE("E-polynomial of a product fan is the product") {
  const Fan p1 = load("p1.fan.json"), p2 = load("p2.fan.json");
  CHECK(toric_E_poly(product_fan(p1, p1)) == toric_E_poly(p1) * toric_E_poly(p1));
  CHECK(toric_E_poly(product_fan(p1, p2)) == toric_E_poly(p1) * toric_E_poly(p2));
  CHECK(toric_E_poly(product_fan(p2, fans::affine_space(1))) == toric_E_poly(p2) * uv);
}

TEST_CASE("invariant subvarieties") {
  const Fan p2 = load("p2.fan.json");
  CHECK(invariant_subvarieties(p2, 0).size() == 3);
  CHECK(invariant_subvarieties(p2, 1).size() == 3);
  const auto top = invariant_subvarieties(load("a2.fan.json"), 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0].cone.empty());
  CHECK(top[0].dimension == 2);
  CHECK(invariant_subvarieties(p2, 1)[0] == OrbitClosure{{0}, 1});
  CHECK_THROWS_AS(invariant_subvarieties(p2, 3), DomainError);

  for (const char* name : {"p1.fan.json", "p3.fan.json", "p1xp1.fan.json", "hirzebruch1.fan.json", "a2.fan.json"}) {
    const Fan f = load(name);
    const auto census = fan_validate(f);
    for (std::uint32_t p = 0; p <= f.dim; ++p) CHECK(invariant_subvarieties(f, p).size() == census[f.dim - p]);
  }
}

TEST_CASE("Euler series examples") {
  const Fan p2 = load("p2.fan.json");
  const auto s = euler_series(p2, 0, single_variable_grading(3), 3);
  CHECK(s.to_string() == "1+3*t+6*t^2+10*t^3");

  const Fan p1xp1 = load("p1xp1.fan.json");
  const auto g = io::grading_from_json(io::read_json_file(kData / "p1xp1-bidegree.grading.json"));
  const auto b = euler_series(p1xp1, 1, g, 2);
  CHECK(b == expand_inverse_product({{{1, 0}, 2}, {{0, 1}, 2}}, 2, 2));
  CHECK(b.coefficient({1, 1}) == 4);

  const auto p1 = euler_series(load("p1.fan.json"), 0, single_variable_grading(2), 9).univariate_coefficients();
  for (std::uint32_t d = 0; d <= 9; ++d) CHECK(p1[d] == d + 1);

  const auto free = euler_series(p2, 1, std::nullopt, 2);
  CHECK(free.arity() == 3);
  CHECK(free == euler_series(p2, 1, free_grading(3), 2));

  CHECK_THROWS_AS(euler_series(p2, 1, Grading{1, {{1}, {0}, {1}}}, 2), DomainError);
  CHECK_THROWS_AS(euler_series(p2, 1, Grading{1, {{1}}}, 2), DomainError);
}

TEST_CASE("Euler series of projective space fans match the Chow series") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const Fan f = fans::projective_space(n);
    for (std::uint32_t p = 0; p <= n; ++p) {
      const auto count = invariant_subvarieties(f, p).size();
      CHECK(euler_series(f, p, single_variable_grading(count), 6) == chow_series(p, n, 6));
    }
  }
}

TEST_CASE("toric point counts") {
  CHECK(toric_count(load("p2.fan.json"), 2, 1) == 7);
  CHECK(toric_count(load("a2.fan.json"), 3, 1) == 9);
  CHECK(toric_count(load("p1xp1.fan.json"), 2, 1) == 9);
  for (const char* name : {"p1.fan.json", "p2.fan.json", "p3.fan.json", "p1xp1.fan.json", "hirzebruch1.fan.json",
                           "a2.fan.json"}) {
    const Fan f = load(name);
    for (int q : {2, 3, 4, 5}) {
      CHECK(toric_count(f, q, 1) == eval_count_poly(MotiveExpr::toric_fan(f)).evaluate(q));
      CHECK(toric_count(f, q, 2) == toric_count(f, q * q, 1));
    }
  }
  for (std::uint32_t n = 1; n <= 3; ++n)
    for (std::uint32_t q : {2u, 3u}) CHECK(toric_count(fans::projective_space(n), q, 1) == projective_space_count_brute(n, q));
}

TEST_CASE("integer rank") {
  CHECK(integer_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(integer_rank({{1, 1, 1}, {1, -1, 0}, {2, 0, 1}}) == 2);
  CHECK(integer_rank({}) == 0);
}
