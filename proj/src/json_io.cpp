#include "cyclemotive/json_io.hpp"

#include <fstream>
#include <limits>

namespace cyclemotive::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::uint32_t as_uint(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint32_t>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("not an integer: " + j.get<std::string>());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Fan fan_from_json(const json& j) {
  Fan fan;
  fan.dim = as_uint(require(j, "dim"), "dim");
  for (const auto& r : as_array(require(j, "rays"), "rays")) {
    std::vector<std::int64_t> ray;
    for (const auto& x : as_array(r, "ray")) {
      if (!x.is_number_integer()) throw ParseError("ray entries must be integers");
      ray.push_back(x.get<std::int64_t>());
    }
    fan.rays.push_back(std::move(ray));
  }
  for (const auto& c : as_array(require(j, "cones"), "cones")) {
    std::vector<std::size_t> cone;
    for (const auto& x : as_array(c, "cone")) cone.push_back(as_uint(x, "ray index"));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

json fan_to_json(const Fan& fan) {
  return json{{"dim", fan.dim}, {"rays", fan.rays}, {"cones", fan.cones}};
}

Grading grading_from_json(const json& j) {
  Grading g;
  g.arity = as_uint(require(j, "arity"), "arity");
  for (const auto& e : as_array(require(j, "exponents"), "exponents")) {
    MultiExponent ex;
    for (const auto& x : as_array(e, "exponent")) ex.push_back(as_uint(x, "exponent entry"));
    if (ex.size() != g.arity) throw ParseError("grading exponent length differs from arity");
    g.exponents.push_back(std::move(ex));
  }
  return g;
}

Poly2 poly2_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_poly2(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad polynomial: ") + e.what());
    }
  }
  Poly2 p;
  for (const auto& t : as_array(j, "polynomial terms")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("polynomial term must be [p, q, coeff]");
    p.add_term(Monomial{as_uint(t[0], "u exponent"), as_uint(t[1], "v exponent")}, integer_from_json(t[2]));
  }
  return p;
}

json poly2_to_json(const Poly2& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(json::array({m.u, m.v, integer_to_json(c)}));
  return terms;
}

MotiveExpr expr_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("expression node must be an object");
  if (j.contains("op")) {
    if (!j["op"].is_string()) throw ParseError("op must be a string");
    const auto op = j["op"].get<std::string>();
    std::vector<MotiveExpr> args;
    for (const auto& a : as_array(require(j, "args"), "args")) args.push_back(expr_from_json(a, base_dir));
    if (op == "cone") {
      if (args.size() != 1) throw ParseError("cone takes exactly one argument");
      return MotiveExpr::cone(args[0]);
    }
    if (op == "difference") {
      if (args.size() != 2) throw ParseError("difference takes exactly two arguments");
      return MotiveExpr::difference(args[0], args[1]);
    }
    if (op == "disjoint_union" || op == "product") {
      if (args.size() < 2) throw ParseError(op + " takes at least two arguments");
      MotiveExpr acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) {
        acc = op == "product" ? MotiveExpr::product(acc, args[i]) : MotiveExpr::disjoint_union(acc, args[i]);
      }
      return acc;
    }
    throw Unsupported("unknown op '" + op + "'");
  }

  const auto& leaf_name = require(j, "leaf");
  if (!leaf_name.is_string()) throw ParseError("leaf must be a string");
  const auto name = leaf_name.get<std::string>();
  if (name == "point") return MotiveExpr::point();
  if (name == "affine_space") return MotiveExpr::affine_space(as_uint(require(j, "n"), "n"));
  if (name == "torus") return MotiveExpr::torus(j.contains("n") ? as_uint(j["n"], "n") : 1);
  if (name == "proj_space") return MotiveExpr::proj_space(as_uint(require(j, "n"), "n"));
  if (name == "grassmannian") {
    return MotiveExpr::grassmannian(as_uint(require(j, "k"), "k"), as_uint(require(j, "n"), "n"));
  }
  if (name == "cellular") {
    std::vector<std::uint32_t> dims;
    for (const auto& d : as_array(require(j, "dims"), "dims")) dims.push_back(as_uint(d, "cell dimension"));
    return MotiveExpr::cellular(std::move(dims));
  }
  if (name == "toric_fan") {
    if (j.contains("fan")) return MotiveExpr::toric_fan(fan_from_json(j["fan"]));
    const auto& file = require(j, "fan_file");
    if (!file.is_string()) throw ParseError("fan_file must be a string");
    std::filesystem::path path = file.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    return MotiveExpr::toric_fan(fan_from_json(read_json_file(path)));
  }
  if (name == "elliptic") return MotiveExpr::elliptic_curve();
  if (name == "custom") {
    const auto& countable = require(j, "countable");
    if (!countable.is_boolean()) throw ParseError("countable must be a boolean");
    std::string label = "custom";
    if (j.contains("name") && j["name"].is_string()) label = j["name"].get<std::string>();
    return MotiveExpr::smooth_projective(label, poly2_from_json(require(j, "e_poly")), countable.get<bool>());
  }
  throw Unsupported("unknown leaf '" + name + "'");
}

json expr_to_json(const MotiveExpr& e) {
  return std::visit(
      Overloaded{
          [](const leaf::Point&) { return json{{"leaf", "point"}}; },
          [](const leaf::AffineSpace& x) { return json{{"leaf", "affine_space"}, {"n", x.n}}; },
          [](const leaf::Torus& x) { return json{{"leaf", "torus"}, {"n", x.n}}; },
          [](const leaf::ProjSpace& x) { return json{{"leaf", "proj_space"}, {"n", x.n}}; },
          [](const leaf::Grassmannian& x) { return json{{"leaf", "grassmannian"}, {"k", x.k}, {"n", x.n}}; },
          [](const leaf::Cellular& x) { return json{{"leaf", "cellular"}, {"dims", x.dims}}; },
          [](const leaf::ToricFan& x) { return json{{"leaf", "toric_fan"}, {"fan", fan_to_json(x.fan)}}; },
          [](const leaf::SmoothProjective& x) {
            if (x.name == "elliptic" && !x.countable && x.e_poly == parse_poly2("1-u-v+uv")) {
              return json{{"leaf", "elliptic"}};
            }
            return json{{"leaf", "custom"}, {"name", x.name}, {"e_poly", poly2_to_json(x.e_poly)},
                        {"countable", x.countable}};
          },
          [](const MotiveExpr::Compound& c) {
            json args = json::array();
            for (const auto& a : c.args) args.push_back(expr_to_json(a));
            const char* op = "";
            switch (c.op) {
              case MotiveExpr::Op::DisjointUnion:
                op = "disjoint_union";
                break;
              case MotiveExpr::Op::Difference:
                op = "difference";
                break;
              case MotiveExpr::Op::Product:
                op = "product";
                break;
              case MotiveExpr::Op::Cone:
                op = "cone";
                break;
            }
            return json{{"op", op}, {"args", args}};
          },
      },
      e.node());
}

json value_to_json(const MeasureValue& value) {
  return std::visit(
      Overloaded{
          [](const Integer& x) { return json{{"type", "integer"}, {"value", integer_to_json(x)}}; },
          [](const Poly2& p) { return json{{"type", "poly2"}, {"text", p.to_string()}, {"terms", poly2_to_json(p)}}; },
          [](const Laurent1& l) {
            json terms = json::array();
            for (const auto& [e, c] : l.terms()) terms.push_back(json::array({e, integer_to_json(c)}));
            return json{{"type", "laurent"}, {"text", l.to_string()}, {"terms", terms}};
          },
          [](const LPoly& l) {
            json coeffs = json::array();
            for (const auto& c : l.coefficients()) coeffs.push_back(integer_to_json(c));
            return json{{"type", "lpoly"}, {"text", l.to_string()}, {"coefficients", coeffs}};
          },
      },
      value);
}

MeasureValue value_from_json(const json& j) {
  const auto& type = require(j, "type");
  if (type == "integer") return integer_from_json(require(j, "value"));
  if (type == "poly2") return poly2_from_json(require(j, "terms"));
  if (type == "laurent") {
    Laurent1 l;
    for (const auto& t : as_array(require(j, "terms"), "terms")) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) throw ParseError("laurent term must be [e, c]");
      l.add_term(t[0].get<std::int64_t>(), integer_from_json(t[1]));
    }
    return l;
  }
  if (type == "lpoly") {
    std::vector<Integer> coeffs;
    for (const auto& c : as_array(require(j, "coefficients"), "coefficients")) coeffs.push_back(integer_from_json(c));
    return LPoly(std::move(coeffs));
  }
  throw ParseError("unknown value type " + type.dump());
}

json series_to_json(const MultiSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, integer_to_json(c)}));
  return json{{"arity", s.arity()}, {"order", s.order()}, {"terms", terms}, {"text", s.to_string()}};
}

MultiSeries series_from_json(const json& j) {
  MultiSeries s(as_uint(require(j, "arity"), "arity"), as_uint(require(j, "order"), "order"));
  for (const auto& t : as_array(require(j, "terms"), "terms")) {
    if (!t.is_array() || t.size() != 2) throw ParseError("series term must be [exponent, coeff]");
    MultiExponent e;
    for (const auto& x : as_array(t[0], "exponent")) e.push_back(as_uint(x, "exponent entry"));
    if (e.size() != s.arity()) throw ParseError("series exponent has wrong arity");
    s.add_term(e, integer_from_json(t[1]));
  }
  return s;
}

json congruence_to_json(const CongruenceReport& r) {
  json out{{"q", integer_to_json(r.q)},
           {"expected_mod_q", integer_to_json(r.expected_mod_q)},
           {"expected_mod_q_minus_1", integer_to_json(r.expected_mod_qm1)},
           {"status", r.status}};
  if (r.actual) {
    out["actual"] = integer_to_json(*r.actual);
    out["residue_mod_q"] = integer_to_json(residue(*r.actual, r.q));
    out["residue_mod_q_minus_1"] = integer_to_json(residue(*r.actual, r.q - 1));
  }
  if (r.pass_mod_q) out["pass_mod_q"] = *r.pass_mod_q;
  if (r.pass_mod_qm1) out["pass_mod_q_minus_1"] = *r.pass_mod_qm1;
  if (!r.count_source.empty()) out["count_source"] = r.count_source;
  return out;
}

json hodge_report_to_json(const HodgeReport& r) {
  json axis = json::array();
  for (const auto& m : r.offending_axis) axis.push_back(Poly2::term(m.u, m.v, 1).to_string());
  return json{{"antidiagonal_ok", r.antidiagonal_ok},
              {"diagonal_ok", r.diagonal_ok},
              {"axis_ok", r.axis_ok},
              {"diagonal_sum", integer_to_json(r.diagonal_sum)},
              {"offending_antidiagonals", r.offending_antidiagonals},
              {"offending_axis", axis}};
}

}  // namespace cyclemotive::io
