#include "cyclemotive/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclemotive {

namespace {

// Renders the coefficient-and-monomial body of one term, sign excluded.
std::string render_term(const Integer& abs_coeff, const std::string& monomial) {
  if (monomial.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return monomial;
  return abs_coeff.get_str() + monomial;
}

std::string render_power(const char* var, std::int64_t e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

template <typename Range, typename Render>
std::string render_sum(const Range& terms, Render render_monomial) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms) {
    const bool neg = sgn(c) < 0;
    if (neg) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    out += render_term(abs(c), render_monomial(key));
  }
  return out;
}

}  // namespace

Poly2::Poly2(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly2 Poly2::term(std::uint32_t u_exp, std::uint32_t v_exp, const Integer& c) {
  Poly2 p;
  p.add_term(Monomial{u_exp, v_exp}, c);
  return p;
}

Integer Poly2::coefficient(std::uint32_t u_exp, std::uint32_t v_exp) const {
  auto it = terms_.find(Monomial{u_exp, v_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Poly2::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Poly2::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly2& Poly2::operator+=(const Poly2& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& other) {
  *this = *this * other;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.u + mb.u, ma.v + mb.v}, ca * cb);
    }
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string Poly2::to_string() const {
  return render_sum(terms_, [](const Monomial& m) {
    std::string s;
    if (m.u > 0) s += render_power("u", m.u);
    if (m.v > 0) {
      if (m.u > 0 && !(m.u == 1 && m.v == 1)) s += '*';
      s += render_power("v", m.v);
    }
    return s;
  });
}

Poly2 pow(const Poly2& base, std::uint32_t exp) {
  Poly2 result(1);
  Poly2 b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Poly2 parse_poly2(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  Poly2 out;
  std::size_t i = 0;
  auto read_uint = [&](const char* what) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument(std::string("expected ") + what + " at offset " + std::to_string(start));
    return s.substr(start, i - start);
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;

    Integer coeff = 1;
    bool have_factor = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = Integer(read_uint("coefficient"));
      have_factor = true;
    }
    Monomial m;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        if (!have_factor) throw std::invalid_argument("dangling '*' at offset " + std::to_string(i));
        ++i;
        continue;
      }
      char var = s[i];
      if (var != 'u' && var != 'v') {
        throw std::invalid_argument(std::string("unexpected character '") + var + "'");
      }
      ++i;
      std::uint32_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = static_cast<std::uint32_t>(std::stoul(read_uint("exponent")));
      }
      (var == 'u' ? m.u : m.v) += e;
      have_factor = true;
    }
    if (!have_factor) throw std::invalid_argument("empty term");
    out.add_term(m, sign * coeff);
  }
  return out;
}

Laurent1::Laurent1(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

bool Laurent1::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer Laurent1::coefficient(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Laurent1::add_term(std::int64_t e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Laurent1& Laurent1::operator+=(const Laurent1& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
  Laurent1 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

Integer Laurent1::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string Laurent1::to_string() const {
  return render_sum(terms_, [](std::int64_t e) { return e == 0 ? std::string() : render_power("u", e); });
}

LPoly::LPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LPoly::LPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void LPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

LPoly& LPoly::operator+=(const LPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LPoly(std::move(out));
}

Integer LPoly::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string LPoly::to_string() const {
  std::map<std::size_t, Integer> sparse;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) sparse.emplace(i, coeffs_[i]);
  }
  return render_sum(sparse, [](std::size_t e) {
    return e == 0 ? std::string() : render_power("L", static_cast<std::int64_t>(e));
  });
}

LPoly pow(const LPoly& base, std::uint32_t exp) {
  LPoly result(1);
  for (std::uint32_t i = 0; i < exp; ++i) result = result * base;
  return result;
}

Laurent1 quotient_uv_minus1(const Poly2& a) {
  Laurent1 out;
  for (const auto& [m, c] : a.terms()) {
    out.add_term(static_cast<std::int64_t>(m.u) - static_cast<std::int64_t>(m.v), c);
  }
  return out;
}

Poly2 quotient_uv(const Poly2& a) {
  Poly2 out;
  for (const auto& [m, c] : a.terms()) {
    if (m.u == 0 || m.v == 0) out.add_term(m, c);
  }
  return out;
}

Integer specialize(const Poly2& a, const Integer& u0, const Integer& v0) {
  Integer s = 0;
  for (const auto& [m, c] : a.terms()) s += c * power(u0, m.u) * power(v0, m.v);
  return s;
}

std::map<std::int64_t, Integer> antidiagonal_sums(const Poly2& a) {
  std::map<std::int64_t, Integer> sums;
  for (const auto& [m, c] : a.terms()) {
    sums[static_cast<std::int64_t>(m.u) - static_cast<std::int64_t>(m.v)] += c;
  }
  std::erase_if(sums, [](const auto& kv) { return kv.second == 0; });
  return sums;
}

LPoly diagonal_to_lpoly(const Poly2& a) {
  std::vector<Integer> coeffs;
  for (const auto& [m, c] : a.terms()) {
    if (m.u != m.v) throw DomainError("polynomial has off-diagonal monomial; not a polynomial in uv");
    if (coeffs.size() <= m.u) coeffs.resize(m.u + 1);
    coeffs[m.u] = c;
  }
  return LPoly(std::move(coeffs));
}

Poly2 lpoly_to_diagonal(const LPoly& a) {
  Poly2 out;
  const auto& cs = a.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.add_term(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)}, cs[i]);
  }
  return out;
}

}  // namespace cyclemotive
