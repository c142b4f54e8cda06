#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avoid321/error.hpp"

namespace avoid321 {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient overflow in multiplication");
  return r;
}

inline int checked_exp_add(int a, int b) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("exponent overflow");
  return r;
}

inline int checked_exp_mul(int a, int b) {
  int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("exponent overflow");
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace detail

/// One of t_1, t_2, ..., x, y, z. The natural order is t_1 < t_2 < ... < x < y < z.
class Variable {
 public:
  static Variable t(int i) {
    if (i < 1 || static_cast<std::uint32_t>(i) >= kX) throw InvalidArgument("t-variable index must be >= 1");
    return Variable(static_cast<std::uint32_t>(i));
  }
  static constexpr Variable x() { return Variable(kX); }
  static constexpr Variable y() { return Variable(kY); }
  static constexpr Variable z() { return Variable(kZ); }

  constexpr bool is_t() const { return code_ < kX; }
  constexpr int t_index() const { return is_t() ? static_cast<int>(code_) : 0; }

  std::string name() const {
    switch (code_) {
      case kX: return "x";
      case kY: return "y";
      case kZ: return "z";
      default: return "t" + std::to_string(code_);
    }
  }

  static std::optional<Variable> parse(std::string_view s) {
    if (s == "x") return x();
    if (s == "y") return y();
    if (s == "z") return z();
    if (s.size() >= 2 && s[0] == 't') {
      int i = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9' || i > 100000000) return std::nullopt;
        i = i * 10 + (c - '0');
      }
      if (i >= 1) return t(i);
    }
    return std::nullopt;
  }

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;

 private:
  static constexpr std::uint32_t kX = 0xFFFFFFF0u;
  static constexpr std::uint32_t kY = kX + 1;
  static constexpr std::uint32_t kZ = kX + 2;

  explicit constexpr Variable(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

/// Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int e = 1) {
    if (e != 0) {
      factors_.emplace_back(v, e);
      degree_ = e;
    }
  }

  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second = detail::checked_exp_add(m.factors_.back().second, e);
      } else {
        m.factors_.emplace_back(v, e);
      }
    }
    std::erase_if(m.factors_, [](const Factor& f) { return f.second == 0; });
    m.recompute_degree();
    return m;
  }

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }

  int exponent(Variable v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Variable w) { return f.first < w; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  bool nonnegative() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
  }

  Monomial without(Variable v) const {
    Monomial m;
    for (const auto& f : factors_)
      if (f.first != v) m.factors_.push_back(f);
    m.recompute_degree();
    return m;
  }

  Monomial pow(int e) const {
    Monomial m;
    if (e == 0) return m;
    for (const auto& [v, k] : factors_) m.factors_.emplace_back(v, detail::checked_exp_mul(k, e));
    m.recompute_degree();
    return m;
  }

  /// Componentwise exponent comparison: this divides `other` in the polynomial sense.
  bool divides(const Monomial& other) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        m.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        m.factors_.push_back(*j++);
      } else {
        const int e = detail::checked_exp_add(i->second, j->second);
        if (e != 0) m.factors_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    m.recompute_degree();
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  void recompute_degree() {
    degree_ = 0;
    for (const auto& f : factors_) degree_ = detail::checked_exp_add(degree_, f.second);
  }

  std::vector<Factor> factors_;
  int degree_ = 0;
};

namespace detail {

/// Lexicographic comparison of dense exponent vectors indexed by variables
/// in the natural order, restricted to variables accepted by `in_scope`.
template <class Scope>
int compare_exponent_vectors(const Monomial& a, const Monomial& b, Scope in_scope) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    while (i < fa.size() && !in_scope(fa[i].first)) ++i;
    while (j < fb.size() && !in_scope(fb[j].first)) ++j;
    if (i == fa.size() && j == fb.size()) return 0;
    int ea = 0;
    int eb = 0;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      ea = fa[i++].second;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      eb = fb[j++].second;
    } else {
      ea = fa[i++].second;
      eb = fb[j++].second;
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
}

}  // namespace detail

/// Rendering order: total degree ascending, then exponent vectors
/// (t_1, t_2, ..., x, y, z) lexicographically ascending.
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return detail::compare_exponent_vectors(a, b, [](Variable) { return true; }) < 0;
  }
};

/// Division order: pure lex with x > y > z > t_1 > t_2 > ...
inline int lex_compare(const Monomial& a, const Monomial& b) {
  for (Variable v : {Variable::x(), Variable::y(), Variable::z()}) {
    const int ea = a.exponent(v);
    const int eb = b.exponent(v);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return detail::compare_exponent_vectors(a, b, [](Variable v) { return v.is_t(); });
}

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// Sparse Laurent polynomial with checked 64-bit integer coefficients.
/// No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using TermMap = std::map<Monomial, Coeff, CanonicalLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeff c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  LaurentPoly(const Monomial& m, Coeff c) {
    if (c != 0) terms_.emplace(m, c);
  }

  static LaurentPoly variable(Variable v, int e = 1) { return LaurentPoly(Monomial(v, e), 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  /// Single term view; the zero polynomial is the constant 0.
  std::optional<std::pair<Monomial, Coeff>> as_term() const {
    if (terms_.empty()) return std::make_pair(Monomial{}, Coeff{0});
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  std::optional<Coeff> as_constant() const {
    auto t = as_term();
    if (!t || !t->first.is_one()) return std::nullopt;
    return t->second;
  }

  bool has_negative_exponents() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return !kv.first.nonnegative(); });
  }

  /// Sum of coefficients, i.e. the value at all variables = 1.
  Coeff coefficient_sum() const {
    Coeff s = 0;
    for (const auto& [m, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  int max_t_index() const {
    int best = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.factors())
        if (v.is_t()) best = std::max(best, v.t_index());
    return best;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, detail::checked_mul(c, -1));
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, detail::checked_mul(ca, cb));
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

namespace detail {

/// Replaces v^e by (coeff * mono)^e in every term for which `matches(v)`.
template <class Match>
LaurentPoly substitute_where(const LaurentPoly& p, Match matches, LaurentPoly::Coeff coeff,
                             const Monomial& mono) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly::Coeff nc = c;
    std::vector<Monomial::Factor> kept;
    Monomial image;
    bool vanished = false;
    for (const auto& [v, e] : m.factors()) {
      if (!matches(v)) {
        kept.emplace_back(v, e);
        continue;
      }
      if (coeff == 0) {
        if (e < 0) throw DomainError("substituting 0 into " + v.name() + "^" + std::to_string(e));
        vanished = true;
        break;
      }
      if (e < 0 && coeff != 1 && coeff != -1) {
        throw DomainError("substituting non-unit " + std::to_string(coeff) + " into " + v.name() +
                          "^" + std::to_string(e));
      }
      nc = checked_mul(nc, checked_pow(coeff, e < 0 ? -e : e));
      image = image * mono.pow(e);
    }
    if (vanished) continue;
    out.add_term(Monomial::from_factors(std::move(kept)) * image, nc);
  }
  return out;
}

}  // namespace detail

/// Substitutes v <- value, where value is a single Laurent term or an integer constant.
inline LaurentPoly substitute(const LaurentPoly& p, Variable v, const LaurentPoly& value) {
  auto term = value.as_term();
  if (!term) throw InvalidArgument("substitution value must be a single monomial or constant");
  return detail::substitute_where(p, [v](Variable w) { return w == v; }, term->second, term->first);
}

inline LaurentPoly substitute(const LaurentPoly& p, Variable v, LaurentPoly::Coeff value) {
  return detail::substitute_where(p, [v](Variable w) { return w == v; }, value, Monomial{});
}

/// Every t_i <- value.
inline LaurentPoly substitute_all_t(const LaurentPoly& p, LaurentPoly::Coeff value) {
  return detail::substitute_where(p, [](Variable w) { return w.is_t(); }, value, Monomial{});
}

namespace detail {

/// Splits p = core * shift where shift is a monomial and core has
/// nonnegative exponents with no monomial factor.
inline std::pair<LaurentPoly, Monomial> split_monomial_content(const LaurentPoly& p) {
  std::map<Variable, int> low;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) low.try_emplace(v, std::numeric_limits<int>::max());
  for (auto& [v, e] : low)
    for (const auto& [m, c] : p.terms()) e = std::min(e, m.exponent(v));
  std::vector<Monomial::Factor> f(low.begin(), low.end());
  Monomial shift = Monomial::from_factors(std::move(f));
  const Monomial unshift = shift.pow(-1);
  LaurentPoly core;
  for (const auto& [m, c] : p.terms()) core.add_term(m * unshift, c);
  return {std::move(core), std::move(shift)};
}

}  // namespace detail

/// Exact quotient num / den in the Laurent ring. Both operands are shifted
/// to content-free polynomials, divided in the lex order x > y > z > t_1 > ...,
/// and shifted back. Any nonzero remainder raises DivisibilityError.
inline LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisibilityError("division by the zero polynomial");
  if (num.is_zero()) return {};
  auto [a, a_shift] = detail::split_monomial_content(num);
  auto [b, b_shift] = detail::split_monomial_content(den);

  std::vector<std::pair<Monomial, LaurentPoly::Coeff>> divisor(b.terms().begin(), b.terms().end());
  const auto lead = *std::max_element(divisor.begin(), divisor.end(), [](const auto& l, const auto& r) {
    return lex_compare(l.first, r.first) < 0;
  });
  const Monomial lead_inverse = lead.first.pow(-1);

  std::map<Monomial, LaurentPoly::Coeff, LexGreater> rem(a.terms().begin(), a.terms().end());
  LaurentPoly quotient;
  while (!rem.empty()) {
    const auto [m, c] = *rem.begin();
    if (!lead.first.divides(m) || c % lead.second != 0) {
      throw DivisibilityError("inexact division: remainder term does not reduce");
    }
    const Monomial qm = m * lead_inverse;
    const LaurentPoly::Coeff qc = c / lead.second;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor) {
      const Monomial key = qm * dm;
      const auto delta = detail::checked_mul(-qc, dc);
      auto [it, inserted] = rem.try_emplace(key, delta);
      if (!inserted) {
        it->second = detail::checked_add(it->second, delta);
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quotient * LaurentPoly(a_shift * b_shift.pow(-1), 1);
}

/// e.g. "z^2 + t1*x*y*z", "1 - y", "0".
inline std::string canonical_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const LaurentPoly::Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (m.is_one() || mag != 1) body = std::to_string(mag);
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += v.name();
      if (e != 1) body += "^" + std::to_string(e);
    }
    out += body;
  }
  return out;
}

namespace detail {

// poly   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := integer | variable ['^' ['-'] integer] | '(' poly ')' ['^' integer]
class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly p = poly();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

  std::int64_t integer() {
    skip();
    if (!at_digit()) fail("expected integer");
    std::int64_t v = 0;
    while (at_digit()) v = checked_add(checked_mul(v, 10), text_[pos_++] - '0');
    return v;
  }

  int exponent() {
    const int sign = accept('-') ? -1 : 1;
    const std::int64_t e = integer();
    if (e > 1000000) fail("exponent too large");
    return static_cast<int>(e) * sign;
  }

  LaurentPoly poly() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    LaurentPoly out;
    bool negate = accept('-');
    if (!negate) accept('+');
    while (true) {
      LaurentPoly t = term();
      if (negate) out -= t;
      else out += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return out;
  }

  LaurentPoly term() {
    LaurentPoly t = factor();
    while (accept('*')) t = t * factor();
    return t;
  }

  LaurentPoly factor() {
    skip();
    if (accept('(')) {
      LaurentPoly inner = poly();
      if (!accept(')')) fail("expected ')'");
      if (!accept('^')) return inner;
      const int e = exponent();
      if (e < 0) fail("negative power of a parenthesized expression");
      LaurentPoly out(1);
      for (int i = 0; i < e; ++i) out = out * inner;
      return out;
    }
    if (at_digit()) return LaurentPoly(integer());
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (pos_ > start && at_digit()))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto var = Variable::parse(name);
    if (!var) fail("unknown variable '" + std::string(name) + "'");
    const int e = accept('^') ? exponent() : 1;
    return LaurentPoly::variable(*var, e);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of canonical_string. Also accepts products of parenthesized
/// sums, e.g. "z^3 + t1*(x^2*y^2*z^2 + x*y*z^3)".
inline LaurentPoly parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

}  // namespace avoid321
