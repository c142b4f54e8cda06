#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avoid321/error.hpp"
#include "avoid321/parallel.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"

// Generating functions over T_n:
//
//   f_n(t, x, y, z) = sum over T_n of t_{Des(p^-1)} x^inv y^ldes z^lind
//
// built either by direct summation or by the insertion recursion
//
//   (x - yz) f_n = t_{n-1} x^n yz f_{n-1}(x, yz/x, 1)
//                + (1 - t_{n-1}) x^n yz f_{n-1}(x, 1, yz/x)
//                + (x - yz) z^n f_{n-1}(x, y, 1)
//                - x y^n z^n f_{n-1}(x, 1, 1).
//
// Univariate enumerators (g_ldes, g_signed, hilbert_closed_form) use y as
// their variable, standing in for q.

namespace avoid321 {

enum class GenFunMethod { kBruteForce, kRecursive };

struct BuildOptions {
  Limits limits{};
  unsigned threads = 1;  ///< 0 = hardware concurrency
};

/// t_{Des(p^-1)} x^inv(p) y^ldes(p) z^lind(p)
inline Monomial weight(const Permutation& p) {
  std::vector<Monomial::Factor> f;
  for (int i : inverse_descent_set(p).members()) f.emplace_back(Variable::t(i), 1);
  f.emplace_back(Variable::x(), inv(p));
  f.emplace_back(Variable::y(), ldes(p));
  f.emplace_back(Variable::z(), lind(p));
  return Monomial::from_factors(std::move(f));
}

inline LaurentPoly f_bruteforce(int n, const BuildOptions& options = {}) {
  return fold_T<LaurentPoly>(
      n, options.threads, [](LaurentPoly& acc, const Permutation& p) { acc.add_term(weight(p), 1); },
      options.limits);
}

namespace detail {

inline LaurentPoly monomial(std::vector<Monomial::Factor> f, LaurentPoly::Coeff c = 1) {
  return LaurentPoly(Monomial::from_factors(std::move(f)), c);
}

/// One step of the insertion recursion: f_{n-1} -> f_n. The Laurent
/// intermediates stay local; the result is asserted to be a polynomial.
inline LaurentPoly recursion_step(const LaurentPoly& prev, int n) {
  const Variable x = Variable::x();
  const Variable y = Variable::y();
  const Variable z = Variable::z();
  const LaurentPoly t = LaurentPoly::variable(Variable::t(n - 1));
  const LaurentPoly one(1);
  const LaurentPoly yz_over_x = monomial({{x, -1}, {y, 1}, {z, 1}});
  const LaurentPoly xn_yz = monomial({{x, n}, {y, 1}, {z, 1}});
  const LaurentPoly divisor = LaurentPoly::variable(x) - monomial({{y, 1}, {z, 1}});

  // Substitutions are applied in an order that makes them simultaneous.
  const LaurentPoly at_yzx_1 = substitute(substitute(prev, z, 1), y, yz_over_x);
  const LaurentPoly at_1_yzx = substitute(substitute(prev, y, 1), z, yz_over_x);
  const LaurentPoly at_y_1 = substitute(prev, z, 1);
  const LaurentPoly at_1_1 = substitute(at_y_1, y, 1);

  LaurentPoly rhs = t * xn_yz * at_yzx_1;
  rhs += (one - t) * xn_yz * at_1_yzx;
  rhs += divisor * LaurentPoly::variable(z, n) * at_y_1;
  rhs -= monomial({{x, 1}, {y, n}, {z, n}}) * at_1_1;

  LaurentPoly fn = divide_exact(rhs, divisor);
  if (fn.has_negative_exponents()) {
    throw MathError("recursion produced negative exponents at n = " + std::to_string(n));
  }
  return fn;
}

}  // namespace detail

/// f_1 .. f_n in one ascending pass.
inline std::vector<LaurentPoly> f_recursive_sequence(int n, const Limits& limits = {}) {
  check_size(n, limits);
  std::vector<LaurentPoly> out;
  out.reserve(n);
  out.push_back(LaurentPoly::variable(Variable::z()));
  for (int k = 2; k <= n; ++k) out.push_back(detail::recursion_step(out.back(), k));
  return out;
}

inline LaurentPoly f_recursive(int n, const Limits& limits = {}) { return f_recursive_sequence(n, limits).back(); }

inline LaurentPoly f(int n, GenFunMethod method, const BuildOptions& options = {}) {
  return method == GenFunMethod::kBruteForce ? f_bruteforce(n, options) : f_recursive(n, options.limits);
}

/// t_{n-1} <- 1, so that only Des(p^-1) restricted to [n-2] is recorded.
inline LaurentPoly specialize_hat(const LaurentPoly& fn, int n) {
  if (n < 2) return fn;
  return substitute(fn, Variable::t(n - 1), 1);
}

namespace detail {

/// Dense accumulator indexed by exponent of y.
struct YCoefficients {
  std::vector<LaurentPoly::Coeff> c;
  void add(int e, LaurentPoly::Coeff v) {
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, 0);
    c[e] = checked_add(c[e], v);
  }
  YCoefficients& operator+=(const YCoefficients& o) {
    for (std::size_t e = 0; e < o.c.size(); ++e) add(static_cast<int>(e), o.c[e]);
    return *this;
  }
  LaurentPoly poly() const {
    LaurentPoly p;
    for (std::size_t e = 0; e < c.size(); ++e) p.add_term(Monomial(Variable::y(), static_cast<int>(e)), c[e]);
    return p;
  }
};

/// f_k(1, x, y, 1) for k = 1..n with x = +1 or -1, via the recursion
/// specialized to t = 1, z = 1:
///   (x - y) F_k(y) = x^k y F_{k-1}(y/x) + (x - y) F_{k-1}(y) - x y^k F_{k-1}(1).
inline std::vector<LaurentPoly> unit_x_sequence(int n, int x_value) {
  if (x_value != 1 && x_value != -1) throw InvalidArgument("x must be +1 or -1");
  const Variable y = Variable::y();
  const LaurentPoly xv(x_value);
  const LaurentPoly yv = LaurentPoly::variable(y);
  const LaurentPoly divisor = xv - yv;
  std::vector<LaurentPoly> out{LaurentPoly(1)};
  for (int k = 2; k <= n; ++k) {
    const LaurentPoly& prev = out.back();
    const LaurentPoly xk(k % 2 == 0 ? 1 : x_value);
    LaurentPoly rhs = xk * yv * substitute(prev, y, LaurentPoly(Monomial(y), x_value));
    rhs += divisor * prev;
    rhs -= xv * LaurentPoly::variable(y, k) * substitute(prev, y, 1);
    out.push_back(divide_exact(rhs, divisor));
  }
  return out;
}

}  // namespace detail

/// sum over T_n of y^ldes; g_ldes(0) = 1.
inline LaurentPoly g_ldes(int n, GenFunMethod method = GenFunMethod::kBruteForce, const BuildOptions& options = {}) {
  if (n == 0) return LaurentPoly(1);
  check_size(n, options.limits);
  if (method == GenFunMethod::kRecursive) return detail::unit_x_sequence(n, 1).back();
  return fold_T<detail::YCoefficients>(
             n, options.threads, [](detail::YCoefficients& acc, const Permutation& p) { acc.add(ldes(p), 1); },
             options.limits)
      .poly();
}

/// sum over T_n of (-1)^inv y^ldes.
inline LaurentPoly g_signed(int n, GenFunMethod method = GenFunMethod::kBruteForce, const BuildOptions& options = {}) {
  check_size(n, options.limits);
  if (method == GenFunMethod::kRecursive) return detail::unit_x_sequence(n, -1).back();
  return fold_T<detail::YCoefficients>(
             n, options.threads,
             [](detail::YCoefficients& acc, const Permutation& p) { acc.add(ldes(p), sign(p)); }, options.limits)
      .poly();
}

/// C(a, b) by Pascal's rule with overflow checks.
inline std::int64_t binomial(int a, int b) {
  if (b < 0 || b > a || a < 0) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<std::int64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = detail::checked_add(row[j - 1], row[j]);
    row = std::move(next);
  }
  return row[b];
}

inline std::int64_t catalan(int n) {
  const std::int64_t c = binomial(2 * n, n);
  if (c % (n + 1) != 0) throw MathError("Catalan quotient is not exact");
  return c / (n + 1);
}

/// sum_{k=0}^{n-1} (n-k)/(n+k) C(n+k, k) y^k, each quotient asserted exact.
inline LaurentPoly hilbert_closed_form(int n) {
  if (n < 1) throw InvalidArgument("hilbert_closed_form needs n >= 1");
  LaurentPoly out;
  for (int k = 0; k < n; ++k) {
    const std::int64_t numer = detail::checked_mul(binomial(n + k, k), n - k);
    if (numer % (n + k) != 0) throw MathError("ballot coefficient is not an integer at k = " + std::to_string(k));
    out.add_term(Monomial(Variable::y(), k), numer / (n + k));
  }
  return out;
}

}  // namespace avoid321
