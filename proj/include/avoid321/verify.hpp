#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "avoid321/dyck.hpp"
#include "avoid321/genfun.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"
#include "avoid321/serialize.hpp"
#include "avoid321/tableaux.hpp"

// Exhaustive checks of the identities on T_n and P_n. Every comparison is
// exact equality of canonical polynomials; each check walks its range in
// ascending order and stops at the first counterexample.

namespace avoid321 {

enum class CheckStatus { kPass, kFail };

struct CheckReport {
  std::string check_id;
  int n_min = 1;
  int n_max = 0;  ///< last size actually covered
  CheckStatus status = CheckStatus::kPass;
  std::optional<json> witness;  ///< always present on failure
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return status == CheckStatus::kPass; }
};

inline json to_json_line(const CheckReport& r, bool with_timing = true) {
  json j{{"check", r.check_id},
         {"n", json::array({r.n_min, r.n_max})},
         {"status", r.passed() ? "pass" : "fail"},
         {"witness", r.witness ? *r.witness : json(nullptr)}};
  if (with_timing) j["ms"] = r.elapsed.count();
  return j;
}

struct VerifyOptions {
  Limits limits{};
  unsigned threads = 1;
};

namespace detail {

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CheckReport make_report(std::string id, int n_min) {
  CheckReport r;
  r.check_id = std::move(id);
  r.n_min = n_min;
  r.n_max = n_min - 1;
  return r;
}

inline CheckReport& fail(CheckReport& r, json witness) {
  r.status = CheckStatus::kFail;
  r.witness = std::move(witness);
  return r;
}

inline LaurentPoly y_power(int e) { return LaurentPoly::variable(Variable::y(), e); }

inline LaurentPoly y_squared(const LaurentPoly& p) {
  return substitute(p, Variable::y(), LaurentPoly::variable(Variable::y(), 2));
}

/// Per-class pair of enumerators keyed by descent mask.
using ClassPolys = std::map<std::uint64_t, std::pair<LaurentPoly, LaurentPoly>>;

inline json class_witness(int n, std::uint64_t mask, const LaurentPoly& a, const LaurentPoly& b, const char* a_name,
                          const char* b_name) {
  return json{{"n", n}, {"B", DescentSet(n, mask).members()}, {a_name, canonical_string(a)}, {b_name, canonical_string(b)}};
}

}  // namespace detail

/// For every n and every B in [n-2]: the ldes and lind-1 enumerators over
/// T_n(B) agree. Also checks the generating-function form
/// y * fhat_n(t,1,y,1) = fhat_n(t,1,1,y) and the two intermediate
/// identities obtained from the recursion at x = 1.
inline CheckReport check_equidistribution(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("equidistribution", 1);
  const Variable x = Variable::x();
  const Variable y = Variable::y();
  const Variable z = Variable::z();
  std::vector<LaurentPoly> fs;
  if (max_n >= 1) fs = f_recursive_sequence(max_n, options.limits);
  for (int n = 1; n <= max_n; ++n) {
    detail::ClassPolys classes;
    for_each_T(
        n,
        [&](const Permutation& p) {
          auto& [by_ldes, by_lind] = classes[inverse_descent_set(p).restricted_to(n - 2).mask()];
          by_ldes.add_term(Monomial(y, ldes(p)), 1);
          by_lind.add_term(Monomial(y, lind(p) - 1), 1);
        },
        options.limits);
    for (const auto& [mask, polys] : classes) {
      if (polys.first != polys.second) {
        detail::fail(r, detail::class_witness(n, mask, polys.first, polys.second, "ldes", "lind_minus_1"));
        r.elapsed = clock.elapsed();
        return r;
      }
    }

    const LaurentPoly hat = specialize_hat(fs[n - 1], n);
    const LaurentPoly at_x1 = substitute(hat, x, 1);
    const LaurentPoly ldes_side = substitute(at_x1, z, 1);
    const LaurentPoly lind_side = substitute(substitute(at_x1, y, 1), z, LaurentPoly::variable(y));
    if (detail::y_power(1) * ldes_side != lind_side) {
      detail::fail(r, json{{"n", n}, {"identity", "y*fhat(t,1,y,1) = fhat(t,1,1,y)"},
                   {"lhs", canonical_string(detail::y_power(1) * ldes_side)},
                   {"rhs", canonical_string(lind_side)}});
      r.elapsed = clock.elapsed();
      return r;
    }
    if (n >= 2) {
      const LaurentPoly prev_y = substitute(substitute(fs[n - 2], x, 1), z, 1);
      const LaurentPoly prev_1 = substitute(prev_y, y, 1);
      const LaurentPoly one_minus_y = LaurentPoly(1) - detail::y_power(1);
      const bool first_ok = one_minus_y * ldes_side == prev_y - detail::y_power(n) * prev_1;
      const bool second_ok =
          one_minus_y * lind_side == detail::y_power(1) * prev_y - detail::y_power(n + 1) * prev_1;
      if (!first_ok || !second_ok) {
        detail::fail(r, json{{"n", n}, {"identity", first_ok ? "(1-y)fhat(t,1,1,y)" : "(1-y)fhat(t,1,y,1)"}});
        r.elapsed = clock.elapsed();
        return r;
      }
    }
    r.n_max = n;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// Searches for the smallest (n, B') with B' a full subset of [n-1] such
/// that ldes and lind-1 are NOT equidistributed over { Des(p^-1) = B' }.
/// Finding such a witness is a pass: the unrestricted claim is false.
inline CheckReport check_forgetfulness_necessity(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("forgetfulness", 1);
  const Variable y = Variable::y();
  for (int n = 1; n <= max_n; ++n) {
    detail::ClassPolys classes;
    for_each_T(
        n,
        [&](const Permutation& p) {
          auto& [by_ldes, by_lind] = classes[inverse_descent_set(p).mask()];
          by_ldes.add_term(Monomial(y, ldes(p)), 1);
          by_lind.add_term(Monomial(y, lind(p) - 1), 1);
        },
        options.limits);
    r.n_max = n;
    // std::map iterates masks in ascending order.
    for (const auto& [mask, polys] : classes) {
      if (polys.first != polys.second) {
        r.witness = detail::class_witness(n, mask, polys.first, polys.second, "ldes", "lind_minus_1");
        r.elapsed = clock.elapsed();
        return r;
      }
    }
  }
  detail::fail(r, json{{"searched_up_to", max_n}, {"found", false}});
  r.elapsed = clock.elapsed();
  return r;
}

/// Recursive construction against direct summation, the Catalan marginal,
/// and the first-order ldes recurrence (1-y) g_{n+1} = g_n - y^{n+1} g_n(1).
inline CheckReport check_recursion(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("recursion", 1);
  if (max_n < 1) return r;
  const auto fs = f_recursive_sequence(max_n, options.limits);
  const BuildOptions build{options.limits, options.threads};
  for (int n = 1; n <= max_n; ++n) {
    const LaurentPoly brute = f_bruteforce(n, build);
    if (fs[n - 1] != brute) {
      detail::fail(r, json{{"n", n}, {"recursive", canonical_string(fs[n - 1])}, {"bruteforce", canonical_string(brute)}});
      break;
    }
    if (brute.coefficient_sum() != catalan(n)) {
      detail::fail(r, json{{"n", n}, {"catalan", catalan(n)}, {"sum", brute.coefficient_sum()}});
      break;
    }
    const LaurentPoly g = g_ldes(n, GenFunMethod::kBruteForce, build);
    const LaurentPoly g_prev = g_ldes(n - 1, GenFunMethod::kBruteForce, build);
    const LaurentPoly lhs = (LaurentPoly(1) - detail::y_power(1)) * g;
    const LaurentPoly rhs = g_prev - detail::y_power(n) * LaurentPoly(g_prev.coefficient_sum());
    if (lhs != rhs) {
      detail::fail(r, json{{"n", n}, {"identity", "(1-y) g_n = g_{n-1} - y^n g_{n-1}(1)"},
                   {"lhs", canonical_string(lhs)}, {"rhs", canonical_string(rhs)}});
      break;
    }
    r.n_max = n;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// ldes over T_n, ldes over P_n and lind-1 over P_n coincide, overall and
/// on every class B in [n-2].
inline CheckReport check_dyck(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("dyck", 1);
  const Variable y = Variable::y();
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::uint64_t, LaurentPoly> perm_ldes;
    detail::ClassPolys path_polys;
    LaurentPoly perm_total;
    LaurentPoly path_ldes_total;
    LaurentPoly path_lind_total;
    for_each_T(
        n,
        [&](const Permutation& p) {
          perm_ldes[inverse_descent_set(p).restricted_to(n - 2).mask()].add_term(Monomial(y, ldes(p)), 1);
          perm_total.add_term(Monomial(y, ldes(p)), 1);
        },
        options.limits);
    for_each_P(
        n,
        [&](const DyckPath& p) {
          auto& [by_ldes, by_lind] = path_polys[path_descents_inverse(p).restricted_to(n - 2).mask()];
          by_ldes.add_term(Monomial(y, path_ldes(p)), 1);
          by_lind.add_term(Monomial(y, path_lind(p) - 1), 1);
          path_ldes_total.add_term(Monomial(y, path_ldes(p)), 1);
          path_lind_total.add_term(Monomial(y, path_lind(p) - 1), 1);
        },
        options.limits);
    if (perm_total != path_ldes_total || path_ldes_total != path_lind_total) {
      detail::fail(r, json{{"n", n}, {"perm_ldes", canonical_string(perm_total)},
                   {"path_ldes", canonical_string(path_ldes_total)},
                   {"path_lind_minus_1", canonical_string(path_lind_total)}});
      break;
    }
    bool ok = perm_ldes.size() == path_polys.size();
    for (std::uint64_t mask = 0; ok && mask < (1ULL << std::max(0, n - 1)); mask += 2) {
      const auto pt = perm_ldes.find(mask);
      const auto pp = path_polys.find(mask);
      const LaurentPoly a = pt == perm_ldes.end() ? LaurentPoly{} : pt->second;
      const LaurentPoly b = pp == path_polys.end() ? LaurentPoly{} : pp->second.first;
      const LaurentPoly c = pp == path_polys.end() ? LaurentPoly{} : pp->second.second;
      if (a != b || b != c) {
        detail::fail(r, json{{"n", n}, {"B", DescentSet(n, mask).members()}, {"perm_ldes", canonical_string(a)},
                     {"path_ldes", canonical_string(b)}, {"path_lind_minus_1", canonical_string(c)}});
        ok = false;
      }
    }
    if (!ok) {
      if (!r.witness) detail::fail(r, json{{"n", n}, {"reason", "class sets differ"}});
      break;
    }
    r.n_max = n;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// g_{2m+1}(-1,y) = g_m(1,y^2) and g_{2m}(-1,y) = (1-y) g_m(1,y^2), with
/// both sides summed over permutations; the recursive route for the signed
/// enumerator must agree as well.
inline CheckReport check_sign_balance(int max_index, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("sign-balance", 1);
  const BuildOptions build{options.limits, options.threads};
  for (int index = 1; index <= max_index; ++index) {
    const LaurentPoly lhs = g_signed(index, GenFunMethod::kBruteForce, build);
    const int half = index / 2;
    LaurentPoly rhs = detail::y_squared(g_ldes(half, GenFunMethod::kBruteForce, build));
    if (index % 2 == 0) rhs = (LaurentPoly(1) - detail::y_power(1)) * rhs;
    const LaurentPoly recursive = g_signed(index, GenFunMethod::kRecursive, build);
    if (lhs != rhs || lhs != recursive) {
      detail::fail(r, json{{"index", index}, {"signed", canonical_string(lhs)}, {"expected", canonical_string(rhs)},
                   {"recursive", canonical_string(recursive)}});
      break;
    }
    r.n_max = index;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// g_{2m+1}(-1,1) = Catalan(m), g_{2m}(-1,1) = 0.
inline CheckReport check_catalan_balance(int max_index, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("catalan-balance", 1);
  const BuildOptions build{options.limits, options.threads};
  for (int index = 1; index <= max_index; ++index) {
    const auto balance = g_signed(index, GenFunMethod::kBruteForce, build).coefficient_sum();
    const std::int64_t expected = index % 2 == 1 ? catalan(index / 2) : 0;
    if (balance != expected) {
      detail::fail(r, json{{"index", index}, {"balance", balance}, {"expected", expected}});
      break;
    }
    r.n_max = index;
  }
  r.elapsed = clock.elapsed();
  return r;
}

namespace detail {

/// All per-permutation properties of the bijection chain; returns the
/// name of the first property that fails, or an empty string.
inline std::string bijection_violation(const Permutation& perm) {
  const int n = perm.size();
  const SYTPair pq = rsk(perm);
  const RectTableau t = glue(pq);
  const DyckPath p = tableau_to_path(t);
  const RectTableau t_inv = tableau_rotate(t);
  const DescentSet des = descent_set(perm);
  const DescentSet ides = inverse_descent_set(perm);

  if (!(des == tableau_descents(pq.q()) && des == tableau_descents(t, RectDescentMode::kFirstHalf) &&
        des == path_descents(p)))
    return "Des(pi) = Des(Q) = Des_1(T) = Des(p)";
  if (!(ides == tableau_descents(pq.p()) && ides == tableau_descents(t_inv, RectDescentMode::kFirstHalf) &&
        ides == path_descents_inverse(p) && ides == path_descents(inverse_path(p))))
    return "Des(pi^-1) = Des(P) = Des_1(T^-1) = Des(p^-1)";
  if (!(rsk(inverse(perm)) == SYTPair(pq.q(), pq.p()))) return "pi^-1 -> (Q,P)";
  if (!(tableau_to_path(t_inv) == inverse_path(p))) return "T^-1 -> p^-1";

  const bool c1 = perm(n) == n;
  const bool c2 = pq.p().row_of(n) == 1 && pq.q().row_of(n) == 1;
  const bool c3 = t.row_of(n) == 1 && t.row_of(n + 1) == 2;
  const auto pk = peaks(p);
  const bool c4 = std::find(pk.begin(), pk.end(), n) != pk.end();
  if (!(c1 == c2 && c2 == c3 && c3 == c4)) return "four-way equivalence for pi(n) = n";

  if (path_ldes(p) != ldes(perm)) return "ldes(p) = ldes(pi)";
  if (path_lind(p) != lind(perm)) return "lind(p) = lind(pi)";
  if (!(phi_inverse(p) == perm)) return "phi_inverse(phi(pi)) = pi";
  if (!(rsk_inverse(pq) == perm)) return "rsk_inverse(rsk(pi)) = pi";
  if (!(unglue(t) == pq)) return "unglue(glue(P,Q)) = (P,Q)";
  if (!(tableau_rotate(t_inv) == t)) return "rotation is an involution";
  const Permutation s = psi(perm);
  if (!is_321_avoiding(s) || !(psi(s) == perm)) return "psi is an involution on T_n";
  return {};
}

}  // namespace detail

/// The insertion/glue/path chain: descent transport, the pi(n) = n
/// equivalences, ldes/lind transport, round trips, and bijectivity.
inline CheckReport check_bijection(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("bijection", 1);
  for (int n = 1; n <= max_n; ++n) {
    std::set<DyckPath> image;
    std::optional<json> witness;
    for_each_T(
        n,
        [&](const Permutation& perm) {
          if (witness) return;
          const std::string bad = detail::bijection_violation(perm);
          if (!bad.empty()) witness = json{{"n", n}, {"perm", to_string(perm)}, {"property", bad}};
          else image.insert(phi(perm));
        },
        options.limits);
    if (!witness && static_cast<std::int64_t>(image.size()) != catalan(n)) {
      witness = json{{"n", n}, {"property", "phi is injective onto P_n"}, {"image_size", image.size()}};
    }
    if (witness) {
      detail::fail(r, *witness);
      break;
    }
    r.n_max = n;
  }
  r.elapsed = clock.elapsed();
  return r;
}

/// sum over P_n of y^{n-tail} = ballot closed form = g_ldes(n), plus
/// tail(phi(psi(pi))) = n - ldes(pi) on every pi in T_n.
inline CheckReport check_hilbert(int max_n, const VerifyOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport r = detail::make_report("hilbert", 1);
  const BuildOptions build{options.limits, options.threads};
  for (int n = 1; n <= max_n; ++n) {
    LaurentPoly tails;
    for_each_P(n, [&](const DyckPath& p) { tails.add_term(Monomial(Variable::y(), n - tail(p)), 1); }, options.limits);
    const LaurentPoly closed = hilbert_closed_form(n);
    const LaurentPoly ldes_poly = g_ldes(n, GenFunMethod::kBruteForce, build);
    if (tails != closed || closed != ldes_poly) {
      detail::fail(r, json{{"n", n}, {"tail", canonical_string(tails)}, {"closed_form", canonical_string(closed)},
                   {"ldes", canonical_string(ldes_poly)}});
      break;
    }
    std::optional<json> witness;
    for_each_T(
        n,
        [&](const Permutation& perm) {
          if (!witness && tail(phi(psi(perm))) != n - ldes(perm))
            witness = json{{"n", n}, {"perm", to_string(perm)}, {"property", "tail(phi(psi(pi))) = n - ldes(pi)"}};
        },
        options.limits);
    if (witness) {
      detail::fail(r, *witness);
      break;
    }
    r.n_max = n;
  }
  r.elapsed = clock.elapsed();
  return r;
}

enum class Suite { kFast, kSlow };

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"recursion", "equidistribution", "forgetfulness", "dyck",
                                            "sign-balance", "catalan-balance", "bijection", "hilbert"};
  return ids;
}

inline bool is_check_id(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

/// Ranges: n <= 9 fast, n <= 12 slow; the signed checks run to index 14.
inline int default_max_n(std::string_view id, Suite suite = Suite::kFast) {
  if (id == "sign-balance" || id == "catalan-balance") return 14;
  if (id == "forgetfulness") return 6;
  return suite == Suite::kFast ? 9 : 12;
}

inline CheckReport run_check(std::string_view id, int max_n, const VerifyOptions& options = {}) {
  using Fn = CheckReport (*)(int, const VerifyOptions&);
  static const std::map<std::string, Fn, std::less<>> table{
      {"recursion", &check_recursion},
      {"equidistribution", &check_equidistribution},
      {"forgetfulness", &check_forgetfulness_necessity},
      {"dyck", &check_dyck},
      {"sign-balance", &check_sign_balance},
      {"catalan-balance", &check_catalan_balance},
      {"bijection", &check_bijection},
      {"hilbert", &check_hilbert},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw InvalidArgument("unknown check '" + std::string(id) + "'");
  return it->second(max_n, options);
}

}  // namespace avoid321
