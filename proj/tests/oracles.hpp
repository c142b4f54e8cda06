#pragma once

// Independent reference implementations used only by the tests. They work
// from the raw definitions (all of S_n, all step sequences) and share no
// code paths with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "avoid321/dyck.hpp"
#include "avoid321/permutation.hpp"
#include "avoid321/polynomial.hpp"

namespace oracle {

using avoid321::Permutation;

/// Cubic scan for a decreasing subsequence of length 3.
inline bool is_321_avoiding_naive(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (w[i] > w[j] && w[j] > w[k]) return false;
  return true;
}

/// T_n by filtering all n! permutations, in lexicographic order.
inline std::vector<Permutation> T_by_filter(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    if (is_321_avoiding_naive(w)) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Catalan numbers by the convolution recurrence.
inline std::int64_t catalan(int n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[n];
}

inline int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

inline int last_descent(const std::vector<int>& w) {
  int last = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) last = static_cast<int>(i) + 1;
  return last;
}

inline std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> q(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) q[w[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

inline std::vector<int> descents(const std::vector<int>& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

inline std::vector<int> word(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

/// Dyck paths by filtering all 2^(2n) step sequences, as +1/-1 vectors.
inline std::vector<std::vector<int>> dyck_by_filter(int n) {
  std::vector<std::vector<int>> out;
  const int len = 2 * n;
  for (std::uint64_t bits = 0; bits < (1ULL << len); ++bits) {
    std::vector<int> steps(len);
    int h = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      steps[i] = ((bits >> (len - 1 - i)) & 1ULL) ? 1 : -1;
      h += steps[i];
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(steps);
  }
  return out;
}

/// Univariate polynomial in y from dense coefficients c[0] + c[1] y + ...
inline avoid321::LaurentPoly poly_y(const std::vector<std::int64_t>& c) {
  avoid321::LaurentPoly p;
  for (std::size_t e = 0; e < c.size(); ++e) p.add_term(avoid321::Monomial(avoid321::Variable::y(), static_cast<int>(e)), c[e]);
  return p;
}

}  // namespace oracle
