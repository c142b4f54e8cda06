#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avoid321/dyck.hpp"
#include "avoid321/error.hpp"
#include "avoid321/permutation.hpp"

namespace avoid321 {

namespace detail {

inline void require_increasing(const std::vector<int>& row, const char* what) {
  for (std::size_t i = 1; i < row.size(); ++i)
    if (row[i - 1] >= row[i]) throw InvalidArgument(std::string(what) + ": row is not increasing");
}

inline void require_columns(const std::vector<int>& top, const std::vector<int>& bottom, const char* what) {
  for (std::size_t j = 0; j < bottom.size(); ++j)
    if (bottom[j] <= top[j]) throw InvalidArgument(std::string(what) + ": column is not increasing");
}

inline void require_entries(const std::vector<int>& a, const std::vector<int>& b, int n, const char* what) {
  std::vector<bool> seen(n + 1, false);
  for (const auto* row : {&a, &b}) {
    for (int v : *row) {
      if (v < 1 || v > n || seen[v]) throw InvalidArgument(std::string(what) + ": entries are not 1.." + std::to_string(n));
      seen[v] = true;
    }
  }
}

}  // namespace detail

/// Standard Young tableau with at most two rows.
class TwoRowTableau {
 public:
  TwoRowTableau(std::vector<int> row1, std::vector<int> row2) : row1_(std::move(row1)), row2_(std::move(row2)) {
    constexpr const char* what = "two-row tableau";
    if (row1_.size() < row2_.size()) throw InvalidArgument("two-row tableau: second row longer than first");
    detail::require_entries(row1_, row2_, size(), what);
    detail::require_increasing(row1_, what);
    detail::require_increasing(row2_, what);
    detail::require_columns(row1_, row2_, what);
  }

  const std::vector<int>& row1() const { return row1_; }
  const std::vector<int>& row2() const { return row2_; }
  int size() const { return static_cast<int>(row1_.size() + row2_.size()); }
  std::pair<int, int> shape() const { return {static_cast<int>(row1_.size()), static_cast<int>(row2_.size())}; }

  /// 1 or 2; 0 if absent.
  int row_of(int entry) const {
    if (std::binary_search(row1_.begin(), row1_.end(), entry)) return 1;
    if (std::binary_search(row2_.begin(), row2_.end(), entry)) return 2;
    return 0;
  }

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

 private:
  std::vector<int> row1_;
  std::vector<int> row2_;
};

/// (P, Q): insertion and recording tableaux of equal shape.
class SYTPair {
 public:
  SYTPair(TwoRowTableau p, TwoRowTableau q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.shape() != q_.shape()) throw InvalidArgument("tableau pair: shapes differ");
  }
  const TwoRowTableau& p() const { return p_; }
  const TwoRowTableau& q() const { return q_; }
  int size() const { return p_.size(); }

  friend bool operator==(const SYTPair&, const SYTPair&) = default;

 private:
  TwoRowTableau p_;
  TwoRowTableau q_;
};

/// Standard tableau of rectangular shape (n, n), entries 1..2n.
class RectTableau {
 public:
  RectTableau(std::vector<int> row1, std::vector<int> row2) : row1_(std::move(row1)), row2_(std::move(row2)) {
    constexpr const char* what = "rectangular tableau";
    if (row1_.size() != row2_.size() || row1_.empty()) throw InvalidArgument("rectangular tableau: rows must have equal positive length");
    detail::require_entries(row1_, row2_, 2 * half(), what);
    detail::require_increasing(row1_, what);
    detail::require_increasing(row2_, what);
    detail::require_columns(row1_, row2_, what);
  }

  const std::vector<int>& row1() const { return row1_; }
  const std::vector<int>& row2() const { return row2_; }
  int half() const { return static_cast<int>(row1_.size()); }

  int row_of(int entry) const {
    if (std::binary_search(row1_.begin(), row1_.end(), entry)) return 1;
    if (std::binary_search(row2_.begin(), row2_.end(), entry)) return 2;
    return 0;
  }

  friend bool operator==(const RectTableau&, const RectTableau&) = default;

 private:
  std::vector<int> row1_;
  std::vector<int> row2_;
};

using TableauRows = std::vector<std::vector<int>>;

/// Row insertion on an arbitrary permutation; any number of rows.
inline std::pair<TableauRows, TableauRows> rsk_general(const Permutation& perm) {
  TableauRows p;
  TableauRows q;
  for (int i = 1; i <= perm.size(); ++i) {
    int value = perm(i);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({value});
        q.push_back({i});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), value);
      if (it == row.end()) {
        row.push_back(value);
        q[r].push_back(i);
        break;
      }
      std::swap(value, *it);
      ++r;
    }
  }
  return {std::move(p), std::move(q)};
}

/// Robinson-Schensted on a 321-avoiding permutation. A third row means
/// the input contains 321 and raises PatternViolation.
inline SYTPair rsk(const Permutation& perm) {
  auto [p, q] = rsk_general(perm);
  if (p.size() > 2) throw PatternViolation("insertion created a third row: " + to_string(perm) + " contains 321");
  p.resize(2);
  q.resize(2);
  return SYTPair(TwoRowTableau(p[0], p[1]), TwoRowTableau(q[0], q[1]));
}

/// Reverse bumping, largest recording entry first.
inline Permutation rsk_inverse(const SYTPair& pair) {
  std::vector<int> p1 = pair.p().row1();
  std::vector<int> p2 = pair.p().row2();
  std::vector<int> q1 = pair.q().row1();
  std::vector<int> q2 = pair.q().row2();
  const int n = pair.size();
  std::vector<int> word(n);
  for (int k = n; k >= 1; --k) {
    if (!q2.empty() && q2.back() == k) {
      q2.pop_back();
      const int v = p2.back();
      p2.pop_back();
      auto it = std::lower_bound(p1.begin(), p1.end(), v);
      if (it == p1.begin()) throw InvalidArgument("tableau pair: reverse bump has no target");
      --it;
      word[k - 1] = *it;
      *it = v;
    } else if (!q1.empty() && q1.back() == k) {
      q1.pop_back();
      word[k - 1] = p1.back();
      p1.pop_back();
    } else {
      throw InvalidArgument("tableau pair: recording entry not at a row end");
    }
  }
  return Permutation(std::move(word));
}

/// Q glued to P rotated by 180 degrees with entries j -> 2n+1-j.
inline RectTableau glue(const SYTPair& pair) {
  const int n = pair.size();
  std::vector<int> row1 = pair.q().row1();
  std::vector<int> row2 = pair.q().row2();
  const auto& pr1 = pair.p().row1();
  const auto& pr2 = pair.p().row2();
  for (auto it = pr2.rbegin(); it != pr2.rend(); ++it) row1.push_back(2 * n + 1 - *it);
  for (auto it = pr1.rbegin(); it != pr1.rend(); ++it) row2.push_back(2 * n + 1 - *it);
  return RectTableau(std::move(row1), std::move(row2));
}

/// Splits at entries <= n (recording tableau) vs > n (rotated insertion tableau).
inline SYTPair unglue(const RectTableau& t) {
  const int n = t.half();
  std::vector<int> q1;
  std::vector<int> q2;
  std::vector<int> p1;
  std::vector<int> p2;
  for (int v : t.row1()) (v <= n ? q1 : p2).push_back(v);
  for (int v : t.row2()) (v <= n ? q2 : p1).push_back(v);
  auto unrotate = [n](std::vector<int>& row) {
    std::reverse(row.begin(), row.end());
    for (int& v : row) v = 2 * n + 1 - v;
  };
  unrotate(p1);
  unrotate(p2);
  return SYTPair(TwoRowTableau(std::move(p1), std::move(p2)), TwoRowTableau(std::move(q1), std::move(q2)));
}

/// Up steps at the entries of row 1.
inline DyckPath tableau_to_path(const RectTableau& t) {
  const int len = 2 * t.half();
  std::vector<int> steps(len, -1);
  for (int v : t.row1()) steps[v - 1] = 1;
  return DyckPath::from_steps(steps);
}

inline RectTableau path_to_tableau(const DyckPath& p) {
  std::vector<int> row1;
  std::vector<int> row2;
  for (int i = 1; i <= p.length(); ++i) (p.up(i) ? row1 : row2).push_back(i);
  return RectTableau(std::move(row1), std::move(row2));
}

/// T^-1: 180 degree rotation with entries j -> 2n+1-j.
inline RectTableau tableau_rotate(const RectTableau& t) {
  const int top = 2 * t.half() + 1;
  std::vector<int> row1(t.row2().rbegin(), t.row2().rend());
  std::vector<int> row2(t.row1().rbegin(), t.row1().rend());
  for (int& v : row1) v = top - v;
  for (int& v : row2) v = top - v;
  return RectTableau(std::move(row1), std::move(row2));
}

/// The bijection T_n -> P_n: insertion, gluing, then reading row 1 as up steps.
inline DyckPath phi(const Permutation& perm) {
  if (!is_321_avoiding(perm)) throw PatternViolation(to_string(perm) + " is not 321-avoiding");
  return tableau_to_path(glue(rsk(perm)));
}

inline Permutation phi_inverse(const DyckPath& path) { return rsk_inverse(unglue(path_to_tableau(path))); }

/// w0 * p^-1 * w0, i.e. i -> n+1 - p^-1(n+1-i).
inline Permutation psi(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[perm(i)] = i;
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - pos[n + 1 - i];
  return Permutation(std::move(out));
}

/// { i : i in row 1 and i+1 in row 2 }.
inline DescentSet tableau_descents(const TwoRowTableau& t) {
  DescentSet d(t.size());
  for (int v : t.row1())
    if (v < t.size() && t.row_of(v + 1) == 2) d.insert(v);
  return d;
}

enum class RectDescentMode {
  kFull,       ///< Des(T) as a subset of [2n-1]
  kFirstHalf,  ///< Des_1(T) = Des(T) restricted to [n-1], ambient n
};

inline DescentSet tableau_descents(const RectTableau& t, RectDescentMode mode = RectDescentMode::kFull) {
  const int n = t.half();
  const bool full = mode == RectDescentMode::kFull;
  DescentSet d(full ? 2 * n : n);
  const int last = full ? 2 * n - 1 : n - 1;
  for (int v : t.row1())
    if (v <= last && t.row_of(v + 1) == 2) d.insert(v);
  return d;
}

/// Rows right-aligned to a common column width, row 1 first.
template <class Tableau>
std::string to_text(const Tableau& t) {
  std::size_t width = 1;
  for (const auto* row : {&t.row1(), &t.row2()})
    for (int v : *row) width = std::max(width, std::to_string(v).size());
  auto render = [&](const std::vector<int>& row) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = std::to_string(row[j]);
      if (j > 0) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    return line;
  };
  return render(t.row1()) + "\n" + render(t.row2());
}

}  // namespace avoid321
