#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avoid321/error.hpp"
#include "avoid321/permutation.hpp"

namespace avoid321 {

namespace detail {
struct DyckAccess;
}

/// Dyck path of semilength n: 2n steps of +1/-1 with nonnegative prefix
/// sums. Steps are packed one bit each (1 = up), 64 per word.
class DyckPath {
 public:
  static DyckPath from_steps(std::span<const int> steps) {
    if (steps.empty() || steps.size() % 2 != 0) throw InvalidArgument("Dyck path needs a positive even length");
    DyckPath p(static_cast<int>(steps.size() / 2));
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] != 1 && steps[i] != -1) throw InvalidArgument("Dyck steps must be +1 or -1");
      height += steps[i];
      if (height < 0) throw InvalidArgument("Dyck path dips below zero at step " + std::to_string(i + 1));
      if (steps[i] == 1) p.set_up(static_cast<int>(i) + 1);
    }
    if (height != 0) throw InvalidArgument("Dyck path does not return to zero");
    return p;
  }

  /// "++--+-". Whitespace is ignored.
  static DyckPath parse(std::string_view text) {
    std::vector<int> steps;
    for (char c : text) {
      if (c == '+') steps.push_back(1);
      else if (c == '-') steps.push_back(-1);
      else if (c == ' ' || c == '\t' || c == '\n') continue;
      else throw InvalidArgument(std::string("bad Dyck step character '") + c + "'");
    }
    return from_steps(steps);
  }

  /// (+ ... + - ... -)
  static DyckPath unimodal(int n) {
    if (n < 1) throw InvalidArgument("semilength must be at least 1");
    DyckPath p(n);
    for (int i = 1; i <= n; ++i) p.set_up(i);
    return p;
  }

  int semilength() const { return n_; }
  int length() const { return 2 * n_; }

  /// Step i, 1-indexed.
  bool up(int i) const { return ((words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1ULL) != 0; }
  int step(int i) const { return up(i) ? 1 : -1; }

  std::vector<int> steps() const {
    std::vector<int> out(length());
    for (int i = 1; i <= length(); ++i) out[i - 1] = step(i);
    return out;
  }

  std::string to_string() const {
    std::string out(length(), '-');
    for (int i = 1; i <= length(); ++i)
      if (up(i)) out[i - 1] = '+';
    return out;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  friend struct detail::DyckAccess;

  explicit DyckPath(int n) : n_(n), words_((2 * n + 63) / 64, 0) {}
  void set_up(int i) { words_[(i - 1) / 64] |= 1ULL << ((i - 1) % 64); }
  void set_down(int i) { words_[(i - 1) / 64] &= ~(1ULL << ((i - 1) % 64)); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

struct DyckAccess {
  static DyckPath blank(int n) { return DyckPath(n); }
  static void set(DyckPath& p, int i, bool up) { up ? p.set_up(i) : p.set_down(i); }
};

}  // namespace detail

/// Peak(p) = { 1 <= i <= 2n-1 : p_i = +1, p_{i+1} = -1 }.
inline std::vector<int> peaks(const DyckPath& p) {
  std::vector<int> out;
  for (int i = 1; i < p.length(); ++i)
    if (p.up(i) && !p.up(i + 1)) out.push_back(i);
  return out;
}

/// Peaks strictly before the midpoint.
inline DescentSet path_descents(const DyckPath& p) {
  const int n = p.semilength();
  DescentSet d(n);
  for (int i = 1; i <= n - 1; ++i)
    if (p.up(i) && !p.up(i + 1)) d.insert(i);
  return d;
}

/// Reverse the steps and flip their signs.
inline DyckPath inverse_path(const DyckPath& p) {
  DyckPath q = detail::DyckAccess::blank(p.semilength());
  const int len = p.length();
  for (int i = 1; i <= len; ++i) detail::DyckAccess::set(q, i, !p.up(len + 1 - i));
  return q;
}

/// Des(p^-1) = { 1 <= i <= n-1 : 2n-i in Peak(p) }, read off p directly.
inline DescentSet path_descents_inverse(const DyckPath& p) {
  const int n = p.semilength();
  const int len = p.length();
  DescentSet d(n);
  for (int i = 1; i <= n - 1; ++i) {
    const int j = len - i;
    if (p.up(j) && !p.up(j + 1)) d.insert(i);
  }
  return d;
}

/// max Des(p), 0 for the unimodal path.
inline int path_ldes(const DyckPath& p) { return path_descents(p).max(); }

/// Last peak at or before the midpoint n. The first peak of any Dyck path
/// is at most n, so the maximum always exists.
inline int path_lind(const DyckPath& p) {
  for (int i = p.semilength(); i >= 1; --i)
    if (p.up(i) && !p.up(i + 1)) return i;
  throw std::logic_error("Dyck path without a peak in [1, n]");
}

/// Length of the final run of down steps: 2n minus the last peak.
inline int tail(const DyckPath& p) {
  for (int i = p.length() - 1; i >= 1; --i)
    if (p.up(i) && !p.up(i + 1)) return p.length() - i;
  throw std::logic_error("Dyck path without a peak");
}

/// Visits P_n in lexicographic order with '+' before '-'.
template <class Visit>
void for_each_P(int n, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  DyckPath p = detail::DyckAccess::blank(n);
  const int len = 2 * n;
  auto rec = [&](auto& self, int i, int ups, int height) -> void {
    if (i > len) {
      visit(std::as_const(p));
      return;
    }
    if (ups < n) {
      detail::DyckAccess::set(p, i, true);
      self(self, i + 1, ups + 1, height + 1);
    }
    if (height > 0) {
      detail::DyckAccess::set(p, i, false);
      self(self, i + 1, ups, height - 1);
    }
  };
  rec(rec, 1, 0, 0);
}

inline std::vector<DyckPath> enumerate_P(int n, const Limits& limits = {}) {
  std::vector<DyckPath> out;
  for_each_P(n, [&](const DyckPath& p) { out.push_back(p); }, limits);
  return out;
}

/// P_n(B) = { p in P_n : Des(p^-1) restricted to [n-2] equals B }.
template <class Visit>
void for_each_P_class(int n, const DescentSet& b, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  check_class_set(n, b);
  for_each_P(
      n,
      [&](const DyckPath& p) {
        if (path_descents_inverse(p).restricted_to(n - 2) == b) visit(p);
      },
      limits);
}

inline std::vector<DyckPath> enumerate_P_class(int n, const DescentSet& b, const Limits& limits = {}) {
  std::vector<DyckPath> out;
  for_each_P_class(n, b, [&](const DyckPath& p) { out.push_back(p); }, limits);
  return out;
}

}  // namespace avoid321
