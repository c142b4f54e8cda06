#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avoid321/error.hpp"

namespace avoid321 {

inline constexpr int kDefaultMaxN = 16;

/// Enumeration guard. Catalan(16) = 35,357,670 is the largest default size.
struct Limits {
  int max_n = kDefaultMaxN;
};

inline void check_size(int n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("size must be at least 1, got " + std::to_string(n));
  if (n > limits.max_n) {
    throw ResourceLimit("size " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(limits.max_n));
  }
}

/// Subset of {1, ..., n-1} stored as a bitmask (bit i <-> member i).
class DescentSet {
 public:
  static constexpr int kMaxAmbient = 64;

  DescentSet() = default;
  explicit DescentSet(int n, std::uint64_t mask = 0) : mask_(mask), n_(n) {
    if (n < 0 || n > kMaxAmbient) throw InvalidArgument("descent set ambient size out of range");
    const std::uint64_t allowed = n <= 1 ? 0 : (((n == kMaxAmbient) ? ~0ULL : ((1ULL << n) - 1)) & ~1ULL);
    if ((mask & ~allowed) != 0) {
      throw InvalidArgument("descent set member outside [1, " + std::to_string(n - 1) + "]");
    }
  }

  static DescentSet from_members(int n, std::span<const int> members) {
    std::uint64_t mask = 0;
    for (int i : members) {
      if (i < 1 || i > n - 1) {
        throw InvalidArgument("descent set member " + std::to_string(i) + " outside [1, " +
                              std::to_string(n - 1) + "]");
      }
      mask |= 1ULL << i;
    }
    return DescentSet(n, mask);
  }

  int ambient() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int count() const { return std::popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i < 64 && ((mask_ >> i) & 1ULL) != 0; }

  void insert(int i) {
    if (i < 1 || i > n_ - 1) throw InvalidArgument("descent set member out of range");
    mask_ |= 1ULL << i;
  }

  /// Largest member, 0 when empty.
  int max() const { return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_); }
  /// Smallest member, or `fallback` when empty.
  int min_or(int fallback) const { return mask_ == 0 ? fallback : std::countr_zero(mask_); }

  /// Intersection with [m].
  DescentSet restricted_to(int m) const {
    const std::uint64_t keep = m <= 0 ? 0 : (m >= 63 ? ~0ULL : ((1ULL << (m + 1)) - 1));
    return DescentSet(n_, mask_ & keep);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

namespace detail {
struct PermutationAccess;
}

/// A permutation in one-line notation, values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    if (n < 1) throw InvalidArgument("permutation must be non-empty");
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
      if (v < 1 || v > n || seen[v]) {
        throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  /// pi(i), 1-indexed position.
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : values_(std::move(values)) {}
  friend struct detail::PermutationAccess;

  std::vector<int> values_;
};

namespace detail {

// In-place mutation for the enumerators; callers keep the invariant.
struct PermutationAccess {
  static Permutation unchecked(std::vector<int> values) {
    return Permutation(Permutation::Unchecked{}, std::move(values));
  }
  static std::vector<int>& values(Permutation& p) { return p.values_; }
};

}  // namespace detail

inline Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(n);
  for (int i = 1; i <= n; ++i) q[p(i) - 1] = i;
  return Permutation(std::move(q));
}

inline int inv(const Permutation& p) {
  const auto v = p.values();
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) count += v[i] > v[j] ? 1 : 0;
  return count;
}

/// Last descent; 0 for the identity.
inline int ldes(const Permutation& p) {
  for (int i = p.size() - 1; i >= 1; --i)
    if (p(i) > p(i + 1)) return i;
  return 0;
}

/// Position of the largest value n.
inline int lind(const Permutation& p) {
  const auto v = p.values();
  return static_cast<int>(std::find(v.begin(), v.end(), p.size()) - v.begin()) + 1;
}

inline DescentSet descent_set(const Permutation& p) {
  DescentSet d(p.size());
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) d.insert(i);
  return d;
}

/// Des(p^-1) without materializing the inverse: i is a descent of p^-1
/// iff i+1 occurs to the left of i in p.
inline DescentSet inverse_descent_set(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[p(i)] = i;
  DescentSet d(n);
  for (int i = 1; i < n; ++i)
    if (pos[i] > pos[i + 1]) d.insert(i);
  return d;
}

inline int sign(const Permutation& p) { return inv(p) % 2 == 0 ? 1 : -1; }

/// Linear test: a 321 exists iff some middle entry is below the maximum to
/// its left and above the minimum to its right.
inline bool is_321_avoiding(const Permutation& p) {
  const auto v = p.values();
  const std::size_t n = v.size();
  if (n < 3) return true;
  std::vector<int> suffix_min(n);
  suffix_min[n - 1] = v[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) suffix_min[i] = std::min(v[i], suffix_min[i + 1]);
  int prefix_max = v[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (prefix_max > v[j] && v[j] > suffix_min[j + 1]) return false;
    prefix_max = std::max(prefix_max, v[j]);
  }
  return true;
}

/// Expands the insertion tree below `p` up to size n: the digit m+1 goes
/// into every admissible slot k with ldes(p) <= k <= m, k ascending.
template <class Visit>
void grow_insertion_tree(Permutation& p, int n, Visit& visit) {
  const int m = p.size();
  if (m == n) {
    visit(std::as_const(p));
    return;
  }
  for (int k = ldes(p); k <= m; ++k) {
    auto& word = detail::PermutationAccess::values(p);
    word.insert(word.begin() + k, m + 1);
    grow_insertion_tree(p, n, visit);
    word.erase(word.begin() + k);
  }
}

/// Visits every member of T_n in insertion order. The reference passed to
/// `visit` is only valid during the call.
template <class Visit>
void for_each_T(int n, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  Permutation p = Permutation::identity(1);
  grow_insertion_tree(p, n, visit);
}

/// Visits the descendants of `root` (itself in T_m, m <= n) that lie in T_n.
/// Disjoint roots give disjoint streams; used to partition work.
template <class Visit>
void for_each_T_from(const Permutation& root, int n, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  if (root.size() > n) throw InvalidArgument("root larger than target size");
  if (!is_321_avoiding(root)) throw PatternViolation("root is not 321-avoiding");
  Permutation p = root;
  grow_insertion_tree(p, n, visit);
}

inline std::vector<Permutation> enumerate_T(int n, const Limits& limits = {}) {
  std::vector<Permutation> out;
  for_each_T(n, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

/// Visits T_n in lexicographic order. The next value is either the smallest
/// unused one or any unused value above the running maximum; anything else
/// closes a 321 with the remaining small values.
template <class Visit>
void for_each_T_lex(int n, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  Permutation p = detail::PermutationAccess::unchecked(std::vector<int>(n, 0));
  auto& word = detail::PermutationAccess::values(p);
  std::vector<bool> used(n + 2, false);
  auto rec = [&](auto& self, int pos, int hi, int lowest) -> void {
    if (pos == n) {
      visit(std::as_const(p));
      return;
    }
    auto place = [&](int v, int next_lowest) {
      used[v] = true;
      word[pos] = v;
      self(self, pos + 1, std::max(hi, v), next_lowest);
      used[v] = false;
    };
    auto advance = [&](int from) {
      while (from <= n && used[from]) ++from;
      return from;
    };
    place(lowest, advance(lowest + 1));
    for (int v = std::max(hi, lowest) + 1; v <= n; ++v)
      if (!used[v]) place(v, lowest);
  };
  rec(rec, 0, 0, 1);
}

inline void check_class_set(int n, const DescentSet& b) {
  if (b.ambient() != n) throw InvalidArgument("descent class has ambient size " +
                                              std::to_string(b.ambient()) + ", expected " +
                                              std::to_string(n));
  if (b.max() > n - 2) {
    throw InvalidArgument("descent class must lie in [n-2]; found member " +
                          std::to_string(b.max()));
  }
}

/// Visits T_n(B) = { p in T_n : Des(p^-1) restricted to [n-2] equals B }.
template <class Visit>
void for_each_T_class(int n, const DescentSet& b, Visit&& visit, const Limits& limits = {}) {
  check_size(n, limits);
  check_class_set(n, b);
  for_each_T(
      n,
      [&](const Permutation& p) {
        if (inverse_descent_set(p).restricted_to(n - 2) == b) visit(p);
      },
      limits);
}

inline std::vector<Permutation> enumerate_T_class(int n, const DescentSet& b,
                                                  const Limits& limits = {}) {
  std::vector<Permutation> out;
  for_each_T_class(n, b, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

// Text forms: compact digits for n <= 9 ("25134"), comma-separated
// otherwise ("10,2,...") or a JSON-style array ("[2,5,1,3,4]").

inline Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  } else if (text.find(',') == std::string_view::npos) {
    std::vector<int> values;
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidArgument("bad permutation digit in '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  std::vector<int> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view field = trim(text.substr(0, comma));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw InvalidArgument("bad permutation entry '" + std::string(field) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Permutation(std::move(values));
}

inline std::string to_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

/// "{}" or "{1,4}".
inline std::string to_string(const DescentSet& d) {
  std::string out = "{";
  bool first = true;
  for (int i : d.members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace avoid321
