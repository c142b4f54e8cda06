#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "avoid321/permutation.hpp"
#include "oracles.hpp"

using namespace avoid321;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("inverse", "[perm]") {
  CHECK(inverse(P("123")) == P("123"));
  CHECK(inverse(P("25134")) == P("31452"));
  CHECK(inverse(P("321")) == P("321"));
}

TEST_CASE("inversion number", "[perm]") {
  CHECK(inv(P("123")) == 0);
  CHECK(inv(P("25134")) == 4);
  CHECK(inv(P("321")) == 3);
}

TEST_CASE("last descent", "[perm]") {
  CHECK(ldes(P("123")) == 0);
  CHECK(ldes(P("25134")) == 2);
  CHECK(ldes(P("132")) == 2);
}

TEST_CASE("last index", "[perm]") {
  CHECK(lind(P("123")) == 3);
  CHECK(lind(P("25134")) == 2);
  CHECK(lind(P("312")) == 1);
}

TEST_CASE("descent sets", "[perm]") {
  CHECK(descent_set(P("123")).empty());
  CHECK(descent_set(P("25134")).members() == std::vector<int>{2});
  CHECK(descent_set(P("31452")).members() == std::vector<int>{1, 4});
  CHECK(inverse_descent_set(P("25134")) == descent_set(P("31452")));
}

TEST_CASE("sign", "[perm]") {
  CHECK(sign(P("123")) == 1);
  CHECK(sign(P("25134")) == 1);
  CHECK(sign(P("213")) == -1);
}

TEST_CASE("321 avoidance", "[perm]") {
  CHECK(is_321_avoiding(P("25134")));
  CHECK_FALSE(is_321_avoiding(P("321")));
  CHECK(is_321_avoiding(Permutation::identity(12)));
  CHECK(is_321_avoiding(P("14253")));
  CHECK_FALSE(is_321_avoiding(P("15324")));
}

TEST_CASE("linear 321 test agrees with the cubic scan on all of S_n", "[perm][oracle]") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      REQUIRE(is_321_avoiding(Permutation(w)) == oracle::is_321_avoiding_naive(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("statistics agree with the definitional oracles", "[perm][oracle]") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::T_by_filter(n)) {
      const auto w = oracle::word(p);
      REQUIRE(inv(p) == oracle::inversions(w));
      REQUIRE(ldes(p) == oracle::last_descent(w));
      REQUIRE(lind(p) == static_cast<int>(std::find(w.begin(), w.end(), n) - w.begin()) + 1);
      REQUIRE(descent_set(p).members() == oracle::descents(w));
      REQUIRE(inverse_descent_set(p).members() == oracle::descents(oracle::inverse_word(w)));
      REQUIRE((sign(p) == 1) == (inv(p) % 2 == 0));
    }
  }
}

TEST_CASE("enumerate_T small cases", "[perm][enum]") {
  CHECK(enumerate_T(1) == std::vector<Permutation>{P("1")});
  auto t3 = enumerate_T(3);
  std::sort(t3.begin(), t3.end());
  CHECK(t3 == std::vector<Permutation>{P("123"), P("132"), P("213"), P("231"), P("312")});
  CHECK(enumerate_T(10).size() == 16796);
}

TEST_CASE("enumerate_T uses insertion order", "[perm][enum]") {
  // 21 then 12 at n = 2; children of each parent with the slot ascending.
  CHECK(enumerate_T(2) == std::vector<Permutation>{P("21"), P("12")});
  CHECK(enumerate_T(3) == std::vector<Permutation>{P("231"), P("213"), P("312"), P("132"), P("123")});
}

TEST_CASE("enumerate_T equals the filter of S_n", "[perm][enum][oracle]") {
  for (int n = 1; n <= 8; ++n) {
    auto got = enumerate_T(n);
    std::sort(got.begin(), got.end());
    REQUIRE(std::adjacent_find(got.begin(), got.end()) == got.end());
    REQUIRE(got == oracle::T_by_filter(n));
  }
}

TEST_CASE("lexicographic generator", "[perm][enum][oracle]") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Permutation> got;
    for_each_T_lex(n, [&](const Permutation& p) { got.push_back(p); });
    REQUIRE(got == oracle::T_by_filter(n));
  }
}

TEST_CASE("counts are Catalan numbers", "[perm][enum]") {
  for (int n = 1; n <= 12; ++n) {
    std::int64_t count = 0;
    for_each_T(n, [&](const Permutation&) { ++count; });
    REQUIRE(count == oracle::catalan(n));
  }
}

TEST_CASE("subtrees partition the stream", "[perm][enum]") {
  std::multiset<Permutation> from_roots;
  for (const auto& root : enumerate_T(4))
    for_each_T_from(root, 7, [&](const Permutation& p) { from_roots.insert(p); });
  const auto all = enumerate_T(7);
  CHECK(from_roots == std::multiset<Permutation>(all.begin(), all.end()));
}

TEST_CASE("descent classes", "[perm][enum]") {
  SECTION("n = 2, B empty holds both permutations") {
    auto got = enumerate_T_class(2, DescentSet(2));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Permutation>{P("12"), P("21")});
  }
  SECTION("n = 3, B empty by brute force") {
    std::vector<Permutation> expected;
    for (const auto& p : oracle::T_by_filter(3)) {
      const auto d = oracle::descents(oracle::inverse_word(oracle::word(p)));
      if (std::find(d.begin(), d.end(), 1) == d.end()) expected.push_back(p);
    }
    auto got = enumerate_T_class(3, DescentSet(3));
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(got == std::vector<Permutation>{P("123"), P("132"), P("312")});
  }
  SECTION("classes partition T_n") {
    for (int n = 2; n <= 9; ++n) {
      std::int64_t total = 0;
      for (std::uint64_t mask = 0; mask < (1ULL << (n - 1)); mask += 2) {
        total += static_cast<std::int64_t>(enumerate_T_class(n, DescentSet(n, mask)).size());
      }
      REQUIRE(total == oracle::catalan(n));
    }
  }
  SECTION("B must lie in [n-2]") {
    CHECK_THROWS_AS(enumerate_T_class(4, DescentSet::from_members(4, std::vector<int>{3})), InvalidArgument);
    CHECK_THROWS_AS(enumerate_T_class(4, DescentSet(5)), InvalidArgument);
  }
}

TEST_CASE("last index equals last descent unless n is fixed", "[perm][property]") {
  for (int n = 1; n <= 10; ++n) {
    for_each_T(n, [&](const Permutation& p) {
      if (p(n) != n) REQUIRE(lind(p) == ldes(p));
    });
  }
}

TEST_CASE("exactly one of the two cases for the position of the largest value", "[perm][property]") {
  // Stated for the parent in T_{n-1} of the insertion step; here m = n.
  for (int n = 1; n <= 10; ++n) {
    for_each_T(n, [&](const Permutation& p) {
      const int pos = inverse(p)(n);
      const bool first = ldes(p) == pos && pos < n;
      const bool second = ldes(p) < pos && pos == n;
      REQUIRE(first != second);
    });
  }
}

TEST_CASE("inverse is an involution on S_n", "[perm][property]") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation p(w);
      REQUIRE(inverse(inverse(p)) == p);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("resource bound", "[perm][errors]") {
  CHECK_THROWS_AS(enumerate_T(17), ResourceLimit);
  CHECK_THROWS_AS(enumerate_T(6, Limits{5}), ResourceLimit);
  CHECK_THROWS_AS(enumerate_T(0), InvalidArgument);
  CHECK_NOTHROW(enumerate_T(5, Limits{5}));
}

TEST_CASE("parsing and formatting", "[perm][io]") {
  CHECK(parse_permutation("25134").values().size() == 5);
  CHECK(parse_permutation("[2,5,1,3,4]") == P("25134"));
  CHECK(parse_permutation("2, 5, 1, 3, 4") == P("25134"));
  const auto big = parse_permutation("10,1,2,3,4,5,6,7,8,9");
  CHECK(big(1) == 10);
  CHECK(to_string(big) == "10,1,2,3,4,5,6,7,8,9");
  CHECK(to_string(P("25134")) == "25134");
  CHECK(to_string(DescentSet::from_members(5, std::vector<int>{1, 4})) == "{1,4}");
  CHECK_THROWS_AS(parse_permutation("1224"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("102"), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation(""), InvalidArgument);
  CHECK_THROWS_AS(parse_permutation("1,x"), InvalidArgument);
}

TEST_CASE("descent set bookkeeping", "[perm]") {
  auto d = DescentSet::from_members(6, std::vector<int>{2, 5});
  CHECK(d.max() == 5);
  CHECK(d.min_or(6) == 2);
  CHECK(DescentSet(6).min_or(6) == 6);
  CHECK(d.restricted_to(4).members() == std::vector<int>{2});
  CHECK(d.count() == 2);
  CHECK_THROWS_AS(DescentSet::from_members(3, std::vector<int>{3}), InvalidArgument);
  CHECK_THROWS_AS(DescentSet(3, 1), InvalidArgument);
}
