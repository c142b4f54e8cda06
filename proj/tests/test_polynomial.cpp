#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "avoid321/polynomial.hpp"
#include "avoid321/serialize.hpp"

using namespace avoid321;

namespace {

LaurentPoly Q(const char* s) { return parse_polynomial(s); }

const Variable kVars[] = {Variable::x(), Variable::y(), Variable::z(), Variable::t(1), Variable::t(2)};

/// Small random polynomial; exponents in [lo, 3].
LaurentPoly random_poly(std::mt19937& rng, int lo = 0, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> exp(lo, 3);
  LaurentPoly p;
  for (int k = terms(rng); k > 0; --k) {
    std::vector<Monomial::Factor> f;
    for (auto v : kVars) f.emplace_back(v, exp(rng));
    p.add_term(Monomial::from_factors(std::move(f)), coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical string examples", "[poly]") {
  const auto x = LaurentPoly::variable(Variable::x());
  const auto y = LaurentPoly::variable(Variable::y());
  const auto z = LaurentPoly::variable(Variable::z());
  const auto t1 = LaurentPoly::variable(Variable::t(1));
  CHECK(canonical_string(LaurentPoly()) == "0");
  CHECK(canonical_string(LaurentPoly(1) - y) == "1 - y");
  CHECK(canonical_string(z * z + t1 * x * y * z) == "z^2 + t1*x*y*z");
  CHECK(canonical_string(LaurentPoly(-3) * x * x) == "-3*x^2");
  CHECK(canonical_string(x + y + z + t1) == "z + y + x + t1");
  CHECK(canonical_string(LaurentPoly::variable(Variable::x(), -2)) == "x^-2");
}

TEST_CASE("multiplication and cancellation", "[poly]") {
  CHECK(Q("(x - y)*(x + y)") == Q("x^2 - y^2"));
  CHECK(Q("(1 - y)^3") == Q("1 - 3*y + 3*y^2 - y^3"));
  CHECK(Q("x - x").is_zero());
  CHECK(Q("x*x^-1") == LaurentPoly(1));
}

TEST_CASE("substitution", "[poly]") {
  CHECK(substitute(Q("x^2*y + y"), Variable::x(), Q("x^-1*y*z")) == Q("x^-2*y^3*z^2 + y"));
  CHECK(substitute(Q("x^3 + x*y"), Variable::x(), -1) == Q("-1 - y"));
  CHECK(substitute(Q("z^2 + t1*x*y*z"), Variable::t(1), 1) == Q("z^2 + x*y*z"));
  CHECK(substitute(Q("x^-1 + y"), Variable::x(), -1) == Q("-1 + y"));
  CHECK_THROWS_AS(substitute(Q("x^-1"), Variable::x(), 0), DomainError);
  CHECK_THROWS_AS(substitute(Q("x^-1"), Variable::x(), 2), DomainError);
  CHECK_THROWS_AS(substitute(Q("x"), Variable::x(), Q("x + y")), InvalidArgument);
  CHECK(substitute_all_t(Q("t1 + t2*t3 + x"), 1) == Q("2 + x"));
}

TEST_CASE("simultaneous substitution through a fresh variable", "[poly]") {
  // y <- z, z <- y done in one step must swap, not collapse.
  const auto p = Q("y^2*z");
  const auto tmp = Variable::t(99);
  auto q = substitute(p, Variable::y(), LaurentPoly::variable(tmp));
  q = substitute(q, Variable::z(), LaurentPoly::variable(Variable::y()));
  q = substitute(q, tmp, LaurentPoly::variable(Variable::z()));
  CHECK(q == Q("y*z^2"));
}

TEST_CASE("exact division", "[poly]") {
  CHECK(divide_exact(Q("x^2 - y^2"), Q("x - y")) == Q("x + y"));
  CHECK(divide_exact(Q("x^3*y - x*y^3"), Q("x*y")) == Q("x^2 - y^2"));
  CHECK(divide_exact(Q("x^-1 - y*x^-2"), Q("x - y")) == Q("x^-2"));
  CHECK(divide_exact(Q("6*x"), Q("3")) == Q("2*x"));
  CHECK(divide_exact(Q("x"), Q("y")) == Q("x*y^-1"));
  // y is a unit in the Laurent ring, so this quotient exists.
  CHECK(divide_exact(Q("x + 1"), Q("y")) == Q("x*y^-1 + y^-1"));
  CHECK_THROWS_AS(divide_exact(Q("x + 1"), Q("x - y")), DivisibilityError);
  CHECK_THROWS_AS(divide_exact(Q("x"), Q("2")), DivisibilityError);
  CHECK_THROWS_AS(divide_exact(Q("x"), LaurentPoly()), DivisibilityError);
  CHECK(divide_exact(LaurentPoly(), Q("x - y")).is_zero());
}

TEST_CASE("parser", "[poly][io]") {
  CHECK(Q("2*t3*x^2") == LaurentPoly(Monomial::from_factors({{Variable::t(3), 1}, {Variable::x(), 2}}), 2));
  CHECK(Q("-(x + 1)") == Q("-x - 1"));
  CHECK(Q("0").is_zero());
  CHECK_THROWS_AS(Q("x/y"), InvalidArgument);
  CHECK_THROWS_AS(Q("x +"), InvalidArgument);
  CHECK_THROWS_AS(Q("w"), InvalidArgument);
  CHECK_THROWS_AS(Q("t0"), InvalidArgument);
  CHECK_THROWS_AS(Q("(x"), InvalidArgument);
}

TEST_CASE("ring laws on random polynomials", "[poly][property]") {
  std::mt19937 rng(20260321);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng, -2), b = random_poly(rng, -2), c = random_poly(rng, -2);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("division undoes multiplication", "[poly][property]") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 1000) {
    const auto a = random_poly(rng, -2);
    const auto b = random_poly(rng, -2, 3);
    if (b.is_zero()) continue;
    REQUIRE(divide_exact(a * b, b) == a);
    ++checked;
  }
}

TEST_CASE("substitution is a ring homomorphism", "[poly][property]") {
  std::mt19937 rng(11);
  const LaurentPoly images[] = {Q("x^-1*y*z"), Q("-1"), Q("1"), Q("x^2"), Q("-y")};
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng, -1), b = random_poly(rng, -1);
    const auto& img = images[i % 5];
    const auto s = [&](const LaurentPoly& p) { return substitute(p, Variable::x(), img); };
    REQUIRE(s(a + b) == s(a) + s(b));
    REQUIRE(s(a * b) == s(a) * s(b));
  }
}

TEST_CASE("canonical strings parse back", "[poly][io][property]") {
  std::mt19937 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_poly(rng, -2);
    REQUIRE(Q(canonical_string(a).c_str()) == a);
  }
}

TEST_CASE("canonical order is total degree then exponent vector", "[poly]") {
  const auto p = Q("x*y + z + 1 + t1*z + x^2 + y");
  std::vector<std::string> order;
  for (const auto& [m, c] : p.terms()) order.push_back(canonical_string(LaurentPoly(m, c)));
  CHECK(order == std::vector<std::string>{"1", "z", "y", "x*y", "x^2", "t1*z"});
}

TEST_CASE("overflow is detected", "[poly][errors]") {
  const auto big = LaurentPoly(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + LaurentPoly(1), ArithmeticOverflow);
  CHECK_THROWS_AS(big * LaurentPoly(2), ArithmeticOverflow);
  CHECK_THROWS_AS(Q("(1 + x)^200"), ArithmeticOverflow);
}

TEST_CASE("JSON round trip", "[poly][io]") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, -2);
    const json j = a;
    REQUIRE(poly_from_json(json::parse(j.dump())) == a);
  }
  CHECK(json(Q("1 - y")).dump() == R"({"terms":[{"coeff":1,"exp":{}},{"coeff":-1,"exp":{"y":1}}]})");
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"terms":[{"coeff":1,"exp":{"w":1}}]})")), InvalidArgument);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"nope":1})")), InvalidArgument);
}
