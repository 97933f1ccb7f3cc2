#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contactlie/scalar.hpp"

using namespace contactlie;

namespace {

ScalarContext::Ptr golden_ctx() {
  // f with f^2 - f - 1 = 0, plus two free parameters
  std::vector<ParamInfo> ps;
  ps.push_back({"f", parse_relation("f^2-f-1", "f"), -1});
  ps.push_back({"lambda4", {}, -1});
  ps.push_back({"d4", {}, -1});
  return ScalarContext::make(std::move(ps));
}

Scalar random_scalar(ScalarContext::Ptr ctx, std::mt19937_64& rng, int nterms = 4) {
  std::uniform_int_distribution<int> ed(0, 2);
  Scalar s = Scalar::zero(ctx);
  for (int t = 0; t < nterms; ++t) {
    Scalar term = Scalar::constant(random_rational(rng, 5, 3), ctx);
    for (std::size_t i = 0; i < ctx->size(); ++i)
      term = term * Scalar::parameter(ctx->param(i).name, ctx).pow(unsigned(ed(rng)));
    s = s + term;
  }
  return s;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat_from_string("-1/2") == rat(-1, 2));
  CHECK(rat_to_string(rat(-3, 6)) == "-1/2");
  CHECK_THROWS(rat_from_string("1/x"));
}

TEST_CASE("golden ratio relation reduces products") {
  auto ctx = golden_ctx();
  Scalar f = Scalar::parameter("f", ctx);
  // f*f -> f + 1
  Scalar f2 = f * f;
  CHECK(f2 == f + Scalar::one(ctx));
  // (f*f) - f - 1 is exactly zero
  CHECK((f * f - f - Scalar::one(ctx)).is_zero());
  // higher powers stay reduced: f^3 = f*f^2 = f(f+1) = f^2 + f = 2f + 1
  CHECK(f.pow(3) == f * Scalar::constant(2, ctx) + Scalar::one(ctx));
}

TEST_CASE("product with no relation expands") {
  auto ctx = golden_ctx();
  Scalar l = Scalar::parameter("lambda4", ctx);
  Scalar d = Scalar::parameter("d4", ctx);
  CHECK((l + d) * (l - d) == l * l - d * d);
}

TEST_CASE("additive identity and parse examples") {
  auto ctx = golden_ctx();
  Scalar x = Scalar::parameter("lambda4", ctx);
  CHECK(x + Scalar::zero(ctx) == x);
  CHECK(parse_scalar("-1/2", ctx) == Scalar::constant(rat(-1, 2), ctx));
  CHECK(parse_scalar("0", ctx).is_zero());
  CHECK(parse_scalar("lambda4*(d4+1) - lambda4*d4", ctx) == x);
}

TEST_CASE("parse errors carry positions") {
  auto ctx = golden_ctx();
  CHECK_THROWS_AS(parse_scalar("lambda4 + ", ctx), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("unknown1", ctx), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", ctx), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("(lambda4", ctx), ScalarParseError);
}

TEST_CASE("substitution") {
  auto ctx = golden_ctx();
  Scalar l = Scalar::parameter("lambda4", ctx);
  Scalar d = Scalar::parameter("d4", ctx);
  Scalar expr = l * l - d * d;
  CHECK(expr.substitute_rationals({{"lambda4", rat(2)}, {"d4", rat(1)}}) ==
        Scalar::constant(3, ctx));
  CHECK(l.substitute({}) == l);
  // eliminate d8 := d4 + d6 style substitution
  auto ctx2 = ScalarContext::make_simple({"d4", "d6", "d8"});
  Scalar e = parse_scalar("d4+d6-d8", ctx2);
  CHECK(e.substitute({{"d8", parse_scalar("d4+d6", ctx2)}}).is_zero());
}

TEST_CASE("reciprocal pair keeps 1/d polynomial") {
  std::vector<ParamInfo> ps;
  ps.push_back({"d", {}, 1});
  ps.push_back({"dinv", {}, 0});
  auto ctx = ScalarContext::make(std::move(ps));
  Scalar d = Scalar::parameter("d", ctx);
  Scalar dinv = Scalar::parameter("dinv", ctx);
  CHECK(d * dinv == Scalar::one(ctx));
  CHECK((d * d * dinv) == d);
  Scalar one_plus_ed = Scalar::one(ctx) + (-dinv) * d;  // e = -dinv
  CHECK(one_plus_ed.is_zero());
}

TEST_CASE("ring axioms on random scalars") {
  auto ctx = golden_ctx();
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_scalar(ctx, rng);
    Scalar b = random_scalar(ctx, rng);
    Scalar c = random_scalar(ctx, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("print/parse round trip is a fixed point") {
  auto ctx = golden_ctx();
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(ctx, rng);
    std::string s1 = a.to_string();
    Scalar b = parse_scalar(s1, ctx);
    CHECK(a == b);
    CHECK(b.to_string() == s1);
  }
}

TEST_CASE("context mismatch is an error") {
  auto ctx1 = ScalarContext::make_simple({"a"});
  auto ctx2 = ScalarContext::make_simple({"b"});
  Scalar x = Scalar::parameter("a", ctx1);
  Scalar y = Scalar::parameter("b", ctx2);
  CHECK_THROWS_AS(x + y, ScalarError);
  // same content in two instances is compatible
  auto ctx3 = ScalarContext::make_simple({"a"});
  CHECK(Scalar::parameter("a", ctx3) == x);
}

TEST_CASE("relation parse validation") {
  CHECK_THROWS(parse_relation("f-1", "f"));      // degree 1
  CHECK_THROWS(parse_relation("2*f^2-1", "f"));  // not monic
  auto tail = parse_relation("f^2-f-1", "f");
  REQUIRE(tail.size() == 2);
  CHECK(tail[0] == 1);  // x^2 = x + 1
  CHECK(tail[1] == 1);
}
