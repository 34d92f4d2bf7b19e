#include <doctest.h>

#include "orientcalc/ring.hpp"

using namespace orientcalc;

namespace {

RingPtr nilpotent(std::initializer_list<std::pair<const char*, int>> vars) {
  QuotientRing::Builder b;
  for (auto [name, k] : vars) b.add_variable(name, 1, k);
  return b.build();
}

// Q[x1,x2][xi]/(xi^2 = (x1+x2) xi - x1 x2)
RingPtr quadratic_tower() {
  QuotientRing::Builder b;
  b.add_variable("x1", 1).add_variable("x2", 1).add_variable("xi", 1);
  b.add_relation("xi", 2, "(x1 + x2)*xi - x1*x2");
  return b.build();
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("normal form applies nilpotency") {
  auto R = nilpotent({{"c", 3}});
  CHECK(R->parse("c^3").is_zero());
  CHECK(R->parse("c^2 + c^5") == R->parse("c^2"));
}

TEST_CASE("monic relation rewrites once") {
  auto R = quadratic_tower();
  CHECK(R->parse("xi^2") == R->parse("(x1 + x2)*xi - x1*x2"));
}

TEST_CASE("cubic reduction agrees with interpolation at the roots") {
  auto R = quadratic_tower();
  RingElement r = R->parse("xi^3");
  CHECK(r == R->parse("((x1 + x2)^2 - x1*x2)*xi - (x1 + x2)*x1*x2"));
  // xi^2 - (x1+x2)xi + x1x2 = (xi - x1)(xi - x2), so the remainder of xi^3
  // must take the values x1^3 and x2^3 at the two roots.
  auto free = make_ring({{"x1", 1, {}}, {"x2", 1, {}}});
  for (const char* root : {"x1", "x2"}) {
    RingElement v = substitute(r, {{"xi", free->var(root)}}, free);
    CHECK(v == pow(free->var(root), 3));
  }
}

TEST_CASE("arithmetic in truncated rings") {
  auto R = nilpotent({{"c", 2}});
  CHECK((R->parse("1 + c") * R->parse("1 - c")) == R->one());
  auto R2 = nilpotent({{"c", 2}, {"d", 2}});
  CHECK(to_string(R2->var("c") * R2->var("d")) == "c*d");
  auto R3 = nilpotent({{"c", 3}, {"d", 3}});
  CHECK(pow(R3->parse("c + d"), 2) == R3->parse("c^2 + 2*c*d + d^2"));
  CHECK(to_string(pow(R3->parse("c + d"), 2)) == "c^2 + 2*c*d + d^2");
}

TEST_CASE("weights") {
  QuotientRing::Builder b;
  b.add_variable("a", -1).add_variable("c", 1, 4);
  auto R = b.build();
  CHECK(weight_of(R->parse("c^2")) == 2);
  CHECK(weight_of(R->parse("a*c^2")) == 1);
  CHECK(weight_of(R->zero()) == 0);
  CHECK(has_weight(R->zero(), 7));
  try {
    weight_of(R->parse("c + c^2"));
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
}

TEST_CASE("substitution") {
  auto R4 = nilpotent({{"c", 4}});
  auto R3 = nilpotent({{"c", 3}});
  CHECK(substitute(R4->parse("c^2"), {}, R3) == R3->parse("c^2"));
  CHECK(substitute(R4->parse("c^3"), {}, R3).is_zero());

  auto src = make_ring({{"c", 1, {}}, {"d", 1, {}}});
  auto dst = nilpotent({{"x", 3}, {"y", 3}});
  RingElement v = substitute(src->parse("c*d"),
                             {{"c", dst->parse("x + y")}, {"d", dst->var("x")}}, dst);
  CHECK(v == dst->parse("x^2 + x*y"));
}

TEST_CASE("undeclared variables are rejected") {
  auto R = nilpotent({{"c", 2}});
  CHECK_THROWS_AS(R->parse("c + q"), Error);
  try {
    R->var("q");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndeclaredVariable);
  }
}

TEST_CASE("inverting units") {
  auto R = nilpotent({{"c", 3}});
  CHECK(invert_unit(R->parse("1 + c")) == R->parse("1 - c + c^2"));
  auto R2 = nilpotent({{"c", 2}});
  CHECK(invert_unit(R2->constant(2)) == R2->parse("1/2"));
  auto Rcd = nilpotent({{"c", 2}, {"d", 2}});
  RingElement u = Rcd->parse("1 + c + d");
  RingElement inv = invert_unit(u);
  CHECK(inv == Rcd->parse("1 - c - d + 2*c*d"));
  CHECK(inv * u == Rcd->one());

  try {
    invert_unit(R->var("c"));
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
  auto free = make_ring({{"c", 1, {}}});
  try {
    invert_unit(free->parse("1 + c"));
    FAIL("expected NonTerminating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTerminating);
  }
}

TEST_CASE("augmentation") {
  QuotientRing::Builder b;
  b.add_variable("a11", -1).add_variable("c", 1, 3);
  auto R = b.build();
  CHECK(augmentation(R->parse("3 + c")) == 3);
  CHECK(augmentation(R->parse("c^2")) == 0);
  CHECK(augmentation(R->parse("1 + a11*c")) == 1);
}

TEST_CASE("evaluating series") {
  auto R = nilpotent({{"c", 3}});
  std::vector<RingElement> geometric{R->zero(), R->one(), R->one(), R->one(), R->one()};
  CHECK(eval_series(geometric, R->var("c")) == R->parse("c + c^2"));
  std::vector<RingElement> expish{R->zero(), R->one(), R->parse("1/2")};
  CHECK(eval_series(expish, R->var("c")) == R->parse("c + 1/2*c^2"));
}

TEST_CASE("two-sided truncation") {
  QuotientRing::Builder b;
  b.add_variable("b1", -1).add_variable("x", 1);
  b.set_truncation(3);
  auto R = b.build();
  CHECK(R->parse("x^4").is_zero());
  CHECK(R->parse("b1^4").is_zero());
  CHECK(R->parse("b1^3*x^3") == R->monomial([&] {
          Monomial m;
          m.set(0, 3);
          m.set(1, 3);
          return m;
        }()));
  CHECK(nilpotency_order(R->var("x")) == 4);
}

TEST_CASE("storage order and printing") {
  auto R = make_ring({{"c", 1, {}}, {"d", 1, {}}});
  CHECK(to_string(R->parse("d + c + c*d + 1")) == "1 + c + d + c*d");
  CHECK(to_string(R->parse("-c")) == "-c");
  CHECK(to_string(R->parse("3*c - 1/2*d^2")) == "3*c - 1/2*d^2");
  CHECK(to_string(R->zero()) == "0");
}

TEST_CASE("ring mismatch") {
  auto R = nilpotent({{"c", 2}});
  auto S = nilpotent({{"c", 3}});
  try {
    (void)(R->var("c") + S->var("c"));
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
  // Structurally equal rings interoperate.
  auto R2 = nilpotent({{"c", 2}});
  CHECK((R->var("c") + R2->var("c")) == R->parse("2*c"));
}

TEST_CASE("parser errors") {
  auto R = nilpotent({{"c", 4}});
  for (const char* bad : {"c +", "(c", "c^", "c^-1", "c / c", "2 $ c"}) {
    CAPTURE(bad);
    try {
      R->parse(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
  CHECK(R->parse("2c") == R->parse("2*c"));
  CHECK(R->parse("c/2") == R->parse("1/2*c"));
}

}
