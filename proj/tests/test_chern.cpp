#include <doctest.h>

#include "orientcalc/chern.hpp"

using namespace orientcalc;

namespace {

RingPtr roots_ring(std::initializer_list<const char*> names, int truncation) {
  QuotientRing::Builder b;
  for (const char* n : names) b.add_variable(n, 1);
  b.set_truncation(truncation);
  return b.build();
}

}  // namespace

TEST_SUITE("chern") {

TEST_CASE("elementary symmetric functions") {
  auto R = roots_ring({"x", "y"}, 4);
  auto e1 = elementary_from_roots({R->var("x")});
  CHECK(e1 == std::vector<RingElement>{R->var("x")});
  auto e2 = elementary_from_roots({R->var("x"), R->var("y")});
  CHECK(e2[0] == R->parse("x + y"));
  CHECK(e2[1] == R->parse("x*y"));
  auto e3 = elementary_from_roots({R->var("x"), R->var("x")});
  CHECK(e3[0] == R->parse("2*x"));
  CHECK(e3[1] == R->parse("x^2"));
}

TEST_CASE("fundamental theorem of symmetric polynomials") {
  auto R = roots_ring({"r1", "r2"}, 6);
  std::vector<std::string> roots{"r1", "r2"};
  RingElement q = express_in_elementary(R->parse("r1^2 + r2^2"), roots);
  CHECK(q == q.ring()->parse("e1^2 - 2*e2"));
  CHECK(express_in_elementary(R->parse("r1*r2"), roots) == q.ring()->parse("e2"));
  CHECK(express_in_elementary(R->parse("r1^2*r2 + r1*r2^2"), roots) ==
        q.ring()->parse("e1*e2"));
  try {
    express_in_elementary(R->parse("r1"), roots);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
}

TEST_CASE("elementary expressions keep coefficient variables") {
  QuotientRing::Builder b;
  b.add_variable("beta", -1).add_variable("r1", 1).add_variable("r2", 1);
  b.set_truncation(6);
  auto R = b.build();
  RingElement q = express_in_elementary(R->parse("beta*r1*r2 + r1 + r2"), {"r1", "r2"}, "c");
  CHECK(q == q.ring()->parse("beta*c2 + c1"));
}

TEST_CASE("Whitney sum") {
  auto R = roots_ring({"x", "y"}, 4);
  auto s = whitney_total(BundleData::from_roots({R->var("x")}),
                         BundleData::from_roots({R->var("y")}));
  CHECK(s.rank() == 2);
  CHECK(s.chern(1) == R->parse("x + y"));
  CHECK(s.chern(2) == R->parse("x*y"));

  auto E = BundleData::from_classes({R->parse("x"), R->parse("x*y")});
  auto t = whitney_total(E, BundleData::trivial(R, 1));
  CHECK(t.rank() == 3);
  CHECK(t.total() == E.total());

  QuotientRing::Builder b;
  b.add_variable("x", 1, 2).add_variable("y", 1, 2);
  auto N = b.build();
  auto u = whitney_total(BundleData::from_classes({N->var("x")}),
                         BundleData::from_classes({N->var("y")}));
  CHECK(u.chern(1) == N->parse("x + y"));
  CHECK(u.chern(2) == N->parse("x*y"));
}

TEST_CASE("dual bundles") {
  auto F = fgl_additive(5);
  auto R = roots_ring({"x", "y"}, 4);
  auto d = dual_bundle(F, BundleData::from_roots({R->var("x")}));
  CHECK(d.data()[0] == R->parse("-x"));

  auto G = fgl_multiplicative(5);
  auto b = G.coeff_ring()->extend();
  b.add_variable("x", 1, 4);
  auto RG = b.build();
  auto dg = dual_bundle(G, BundleData::from_roots({RG->var("x")}));
  CHECK(dg.data()[0] == RG->parse("-x + beta*x^2 - beta^2*x^3"));

  // Rank 2 in classes form: (c1, c2) -> (-c1, c2).
  QuotientRing::Builder cb;
  cb.add_variable("c1", 1).add_variable("c2", 2);
  cb.set_truncation(4);
  auto C = cb.build();
  auto dc = dual_bundle(F, BundleData::from_classes({C->var("c1"), C->var("c2")}));
  CHECK(dc.chern(1) == C->parse("-c1"));
  CHECK(dc.chern(2) == C->parse("c2"));
}

TEST_CASE("twisting by a line bundle") {
  auto F = fgl_additive(5);
  QuotientRing::Builder cb;
  cb.add_variable("l", 1).add_variable("c1", 1).add_variable("c2", 2);
  cb.set_truncation(4);
  auto C = cb.build();
  auto E = BundleData::from_classes({C->var("c1"), C->var("c2")});
  auto t = twist_by_line(F, C->var("l"), E);
  CHECK(t.chern(2) == C->parse("l^2 + c1*l + c2"));
  auto same = twist_by_line(F, C->zero(), E);
  CHECK(same.classes() == E.classes());

  auto G = fgl_multiplicative(5);
  auto b = G.coeff_ring()->extend();
  b.add_variable("l", 1).add_variable("x", 1);
  b.set_truncation(4);
  auto RG = b.build();
  auto tg = twist_by_line(G, RG->var("l"), BundleData::from_roots({RG->var("x")}));
  CHECK(tg.chern(1) == RG->parse("l + x + beta*l*x"));
}

TEST_CASE("twisting agrees between roots and classes") {
  auto G = fgl_generic(5);
  auto b = G.coeff_ring()->extend();
  b.add_variable("l", 1).add_variable("x1", 1).add_variable("x2", 1);
  b.set_truncation(6);
  auto R = b.build();
  auto split = BundleData::from_roots({R->var("x1"), R->var("x2")});
  auto classes = BundleData::from_classes(split.classes());
  auto a = twist_by_line(G, R->var("l"), split);
  auto c = twist_by_line(G, R->var("l"), classes);
  CHECK(a.classes() == c.classes());
}

TEST_CASE("quotient bundles") {
  QuotientRing::Builder b;
  b.add_variable("e1", 1).add_variable("e2", 2).add_variable("xi", 1, 3);
  b.set_truncation(6);
  auto R = b.build();
  auto big = BundleData::from_classes({R->var("e1"), R->var("e2")});
  auto q = quotient_chern(big, BundleData::from_roots({R->var("xi")}));
  CHECK(q.rank() == 1);
  RingElement expected = R->parse("(1 + e1 + e2)*(1 - xi + xi^2)");
  CHECK(q.chern(1) == homogeneous_part(expected, 1));
  CHECK(classes_from_total(expected, 2).chern(2) == homogeneous_part(expected, 2));
  auto same = quotient_chern(big, BundleData::trivial(R, 0));
  CHECK(same.classes() == big.classes());
}

TEST_CASE("quotient classes multiply back") {
  QuotientRing::Builder b;
  b.add_variable("x", 1).add_variable("xi", 1);
  b.add_relation("xi", 2, "x*xi");
  b.set_truncation(4);
  auto R = b.build();
  auto big = BundleData::from_roots({R->var("x"), R->zero()});
  auto sub = BundleData::from_roots({R->var("xi")});
  auto q = quotient_chern(big, sub);
  CHECK(q.total() * sub.total() == big.total());
}

}
