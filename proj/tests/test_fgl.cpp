#include <doctest.h>

#include "orientcalc/fgl.hpp"

using namespace orientcalc;

namespace {

// Dense univariate series over Q, used as an oracle for numeric logs.
using Dense = std::vector<Rational>;

Dense dense_mul(const Dense& a, const Dense& b, std::size_t n) {
  Dense out(n, 0);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// f(g(x)) with g(0) = 0.
Dense dense_compose(const Dense& f, const Dense& g, std::size_t n) {
  Dense out(n, 0);
  Dense p(n, 0);
  p[0] = 1;
  for (std::size_t k = 0; k < f.size() && k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) out[i] += f[k] * p[i];
    p = dense_mul(p, g, n);
  }
  return out;
}

// Compositional inverse by fixed-point iteration g <- x - (f(g) - g).
Dense dense_reverse(const Dense& f, std::size_t n) {
  Dense g(n, 0);
  g[1] = 1;
  for (std::size_t it = 0; it < n; ++it) {
    Dense fg = dense_compose(f, g, n);
    for (std::size_t i = 0; i < n; ++i) g[i] -= fg[i] - (i == 1 ? 1 : 0);
  }
  return g;
}

}  // namespace

TEST_SUITE("fgl") {

TEST_CASE("additive law") {
  FormalGroupLaw F = fgl_additive(3);
  CHECK(F.coeffs().size() == 2);
  CHECK(F.a(1, 0) == F.coeff_ring()->one());
  CHECK(F.a(0, 1) == F.coeff_ring()->one());
  CHECK(check_axioms(F).empty());
  CHECK(to_string(formal_inverse(F)) == "-x");
  CHECK(to_string(n_series(F, 5)) == "5*x");
  CHECK(to_string(omega_series(F)) == "1");
}

TEST_CASE("multiplicative law") {
  FormalGroupLaw F = fgl_multiplicative(6);
  const RingPtr& A = F.coeff_ring();
  CHECK(F.a(1, 1) == A->var("beta"));
  CHECK(F.a(2, 1).is_zero());
  CHECK(check_axioms(F).empty());
  CHECK(to_string(n_series(F, 2)) == "2*x + beta*x^2");
  CHECK(to_string(n_series(F, 3)) == "3*x + 3*beta*x^2 + beta^2*x^3");
  CHECK(to_string(omega_series(F)) == "1 + beta*x");

  // m(x) = -x / (1 + beta x)
  auto m = formal_inverse(F);
  for (int k = 1; k < 6; ++k) {
    RingElement expected = pow(A->var("beta"), k - 1) * Rational(k % 2 ? -1 : 1);
    CHECK(m[k] == expected);
  }
  RingElement x = F.series_ring()->var("x");
  CHECK(F(x, series_element(F, m)).is_zero());
}

TEST_CASE("one series is the identity") {
  for (const auto& F : {fgl_additive(5), fgl_multiplicative(5), fgl_generic(4)}) {
    auto s = n_series(F, 1);
    CHECK(to_string(s) == "x");
    CHECK(n_series(F, 0)[1].is_zero());
  }
}

TEST_CASE("formal sums in small rings") {
  auto F = fgl_additive(4);
  QuotientRing::Builder b;
  b.add_variable("c", 1, 2).add_variable("d", 1, 2);
  auto R = b.build();
  CHECK(formal_sum(F, R->var("c"), R->var("d")) == R->parse("c + d"));

  auto G = fgl_multiplicative(4);
  auto b2 = G.coeff_ring()->extend();
  b2.add_variable("c", 1, 2).add_variable("d", 1, 2);
  auto R2 = b2.build();
  CHECK(to_string(formal_sum(G, R2->var("c"), R2->var("d"))) == "c + d + beta*c*d");

  auto H = fgl_generic(4);
  auto b3 = H.coeff_ring()->extend();
  b3.add_variable("c", 1, 4);
  auto R3 = b3.build();
  RingElement c = R3->var("c");
  CHECK(formal_sum(H, c, apply_series(H, formal_inverse(H), c)).is_zero());
}

TEST_CASE("log-parametrised laws") {
  auto G = fgl_generic(5);
  const RingPtr& A = G.coeff_ring();
  CHECK(G.degree() == 6);
  CHECK(G.a(1, 1) == A->parse("-2*b1"));
  CHECK(check_axioms(G).empty());

  // b = 0 gives the additive law.
  auto Q = make_ring({});
  auto Z = fgl_from_log(std::vector<RingElement>(4, Q->zero()), 5);
  for (const auto& [ij, c] : Z.coeffs()) {
    CHECK(ij.first + ij.second == 1);
  }
  CHECK_THROWS_AS(fgl_from_log({Q->zero()}, 5), Error);
}

TEST_CASE("formal inverse of a numeric log matches exp(-log x)") {
  // log x = x + x^2/3 + x^3/4 + ...
  auto Q = make_ring({});
  const int D = 7;
  std::vector<RingElement> b;
  Dense log(D + 1, 0);
  log[1] = 1;
  for (int i = 1; i < D; ++i) {
    Rational bi(1, i + 2);
    bi.canonicalize();
    b.push_back(Q->constant(bi));
    log[i + 1] = bi;
  }
  auto F = fgl_from_log(b, D);
  Dense exp = dense_reverse(log, D + 1);
  Dense neg(D + 1, 0);
  for (int i = 0; i <= D; ++i) neg[i] = -log[i];
  Dense m = dense_compose(exp, neg, D + 1);
  auto inv = formal_inverse(F);
  for (int k = 0; k <= D; ++k) {
    CAPTURE(k);
    CHECK(augmentation(inv[k]) == m[k]);
  }
}

TEST_CASE("broken symmetry is reported") {
  QuotientRing::Builder b;
  b.add_variable("a", -1);
  auto A = b.build();
  FormalGroupLaw::Coeffs c{{{1, 0}, A->one()}, {{0, 1}, A->one()}, {{2, 1}, A->parse("a^2")}};
  FormalGroupLaw F(FglKind::Explicit, A, 3, c, false);
  auto v = check_axioms(F);
  REQUIRE_FALSE(v.empty());
  bool found = false;
  for (const auto& e : v) {
    if (e.axiom == "commutativity") {
      found = true;
      CHECK(!e.defect.is_zero());
    }
  }
  CHECK(found);
}

TEST_CASE("coefficients outside the degree bound are rejected") {
  auto Q = make_ring({});
  FormalGroupLaw::Coeffs c{{{1, 0}, Q->one()}, {{0, 1}, Q->one()}, {{3, 1}, Q->one()}};
  CHECK_THROWS_AS(FormalGroupLaw(FglKind::Explicit, Q, 3, c, false), Error);
}

TEST_CASE("negative n-series") {
  auto F = fgl_multiplicative(5);
  auto S = F.series_ring();
  RingElement x = S->var("x");
  RingElement m2 = series_element(F, n_series(F, -2));
  CHECK(F(series_element(F, n_series(F, 2)), m2).is_zero());
  CHECK(series_element(F, n_series(F, -1)) == series_element(F, formal_inverse(F)));
  (void)x;
}

TEST_CASE("truncation guard") {
  auto G = fgl_generic(2);  // D = 3
  QuotientRing::Builder b = G.coeff_ring()->extend();
  b.add_variable("c", 1, 6);
  b.set_truncation(5);
  auto R = b.build();
  try {
    formal_sum(G, R->var("c"), R->var("c"));
    FAIL("expected TruncationTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationTooSmall);
  }
  // Exact laws never complain.
  auto F = fgl_multiplicative(2);
  auto b2 = F.coeff_ring()->extend();
  b2.add_variable("c", 1, 6);
  auto R2 = b2.build();
  CHECK(formal_sum(F, R2->var("c"), R2->var("c")) == R2->parse("2*c + beta*c^2"));
}

}
