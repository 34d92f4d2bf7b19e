#include <doctest.h>

#include "orientcalc/duality.hpp"

using namespace orientcalc;

namespace {

CoeffMatrix anti_identity(const RingPtr& A, std::size_t n) {
  CoeffMatrix m(A, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = A->one();
  return m;
}

CoeffMatrix from_rows(const RingPtr& A, std::vector<std::vector<const char*>> rows) {
  CoeffMatrix m(A, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = A->parse(rows[i][j]);
  }
  return m;
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("eta coefficients") {
  auto F = fgl_additive(6);
  auto e = eta_coeffs(F, 4);
  CHECK(e[0] == F.coeff_ring()->one());
  for (int i = 1; i <= 4; ++i) CHECK(e[i].is_zero());
  auto M = fgl_multiplicative(6);
  auto em = eta_coeffs(M, 3);
  CHECK(em[1] == M.coeff_ring()->var("beta"));
  CHECK(em[2].is_zero());
  CHECK(eta_coeffs(fgl_generic(3), 0).size() == 1);
}

TEST_CASE("duality matrix") {
  auto G = fgl_generic(4);
  const RingPtr& A = G.coeff_ring();
  CHECK(dual_matrix(G, 1) == from_rows(A, {{"0", "1"}, {"1", "-2*b1"}}));
  CHECK(dual_matrix(G, 0) == CoeffMatrix::identity(A, 1));
  auto F = fgl_additive(5);
  CHECK(dual_matrix(F, 2) == anti_identity(F.coeff_ring(), 3));
}

TEST_CASE("inverse matrix") {
  auto G = fgl_generic(4);
  const RingPtr& A = G.coeff_ring();
  // M_1^{-1} = [[-a11, 1], [1, 0]]
  CHECK(invert_matrix(dual_matrix(G, 1)) == from_rows(A, {{"2*b1", "1"}, {"1", "0"}}));
  CHECK(invert_matrix(CoeffMatrix::identity(A, 3)) == CoeffMatrix::identity(A, 3));
  auto F = fgl_additive(6);
  CHECK(invert_matrix(dual_matrix(F, 3)) == dual_matrix(F, 3));
  CoeffMatrix singular(A, 2, 2);
  singular(0, 0) = A->var("b1");
  CHECK_THROWS_AS(invert_matrix(singular), Error);
}

TEST_CASE("eta prime") {
  auto G = fgl_generic(4);
  const RingPtr& A = G.coeff_ring();
  CHECK(eta_prime_coeffs(G, 1)[1] == -G.a(1, 1));
  CHECK(eta_prime_coeffs(G, 1)[1] == A->parse("2*b1"));
  auto F = fgl_additive(6);
  auto ef = eta_prime_coeffs(F, 3);
  CHECK(ef[0] == F.coeff_ring()->one());
  for (int i = 1; i <= 3; ++i) CHECK(ef[i].is_zero());
  auto M = fgl_multiplicative(7);
  auto em = eta_prime_coeffs(M, 5);
  for (int k = 0; k <= 5; ++k) {
    CHECK(em[k] == pow(M.coeff_ring()->parse("-beta"), k));
  }
}

TEST_CASE("fundamental relation") {
  auto G = fgl_generic(6);
  for (int n = 0; n <= 4; ++n) CHECK(fundamental_relation_check(G, n).is_zero());
}

TEST_CASE("cofactor formula") {
  auto G = fgl_generic(6);
  for (int n = 0; n <= 4; ++n) {
    auto e = eta_prime_coeffs(G, n);
    for (int i = 0; i <= n; ++i) CHECK(eta_prime_cofactor(G, n, i) == e[i]);
  }
}

TEST_CASE("determinant") {
  auto G = fgl_generic(8);
  for (int n = 0; n <= 6; ++n) {
    RingElement d = determinant(dual_matrix(G, n));
    int sign = (n * (n + 1) / 2) % 2 ? -1 : 1;
    CHECK(d == G.coeff_ring()->constant(sign));
  }
}

TEST_CASE("Gysin projection vector") {
  auto F = fgl_additive(5);
  auto v = gysin_projection_vector(F, 2);
  CHECK(v.cols() == 1);
  CHECK(v(0, 0).is_zero());
  CHECK(v(1, 0).is_zero());
  CHECK(v(2, 0) == F.coeff_ring()->one());

  auto G = fgl_generic(4);
  auto g = gysin_projection_vector(G, 1);
  CHECK(g(0, 0) == -G.a(1, 1));
  CHECK(g(1, 0) == G.coeff_ring()->one());

  auto M = fgl_multiplicative(5);
  auto m = gysin_projection_vector(M, 2);
  CHECK(m(0, 0) == M.coeff_ring()->parse("beta^2"));
  CHECK(m(1, 0) == M.coeff_ring()->parse("-beta"));
  CHECK(m(2, 0) == M.coeff_ring()->one());
}

TEST_CASE("Gysin matrices") {
  auto G = fgl_generic(6);
  const RingPtr& A = G.coeff_ring();
  CHECK(pi_star_matrix(G, 0) == CoeffMatrix::identity(A, 1));
  CHECK(delta_star_matrix(G, 0) == CoeffMatrix::identity(A, 1));
  auto F = fgl_additive(4);
  CHECK(delta_star_matrix(F, 1) * pi_star_matrix(F, 1) ==
        CoeffMatrix::identity(F.coeff_ring(), 2));
  for (int n = 1; n <= 3; ++n) {
    auto p = pi_star_matrix(G, n);
    CHECK(p.rows() == static_cast<std::size_t>((n + 1) * (n + 1)));
    CHECK(delta_star_matrix(G, n) * p == CoeffMatrix::identity(A, n + 1));
  }
}

TEST_CASE("pushforward to a point") {
  auto G = fgl_generic(6);
  for (int n = 0; n <= 4; ++n) {
    auto pn = model_projspace(G.coeff_ring(), n, Convention::Dual);
    CHECK(pushforward_point(G, pn, pow(pn.gen(), n)) == G.coeff_ring()->one());
    CHECK(pushforward_point(G, pn, pn.ring->one()) == eta_prime_coeffs(G, n)[n]);
  }
  auto F = fgl_additive(5);
  auto p3 = model_projspace(F.coeff_ring(), 3, Convention::Dual);
  for (int i = 0; i < 3; ++i) CHECK(pushforward_point(F, p3, pow(p3.gen(), i)).is_zero());
}

TEST_CASE("pairing") {
  auto G = fgl_generic(8);
  const RingPtr& A = G.coeff_ring();
  CHECK(pairing_gram(G, 1) == from_rows(A, {{"2*b1", "1"}, {"1", "0"}}));
  auto F = fgl_additive(6);
  CHECK(pairing_gram(F, 3) == anti_identity(F.coeff_ring(), 4));
  for (int n = 0; n <= 6; ++n) {
    auto g = pairing_gram(G, n);
    CHECK(g == g.transpose());
    RingElement d = determinant(g);
    CHECK((d == A->one() || d == -A->one()));
  }
}

}
