#pragma once

// One-dimensional commutative formal group laws over a graded coefficient
// ring A, truncated at total degree D.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orientcalc/ring.hpp"

namespace orientcalc {

/// Power series s_0 + s_1 x + ... + s_D x^D with coefficients in A.
struct UnivariateSeries {
  RingPtr coeff_ring;
  std::vector<RingElement> coeffs;

  const RingElement& operator[](std::size_t k) const { return coeffs.at(k); }
  std::size_t size() const noexcept { return coeffs.size(); }
};

enum class FglKind { Additive, Multiplicative, Log, Explicit };

struct AxiomViolation {
  std::string axiom;  // "unit", "commutativity", "associativity", "weight"
  std::string where;  // coefficient label, e.g. "a_{1,2}" or "x^1*y^2*z^0"
  RingElement defect;
};

class FormalGroupLaw {
 public:
  using Coeffs = std::map<std::pair<int, int>, RingElement>;

  /// Takes a_{ij} for 1 <= i+j <= D; missing entries are zero. `exact`
  /// marks laws that are polynomial of degree <= D, so evaluation never
  /// loses terms. Coefficients must be homogeneous of weight -(i+j-1).
  FormalGroupLaw(FglKind kind, RingPtr coeff_ring, int degree, Coeffs coeffs,
                 bool exact, std::vector<RingElement> log_coeffs = {});

  FglKind kind() const noexcept { return kind_; }
  const RingPtr& coeff_ring() const noexcept { return coeff_ring_; }
  int degree() const noexcept { return degree_; }
  bool exact() const noexcept { return exact_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  /// b_1, b_2, ... for log-parametrized laws.
  const std::vector<RingElement>& log_coeffs() const noexcept { return log_; }

  /// a_{ij}; zero outside the stored range.
  RingElement a(int i, int j) const;

  /// A[x,y,z] with x,y,z of weight 1, truncated at D.
  const RingPtr& series_ring() const noexcept { return series_ring_; }

  /// F(u, v) in the ring of u. Throws TruncationTooSmall when the law is
  /// not exact and terms of degree > D could survive in that ring.
  RingElement operator()(const RingElement& u, const RingElement& v) const;

  /// Throws TruncationTooSmall unless every product of D+1 of the given
  /// weight-positive elements vanishes.
  void require_exact_on(const std::vector<RingElement>& args) const;

 private:
  FglKind kind_;
  RingPtr coeff_ring_;
  int degree_;
  Coeffs coeffs_;
  bool exact_;
  std::vector<RingElement> log_;
  RingPtr series_ring_;
};

FormalGroupLaw fgl_additive(int degree);
/// Over Q[beta], beta of weight -1: F = x + y + beta*x*y.
FormalGroupLaw fgl_multiplicative(int degree);
/// F(x,y) = exp(log x + log y) with log x = x + sum b_i x^{i+1}.
FormalGroupLaw fgl_from_log(const std::vector<RingElement>& b, int degree);
/// Log law with free symbols b_1..b_W (weight -i) and D = W + 1.
FormalGroupLaw fgl_generic(int w);

std::vector<AxiomViolation> check_axioms(const FormalGroupLaw& F);

UnivariateSeries formal_inverse(const FormalGroupLaw& F);
UnivariateSeries n_series(const FormalGroupLaw& F, int n);
/// omega(x) = dF/dy(x, 0) = sum a_{i,1} x^i, i < D.
UnivariateSeries omega_series(const FormalGroupLaw& F);

RingElement formal_sum(const FormalGroupLaw& F, const RingElement& a,
                       const RingElement& b);
/// s(e) for a series from F, with the exactness check applied to e.
RingElement apply_series(const FormalGroupLaw& F, const UnivariateSeries& s,
                         const RingElement& e);

/// sum s_k x^k in the series ring, x named `var`.
RingElement series_element(const FormalGroupLaw& F, const UnivariateSeries& s,
                           std::string_view var = "x");
/// Coefficients of x^0..x^D of an element of the series ring.
UnivariateSeries series_from_element(const FormalGroupLaw& F,
                                     const RingElement& e,
                                     std::string_view var = "x");

std::string to_string(const UnivariateSeries& s, std::string_view var = "x");

}  // namespace orientcalc
