#pragma once

// Ring models of P^n, P^n x P^m, projective bundles and projective
// completions, together with Thom and diagonal classes.

#include <optional>
#include <string>
#include <vector>

#include "orientcalc/chern.hpp"
#include "orientcalc/fgl.hpp"

namespace orientcalc {

/// CANONICAL: the generator is c_1(L) of the tautological line bundle.
/// DUAL: the generator is c_1(L^dual) = m(c_1(L)).
enum class Convention { Canonical, Dual };

struct Generator {
  std::string name;
  Convention convention;
};

enum class ModelKind { Point, ProjSpace, Product, ProjBundle, ThomModel };

struct CohomologyModel {
  RingPtr ring;
  RingPtr coeff_ring;
  ModelKind kind = ModelKind::Point;
  std::vector<int> dims;  // n for ProjSpace, (n, m) for Product
  std::vector<Generator> generators;
  std::optional<BundleData> bundle;  // ProjBundle / ThomModel only

  RingElement gen(std::size_t i = 0) const {
    return ring->var(generators.at(i).name);
  }
};

CohomologyModel model_point(const RingPtr& coeff_ring);
/// A[g]/(g^{n+1}); the generator is named c.
CohomologyModel model_projspace(const RingPtr& coeff_ring, int n,
                                Convention conv, const std::string& name = "c");
/// A[c, d]/(c^{n+1}, d^{m+1}).
CohomologyModel model_product(const RingPtr& coeff_ring, int n, int m,
                              Convention conv);

/// P(E) over the base ring with CANONICAL generator xi and
/// sum_i c_i(E) (-xi)^{n-i} = 0.
CohomologyModel model_proj_bundle(const RingPtr& base, const BundleData& E,
                                  const std::string& name = "xi");
/// P(E + 1): xi * prod (xi - x_i) = 0. E must be given by roots.
CohomologyModel model_thom(const RingPtr& base, const BundleData& E,
                           const std::string& name = "xi");

enum class ThomRoute { Relation, Twist, Quotient };

RingElement thom_class(const FormalGroupLaw& F, const CohomologyModel& model,
                       ThomRoute route);

/// sum a_{1,i+j-n} c^i d^j in Product(n, n) with DUAL generators.
RingElement diagonal_class_closed(const FormalGroupLaw& F, int n);
/// c_n(L_1^dual (x) Q_2) computed through the Chern calculus.
RingElement diagonal_class_direct(const FormalGroupLaw& F, int n);

/// Namewise restriction into a smaller model.
RingElement restrict_hyperplane(const RingElement& e,
                                const CohomologyModel& to);

/// c_1(L^{(x) r}) = [r]_F(l).
RingElement tensor_power_c1(const FormalGroupLaw& F, const RingElement& l,
                            int r);

}  // namespace orientcalc
