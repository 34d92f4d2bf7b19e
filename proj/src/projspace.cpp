#include "orientcalc/projspace.hpp"

#include "window.hpp"

namespace orientcalc {

CohomologyModel model_point(const RingPtr& coeff_ring) {
  CohomologyModel m;
  m.ring = coeff_ring;
  m.coeff_ring = coeff_ring;
  m.kind = ModelKind::Point;
  return m;
}

CohomologyModel model_projspace(const RingPtr& coeff_ring, int n,
                                Convention conv, const std::string& name) {
  if (n < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  auto b = coeff_ring->extend();
  b.add_variable(name, 1, n + 1);
  CohomologyModel m;
  m.ring = detail::build_with_window(std::move(b), coeff_ring->truncation());
  m.coeff_ring = coeff_ring;
  m.kind = ModelKind::ProjSpace;
  m.dims = {n};
  m.generators = {{name, conv}};
  return m;
}

CohomologyModel model_product(const RingPtr& coeff_ring, int n, int k,
                              Convention conv) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  auto b = coeff_ring->extend();
  b.add_variable("c", 1, n + 1).add_variable("d", 1, k + 1);
  CohomologyModel m;
  m.ring = detail::build_with_window(std::move(b), coeff_ring->truncation());
  m.coeff_ring = coeff_ring;
  m.kind = ModelKind::Product;
  m.dims = {n, k};
  m.generators = {{"c", conv}, {"d", conv}};
  return m;
}

CohomologyModel model_proj_bundle(const RingPtr& base, const BundleData& E,
                                  const std::string& name) {
  const int n = E.rank();
  if (n < 1) throw Error(ErrorKind::InvalidRing, "P(E) needs rank >= 1");
  auto b = base->extend();
  b.add_variable(name, 1);
  // xi^n = sum_{i>=1} (-1)^{i+1} c_i xi^{n-i}
  TermList rhs;
  auto classes = E.classes();
  std::size_t xi = b.variables().size() - 1;
  for (int i = 1; i <= n; ++i) {
    for (Term t : b.lift(normal_form(classes[i - 1], base))) {
      t.mono.set(xi, static_cast<unsigned>(n - i));
      if (i % 2 == 0) t.coeff = -t.coeff;
      rhs.push_back(std::move(t));
    }
  }
  b.add_relation(name, n, std::move(rhs));
  CohomologyModel m;
  m.ring = detail::build_with_window(std::move(b), base->truncation());
  m.coeff_ring = base;
  m.kind = ModelKind::ProjBundle;
  m.generators = {{name, Convention::Canonical}};
  m.bundle = E;
  return m;
}

CohomologyModel model_thom(const RingPtr& base, const BundleData& E,
                           const std::string& name) {
  if (E.form() != BundleData::Form::Roots) {
    throw Error(ErrorKind::InvalidRing,
                "the Thom model needs a bundle given by Chern roots");
  }
  std::vector<RingElement> roots;
  for (const auto& r : E.data()) roots.push_back(normal_form(r, base));
  roots.push_back(base->zero());
  CohomologyModel m =
      model_proj_bundle(base, BundleData::from_roots(std::move(roots)), name);
  m.kind = ModelKind::ThomModel;
  m.bundle = E;
  return m;
}

RingElement thom_class(const FormalGroupLaw& F, const CohomologyModel& model,
                       ThomRoute route) {
  if (model.kind != ModelKind::ThomModel || !model.bundle) {
    throw Error(ErrorKind::InvalidRing, "thom_class needs a Thom model");
  }
  const RingPtr& ring = model.ring;
  const BundleData& E = *model.bundle;
  const int n = E.rank();
  RingElement xi = model.gen();
  std::vector<RingElement> roots;
  for (const auto& r : E.data()) roots.push_back(normal_form(r, ring));
  switch (route) {
    case ThomRoute::Relation: {
      auto c = elementary_from_roots(roots);
      RingElement t = ring->zero();
      RingElement p = ring->one();
      for (int i = n; i >= 0; --i) {
        t += (i == 0 ? ring->one() : c[i - 1]) * p;
        p *= -xi;
      }
      return t;
    }
    case ThomRoute::Twist: {
      RingElement dual = apply_series(F, formal_inverse(F), xi);
      RingElement t = ring->one();
      for (const auto& r : roots) t *= F(dual, r);
      return t;
    }
    case ThomRoute::Quotient: {
      std::vector<RingElement> big = roots;
      big.push_back(ring->zero());
      BundleData q = quotient_chern(BundleData::from_roots(std::move(big)),
                                    BundleData::from_roots({xi}));
      return q.chern(n);
    }
  }
  throw Error(ErrorKind::InvalidRing, "unknown Thom route");
}

RingElement diagonal_class_closed(const FormalGroupLaw& F, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  if (n >= 1 && !F.exact() && F.degree() < n + 1) {
    throw Error(ErrorKind::TruncationTooSmall,
                "the diagonal of P^" + std::to_string(n) +
                    " needs a_{1," + std::to_string(n) + "}, i.e. D >= " +
                    std::to_string(n + 1));
  }
  CohomologyModel m = model_product(F.coeff_ring(), n, n, Convention::Dual);
  const RingPtr& ring = m.ring;
  RingMap lift(F.coeff_ring(), ring);
  RingElement c = m.gen(0);
  RingElement d = m.gen(1);
  RingElement out = ring->zero();
  RingElement ci = ring->one();
  for (int i = 0; i <= n; ++i) {
    RingElement dj = ring->one();
    for (int j = 0; j <= n; ++j) {
      int k = i + j - n;
      if (k == 0) {
        out += ci * dj;
      } else if (k > 0) {
        out += lift(F.a(1, k)) * ci * dj;
      }
      dj *= d;
    }
    ci *= c;
  }
  return out;
}

RingElement diagonal_class_direct(const FormalGroupLaw& F, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  CohomologyModel m = model_product(F.coeff_ring(), n, n, Convention::Dual);
  const RingPtr& ring = m.ring;
  if (n == 0) return ring->one();
  // c_1(L_2) = m(d); Q_2 = (trivial rank n+1) / L_2.
  RingElement l2 = apply_series(F, formal_inverse(F), m.gen(1));
  BundleData q2 = quotient_chern(BundleData::trivial(ring, n + 1),
                                 BundleData::from_roots({l2}));
  return twist_by_line(F, m.gen(0), q2).chern(n);
}

RingElement restrict_hyperplane(const RingElement& e,
                                const CohomologyModel& to) {
  return normal_form(e, to.ring);
}

RingElement tensor_power_c1(const FormalGroupLaw& F, const RingElement& l,
                            int r) {
  return apply_series(F, n_series(F, r), l);
}

}  // namespace orientcalc
