#include "orientcalc/chern.hpp"

#include <algorithm>
#include <functional>

namespace orientcalc {

namespace {

RingPtr ring_of(const std::vector<RingElement>& es) {
  for (const auto& e : es) {
    if (e.ring()) return e.ring();
  }
  return nullptr;
}

const RingPtr& same_ring(const BundleData& a, const BundleData& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring() || a.ring() == b.ring() || a.ring()->equivalent(*b.ring())) {
    return a.ring();
  }
  throw Error(ErrorKind::RingMismatch, "bundles live in different rings");
}

// Chern classes of the bundle with roots f(r_i), where r_i are formal roots
// of b: computed on free roots, reduced to elementary symmetric functions
// and evaluated at the classes of b.
BundleData via_formal_roots(
    const BundleData& b,
    const std::function<RingElement(const RingElement&)>& f) {
  const RingPtr& ring = b.ring();
  const int n = b.rank();
  auto classes = b.classes();
  for (int k = 1; k <= n; ++k) {
    if (!has_weight(classes[k - 1], k)) {
      throw Error(ErrorKind::NotHomogeneous,
                  "c_" + std::to_string(k) + " is not of weight " +
                      std::to_string(k) + ": " + to_string(classes[k - 1]));
    }
  }
  auto bound = ring->positive_bound();
  if (!bound) {
    throw Error(ErrorKind::NonTerminating,
                "the base ring bounds no weight; formal roots need one");
  }
  auto builder = ring->extend();
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("_r" + std::to_string(i));
    builder.add_variable(names.back(), 1);
  }
  builder.set_truncation(*bound);
  RingPtr s = builder.build();
  std::vector<RingElement> images;
  for (const auto& name : names) images.push_back(f(s->var(name)));
  auto e = elementary_from_roots(images);
  std::map<std::string, RingElement> at_classes;
  for (int k = 1; k <= n; ++k) {
    at_classes.emplace("_e" + std::to_string(k), classes[k - 1]);
  }
  std::vector<RingElement> out;
  for (int k = 1; k <= n; ++k) {
    RingElement q = express_in_elementary(e[k - 1], names, "_e");
    out.push_back(substitute(q, at_classes, ring));
  }
  return BundleData::from_classes(std::move(out));
}

}  // namespace

BundleData::BundleData(Form form, RingPtr ring, std::vector<RingElement> data)
    : form_(form), ring_(std::move(ring)), data_(std::move(data)) {
  if (!ring_) return;
  for (auto& d : data_) d = normal_form(d, ring_);
}

BundleData BundleData::from_roots(std::vector<RingElement> roots) {
  RingPtr r = ring_of(roots);
  return BundleData(Form::Roots, r, std::move(roots));
}

BundleData BundleData::from_classes(std::vector<RingElement> classes) {
  RingPtr r = ring_of(classes);
  return BundleData(Form::Classes, r, std::move(classes));
}

BundleData BundleData::trivial(const RingPtr& ring, int rank) {
  return BundleData(Form::Roots, ring,
                    std::vector<RingElement>(rank, ring->zero()));
}

std::vector<RingElement> BundleData::classes() const {
  if (form_ == Form::Classes) return data_;
  return elementary_from_roots(data_);
}

RingElement BundleData::chern(int k) const {
  if (!ring_) return k == 0 ? make_ring({})->one() : RingElement();
  if (k == 0) return ring_->one();
  if (k < 0 || k > rank()) return ring_->zero();
  return classes()[k - 1];
}

RingElement BundleData::total() const {
  if (!ring_) return make_ring({})->one();
  RingElement t = ring_->one();
  for (const auto& c : classes()) t += c;
  return t;
}

std::vector<RingElement> elementary_from_roots(
    const std::vector<RingElement>& roots) {
  RingPtr r = ring_of(roots);
  if (!r) return std::vector<RingElement>(roots.size());
  std::vector<RingElement> e(roots.size() + 1, r->zero());
  e[0] = r->one();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += roots[i] * e[k - 1];
  }
  e.erase(e.begin());
  return e;
}

RingElement express_in_elementary(const RingElement& p,
                                  const std::vector<std::string>& roots,
                                  const std::string& prefix) {
  const RingPtr& src = p.ring();
  if (!src) {
    throw Error(ErrorKind::InvalidRing, "symmetric reduction needs a ring");
  }
  const std::size_t n = roots.size();
  std::vector<std::size_t> idx;
  for (const auto& r : roots) idx.push_back(src->require_index(r));

  QuotientRing::Builder tb;
  for (std::size_t i = 0; i < src->size(); ++i) {
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
    const Variable& v = src->variable(i);
    tb.add_variable(v.name, v.weight, v.nilpotency);
    if (const auto& rel = src->relation(i)) {
      tb.add_relation(v.name, rel->degree,
                      tb.lift(RingElement::from_terms(src, rel->rhs)));
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    tb.add_variable(prefix + std::to_string(k), static_cast<int>(k));
  }
  tb.set_truncation(src->truncation());
  RingPtr target = tb.build();

  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::map<std::string, RingElement> swap{
        {roots[i], src->var(roots[i + 1])}, {roots[i + 1], src->var(roots[i])}};
    if (!(substitute(p, swap, src) == p)) {
      throw Error(ErrorKind::NotSymmetric,
                  "not symmetric under " + roots[i] + " <-> " + roots[i + 1]);
    }
  }

  std::vector<RingElement> rootvars;
  for (const auto& r : roots) rootvars.push_back(src->var(r));
  auto elem = elementary_from_roots(rootvars);
  std::vector<std::vector<RingElement>> epow(n);
  auto epower = [&](std::size_t k, unsigned a) -> const RingElement& {
    auto& c = epow[k];
    if (c.empty()) c.push_back(src->one());
    while (c.size() <= a) c.push_back(c.back() * elem[k]);
    return c[a];
  };
  RingMap to_target(src, target);
  auto key_of = [&](const Monomial& m) {
    std::vector<unsigned> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = m[idx[i]];
    return k;
  };

  RingElement rest = p;
  RingElement result = target->zero();
  while (!rest.is_zero()) {
    std::vector<unsigned> lead = key_of(rest.terms().front().mono);
    for (const Term& t : rest.terms()) lead = std::max(lead, key_of(t.mono));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (lead[i] < lead[i + 1]) {
        throw Error(ErrorKind::NotSymmetric,
                    "leading monomial is not a partition");
      }
    }
    TermList coeff;
    for (const Term& t : rest.terms()) {
      if (key_of(t.mono) != lead) continue;
      Monomial m = t.mono;
      for (std::size_t i : idx) m.set(i, 0);
      coeff.push_back({m, t.coeff});
    }
    RingElement c = RingElement::from_terms(src, std::move(coeff));
    RingElement sub = c;
    Monomial emono;
    for (std::size_t k = 0; k < n; ++k) {
      unsigned g = lead[k] - (k + 1 < n ? lead[k + 1] : 0);
      if (g == 0) continue;
      sub *= epower(k, g);
      emono.set(target->require_index(prefix + std::to_string(k + 1)), g);
    }
    rest -= sub;
    result += to_target(c) * target->monomial(emono);
  }
  return result;
}

BundleData whitney_total(const BundleData& a, const BundleData& b) {
  RingPtr ring = same_ring(a, b);
  if (a.form() == BundleData::Form::Roots &&
      b.form() == BundleData::Form::Roots) {
    std::vector<RingElement> roots = a.data();
    roots.insert(roots.end(), b.data().begin(), b.data().end());
    if (roots.empty()) return a;
    return BundleData::from_roots(std::move(roots));
  }
  return classes_from_total(normal_form(a.total(), ring) * b.total(),
                            a.rank() + b.rank());
}

BundleData dual_bundle(const FormalGroupLaw& F, const BundleData& b) {
  UnivariateSeries m = formal_inverse(F);
  auto dual = [&](const RingElement& r) { return apply_series(F, m, r); };
  if (b.form() == BundleData::Form::Classes) return via_formal_roots(b, dual);
  std::vector<RingElement> roots;
  for (const auto& r : b.data()) roots.push_back(dual(r));
  if (roots.empty()) return b;
  return BundleData::from_roots(std::move(roots));
}

BundleData twist_by_line(const FormalGroupLaw& F, const RingElement& l,
                         const BundleData& b) {
  if (b.rank() == 0) return b;
  if (b.form() == BundleData::Form::Classes) {
    return via_formal_roots(b, [&](const RingElement& r) {
      return F(normal_form(l, r.ring()), r);
    });
  }
  std::vector<RingElement> roots;
  for (const auto& r : b.data()) roots.push_back(F(normal_form(l, b.ring()), r));
  return BundleData::from_roots(std::move(roots));
}

BundleData quotient_chern(const BundleData& big, const BundleData& sub) {
  RingPtr ring = same_ring(big, sub);
  if (!ring) return big;
  RingElement inv = invert_unit(normal_form(sub.total(), ring));
  return classes_from_total(normal_form(big.total(), ring) * inv,
                            big.rank() - sub.rank());
}

BundleData classes_from_total(const RingElement& total, int rank) {
  if (rank < 0) {
    throw Error(ErrorKind::InvalidRing, "negative bundle rank");
  }
  std::vector<RingElement> c;
  for (int k = 1; k <= rank; ++k) c.push_back(homogeneous_part(total, k));
  if (c.empty()) return BundleData::trivial(total.ring(), 0);
  return BundleData::from_classes(std::move(c));
}

}  // namespace orientcalc
