#include "orientcalc/fgl.hpp"

#include <algorithm>

namespace orientcalc {

namespace {

std::string coeff_label(int i, int j) {
  return "a_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

bool all_terms_positive(const RingElement& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [&](const Term& t) {
    return e.ring()->positive_part(t.mono) >= 1;
  });
}

// Every product of `count` factors drawn (with repetition) from args[from..]
// times `acc` must vanish.
bool products_vanish(const std::vector<RingElement>& args, std::size_t from,
                     unsigned count, const RingElement& acc) {
  if (acc.is_zero()) return true;
  if (count == 0) return false;
  if (from + 1 == args.size()) return (acc * pow(args[from], count)).is_zero();
  RingElement p = acc;
  for (unsigned k = 0; k <= count; ++k) {
    if (!products_vanish(args, from + 1, count - k, p)) return false;
    p *= args[from];
    if (p.is_zero()) return true;
  }
  return true;
}

// Throws unless degree-(D+1) expressions in args vanish, so a series
// truncated at D evaluates exactly.
void check_vanishing(const std::vector<RingElement>& args, int degree) {
  RingPtr ring;
  std::vector<RingElement> live;
  for (const auto& a : args) {
    if (a.is_zero()) continue;
    ring = a.ring();
    live.push_back(a);
  }
  if (live.empty()) return;
  if (std::all_of(live.begin(), live.end(), all_terms_positive)) {
    if (auto p = ring->positive_bound(); p && *p <= degree) return;
  }
  if (!products_vanish(live, 0, static_cast<unsigned>(degree) + 1,
                       ring->one())) {
    std::string what = "truncation degree " + std::to_string(degree) +
                       " is too small: products of " +
                       std::to_string(degree + 1) + " arguments survive";
    if (auto p = ring->positive_bound()) {
      what += " (exactness bound " + std::to_string(*p) + ")";
    }
    throw Error(ErrorKind::TruncationTooSmall, what);
  }
}

RingPtr build_series_ring(const RingPtr& coeff_ring, int degree) {
  auto b = coeff_ring->extend();
  b.add_variable("x", 1).add_variable("y", 1).add_variable("z", 1);
  b.set_truncation(degree);
  return b.build();
}

RingPtr common_ring(const std::vector<RingElement>& es) {
  for (const auto& e : es) {
    if (e.ring()) return e.ring();
  }
  return make_ring({});
}

}  // namespace

FormalGroupLaw::FormalGroupLaw(FglKind kind, RingPtr coeff_ring, int degree,
                               Coeffs coeffs, bool exact,
                               std::vector<RingElement> log_coeffs)
    : kind_(kind),
      coeff_ring_(std::move(coeff_ring)),
      degree_(degree),
      exact_(exact),
      log_(std::move(log_coeffs)) {
  if (degree_ < 1) {
    throw Error(ErrorKind::ConfigError, "FGL degree bound must be at least 1");
  }
  for (auto& [ij, c] : coeffs) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i + j < 1 || i + j > degree_) {
      throw Error(ErrorKind::ConfigError,
                  "coefficient " + coeff_label(i, j) + " outside 1 <= i+j <= " +
                      std::to_string(degree_));
    }
    RingElement v = normal_form(c, coeff_ring_);
    if (!v.is_zero()) coeffs_.emplace(ij, std::move(v));
  }
  for (auto& b : log_) b = normal_form(b, coeff_ring_);
  series_ring_ = build_series_ring(coeff_ring_, degree_);
}

RingElement FormalGroupLaw::a(int i, int j) const {
  auto it = coeffs_.find({i, j});
  if (it == coeffs_.end()) return coeff_ring_->zero();
  return it->second;
}

void FormalGroupLaw::require_exact_on(
    const std::vector<RingElement>& args) const {
  if (!exact_) check_vanishing(args, degree_);
}

RingElement FormalGroupLaw::operator()(const RingElement& u,
                                       const RingElement& v) const {
  RingPtr ring = common_ring({u, v});
  require_exact_on({u, v});
  RingMap lift(coeff_ring_, ring);
  RingElement uu = normal_form(u, ring);
  RingElement vv = normal_form(v, ring);
  std::vector<RingElement> vpow{ring->one()};
  for (int j = 1; j <= degree_; ++j) vpow.push_back(vpow.back() * vv);
  // Horner in u over the inner sums in v.
  RingElement result = ring->zero();
  for (int i = degree_; i >= 0; --i) {
    RingElement inner = ring->zero();
    for (int j = 0; i + j <= degree_; ++j) {
      auto it = coeffs_.find({i, j});
      if (it == coeffs_.end() || vpow[j].is_zero()) continue;
      inner += lift(it->second) * vpow[j];
    }
    result = result * uu + inner;
  }
  return result;
}

FormalGroupLaw fgl_additive(int degree) {
  RingPtr q = make_ring({});
  FormalGroupLaw::Coeffs c;
  c[{1, 0}] = q->one();
  c[{0, 1}] = q->one();
  return FormalGroupLaw(FglKind::Additive, q, degree, std::move(c), true);
}

FormalGroupLaw fgl_multiplicative(int degree) {
  RingPtr a = make_ring({{"beta", -1, std::nullopt}});
  FormalGroupLaw::Coeffs c;
  c[{1, 0}] = a->one();
  c[{0, 1}] = a->one();
  if (degree >= 2) c[{1, 1}] = a->var("beta");
  return FormalGroupLaw(FglKind::Multiplicative, a, degree, std::move(c),
                        degree >= 2);
}

FormalGroupLaw fgl_from_log(const std::vector<RingElement>& b, int degree) {
  if (degree < 1) {
    throw Error(ErrorKind::ConfigError, "FGL degree bound must be at least 1");
  }
  if (static_cast<int>(b.size()) < degree - 1) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "log law of degree " + std::to_string(degree) + " needs " +
                    std::to_string(degree - 1) + " coefficients, got " +
                    std::to_string(b.size()));
  }
  RingPtr a = common_ring(b);
  RingPtr s = build_series_ring(a, degree);
  RingMap lift(a, s);
  auto log_of = [&](const RingElement& t) {
    RingElement out = t;
    RingElement p = t;
    for (int i = 1; i < degree; ++i) {
      p *= t;
      if (!b[i - 1].is_zero()) out += lift(normal_form(b[i - 1], a)) * p;
    }
    return out;
  };
  RingElement x = s->var("x");
  RingElement lx = log_of(x);
  // exp(log x) = x fixes the exp coefficients degree by degree.
  std::vector<RingElement> lpow{s->one(), lx};
  for (int k = 2; k <= degree; ++k) lpow.push_back(lpow.back() * lx);
  std::vector<RingElement> e(degree + 1, a->zero());
  e[1] = a->one();
  std::vector<std::string> xs{"x"};
  for (int k = 2; k <= degree; ++k) {
    RingElement acc = s->zero();
    for (int j = 1; j < k; ++j) acc += lift(e[j]) * lpow[j];
    auto parts = split_by(acc, xs, a);
    auto it = parts.find({static_cast<unsigned>(k)});
    if (it != parts.end()) e[k] = -it->second;
  }
  RingElement sum = lx + log_of(s->var("y"));
  RingElement f = s->zero();
  RingElement p = s->one();
  for (int k = 1; k <= degree; ++k) {
    p *= sum;
    if (!e[k].is_zero()) f += lift(e[k]) * p;
  }
  FormalGroupLaw::Coeffs c;
  std::vector<std::string> xy{"x", "y"};
  for (auto& [k, v] : split_by(f, xy, a)) {
    c[{static_cast<int>(k[0]), static_cast<int>(k[1])}] = v;
  }
  std::vector<RingElement> logs(b.begin(), b.begin() + (degree - 1));
  return FormalGroupLaw(FglKind::Log, a, degree, std::move(c), false,
                        std::move(logs));
}

FormalGroupLaw fgl_generic(int w) {
  if (w < 1) {
    throw Error(ErrorKind::ConfigError, "generic law needs weight >= 1");
  }
  auto builder = QuotientRing::Builder();
  for (int i = 1; i <= w; ++i) builder.add_variable("b" + std::to_string(i), -i);
  builder.set_truncation(w);
  RingPtr a = builder.build();
  std::vector<RingElement> b;
  for (int i = 1; i <= w; ++i) b.push_back(a->var("b" + std::to_string(i)));
  return fgl_from_log(b, w + 1);
}

std::vector<AxiomViolation> check_axioms(const FormalGroupLaw& F) {
  std::vector<AxiomViolation> out;
  const int d = F.degree();
  for (const auto& [ij, c] : F.coeffs()) {
    int w = -(ij.first + ij.second - 1);
    if (!has_weight(c, w)) {
      out.push_back({"weight", coeff_label(ij.first, ij.second), c});
    }
  }
  RingPtr a = F.coeff_ring();
  for (int i = 0; i <= d; ++i) {
    RingElement expect = i == 1 ? a->one() : a->zero();
    if (i == 0) continue;
    if (auto def = F.a(i, 0) - expect; !def.is_zero()) {
      out.push_back({"unit", coeff_label(i, 0), def});
    }
    if (auto def = F.a(0, i) - expect; !def.is_zero()) {
      out.push_back({"unit", coeff_label(0, i), def});
    }
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; i + j <= d; ++j) {
      if (auto def = F.a(i, j) - F.a(j, i); !def.is_zero()) {
        out.push_back({"commutativity", coeff_label(i, j), def});
      }
    }
  }
  const RingPtr& s = F.series_ring();
  RingElement x = s->var("x");
  RingElement y = s->var("y");
  RingElement z = s->var("z");
  RingElement defect = F(F(x, y), z) - F(x, F(y, z));
  std::vector<std::string> xyz{"x", "y", "z"};
  for (auto& [k, v] : split_by(defect, xyz, a)) {
    std::string where = "x^" + std::to_string(k[0]) + "*y^" +
                        std::to_string(k[1]) + "*z^" + std::to_string(k[2]);
    out.push_back({"associativity", where, v});
  }
  return out;
}

RingElement series_element(const FormalGroupLaw& F, const UnivariateSeries& s,
                           std::string_view var) {
  const RingPtr& r = F.series_ring();
  RingMap lift(s.coeff_ring, r);
  RingElement v = r->var(var);
  RingElement out = r->zero();
  RingElement p = r->one();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) p *= v;
    if (!s[k].is_zero()) out += lift(s[k]) * p;
  }
  return out;
}

UnivariateSeries series_from_element(const FormalGroupLaw& F,
                                     const RingElement& e,
                                     std::string_view var) {
  UnivariateSeries s{F.coeff_ring(),
                     std::vector<RingElement>(F.degree() + 1,
                                              F.coeff_ring()->zero())};
  std::vector<std::string> vs{std::string(var)};
  for (auto& [k, v] : split_by(e, vs, F.coeff_ring())) {
    if (k[0] < s.coeffs.size()) s.coeffs[k[0]] = v;
  }
  return s;
}

UnivariateSeries formal_inverse(const FormalGroupLaw& F) {
  const RingPtr& s = F.series_ring();
  RingElement x = s->var("x");
  RingElement m = -x;
  for (int k = 2; k <= F.degree(); ++k) {
    UnivariateSeries r = series_from_element(F, F(x, m));
    if (!r[k].is_zero()) {
      Monomial xk;
      xk.set(s->require_index("x"), static_cast<unsigned>(k));
      m -= normal_form(r[k], s) * s->monomial(xk);
    }
  }
  return series_from_element(F, m);
}

UnivariateSeries n_series(const FormalGroupLaw& F, int n) {
  const RingPtr& s = F.series_ring();
  RingElement x = s->var("x");
  RingElement acc = s->zero();
  int steps = n < 0 ? -n : n;
  for (int i = 0; i < steps; ++i) acc = i == 0 ? x : F(x, acc);
  if (n < 0) acc = eval_series(formal_inverse(F).coeffs, acc);
  return series_from_element(F, acc);
}

UnivariateSeries omega_series(const FormalGroupLaw& F) {
  UnivariateSeries s{F.coeff_ring(), {}};
  for (int i = 0; i < F.degree(); ++i) s.coeffs.push_back(F.a(i, 1));
  return s;
}

RingElement formal_sum(const FormalGroupLaw& F, const RingElement& a,
                       const RingElement& b) {
  return F(a, b);
}

RingElement apply_series(const FormalGroupLaw& F, const UnivariateSeries& s,
                         const RingElement& e) {
  check_vanishing({e}, std::min(F.degree(), static_cast<int>(s.size()) - 1));
  if (e.is_zero()) {
    return s.size() > 0 && e.ring() ? normal_form(s[0], e.ring())
                                    : RingElement(e.ring());
  }
  return eval_series(s.coeffs, e);
}

std::string to_string(const UnivariateSeries& s, std::string_view var) {
  auto b = s.coeff_ring->extend();
  b.add_variable(std::string(var), 1);
  b.set_truncation(std::nullopt);
  RingPtr r = b.build();
  RingMap lift(s.coeff_ring, r);
  RingElement v = r->var(var);
  RingElement out = r->zero();
  RingElement p = r->one();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) p *= v;
    if (!s[k].is_zero()) out += lift(s[k]) * p;
  }
  return to_string(out);
}

}  // namespace orientcalc
