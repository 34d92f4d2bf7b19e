#include "orientcalc/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "terms.hpp"

namespace orientcalc {

namespace {

// Each reduction step strictly decreases a monomial in this order (last
// variable most significant), so popping the largest pending monomial
// collects every contribution to it before it is processed.
struct ReductionGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
  }
};

std::string weights_list(const std::set<int>& ws) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int w : ws) {
    if (!first) os << ',';
    os << w;
    first = false;
  }
  os << '}';
  return os.str();
}

const RingPtr& resolve_ring(const RingElement& a, const RingElement& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring() || a.ring() == b.ring()) return a.ring();
  if (a.ring()->equivalent(*b.ring())) return a.ring();
  throw Error(ErrorKind::RingMismatch,
              "operands belong to different rings");
}

}  // namespace

// ---------------------------------------------------------------- Monomial

void Monomial::set(std::size_t var, unsigned exponent) {
  if (var >= kMaxVariables) {
    throw Error(ErrorKind::InvalidRing, "variable index out of range");
  }
  if (exponent > 255) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent " + std::to_string(exponent) + " exceeds 255");
  }
  exps_[var] = static_cast<std::uint8_t>(exponent);
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint8_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exps_[i]} + unsigned{b.exps_[i]};
    if (e > 255) {
      throw Error(ErrorKind::ExponentOverflow, "monomial exponent overflow");
    }
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

bool storage_less(const Monomial& a, const Monomial& b) noexcept {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db;
  return b.exponents() < a.exponents();
}

// ------------------------------------------------------------ QuotientRing

std::optional<std::size_t> QuotientRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t QuotientRing::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::UndeclaredVariable,
              "variable '" + std::string(name) + "' is not declared in ring");
}

int QuotientRing::weight(const Monomial& m) const noexcept {
  int w = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    w += static_cast<int>(m[i]) * vars_[i].weight;
  }
  return w;
}

int QuotientRing::positive_part(const Monomial& m) const noexcept {
  int w = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight > 0) w += static_cast<int>(m[i]) * vars_[i].weight;
  }
  return w;
}

int QuotientRing::negative_part(const Monomial& m) const noexcept {
  int w = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight < 0) w -= static_cast<int>(m[i]) * vars_[i].weight;
  }
  return w;
}

bool QuotientRing::is_dropped(const Monomial& m) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].nilpotency && static_cast<int>(m[i]) >= *vars_[i].nilpotency) {
      return true;
    }
  }
  if (truncation_) {
    if (positive_part(m) > *truncation_ || negative_part(m) > *truncation_) {
      return true;
    }
  }
  return false;
}

std::optional<unsigned> QuotientRing::exponent_bound(std::size_t i) const {
  const Variable& v = vars_.at(i);
  std::optional<unsigned> bound;
  if (v.nilpotency) bound = static_cast<unsigned>(*v.nilpotency - 1);
  if (relations_[i]) bound = static_cast<unsigned>(relations_[i]->degree - 1);
  if (truncation_ && v.weight != 0) {
    auto t = static_cast<unsigned>(*truncation_ / std::abs(v.weight));
    bound = bound ? std::min(*bound, t) : t;
  }
  return bound;
}

std::optional<int> QuotientRing::positive_bound() const {
  std::optional<int> sum = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight <= 0) continue;
    std::optional<int> b;
    if (vars_[i].nilpotency) b = *vars_[i].nilpotency - 1;
    if (relations_[i]) b = relations_[i]->degree - 1;
    if (!b) {
      sum.reset();
      break;
    }
    *sum += *b * vars_[i].weight;
  }
  if (truncation_) return sum ? std::min(*sum, *truncation_) : *truncation_;
  return sum;
}

TermList QuotientRing::reduce(TermList raw) const {
  if (!has_relations_) {
    std::erase_if(raw, [this](const Term& t) { return is_dropped(t.mono); });
    return detail::combine_terms(std::move(raw));
  }
  std::map<Monomial, Rational, ReductionGreater> work;
  for (auto& t : raw) {
    if (t.coeff == 0 || is_dropped(t.mono)) continue;
    auto [it, inserted] = work.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  TermList out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& m = node.key();
    Rational& c = node.mapped();
    if (c == 0) continue;
    std::optional<std::size_t> hit;
    for (std::size_t i = vars_.size(); i-- > 0;) {
      if (relations_[i] &&
          static_cast<int>(m[i]) >= relations_[i]->degree) {
        hit = i;
        break;
      }
    }
    if (!hit) {
      out.push_back({m, std::move(c)});
      continue;
    }
    Monomial base = m;
    base.set(*hit, m[*hit] - static_cast<unsigned>(relations_[*hit]->degree));
    for (const Term& rt : relations_[*hit]->rhs) {
      Monomial nm = base * rt.mono;
      if (is_dropped(nm)) continue;
      Rational nc = c * rt.coeff;
      auto [it, inserted] = work.try_emplace(nm, nc);
      if (!inserted) it->second += nc;
    }
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return storage_less(a.mono, b.mono);
  });
  return out;
}

RingElement QuotientRing::zero() const {
  return RingElement(shared_from_this());
}

RingElement QuotientRing::one() const { return constant(1); }

RingElement QuotientRing::constant(const Rational& q) const {
  return monomial(Monomial{}, q);
}

RingElement QuotientRing::monomial(const Monomial& m,
                                   const Rational& coeff) const {
  return RingElement::from_terms(shared_from_this(), TermList{{m, coeff}});
}

RingElement QuotientRing::var(std::string_view name) const {
  Monomial m;
  m.set(require_index(name), 1);
  return monomial(m);
}

RingElement QuotientRing::parse(std::string_view expr) const {
  return RingElement::from_terms(
      shared_from_this(),
      detail::parse_terms(expr, [this](std::string_view n) {
        return require_index(n);
      }));
}

bool QuotientRing::equivalent(const QuotientRing& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size() || truncation_ != other.truncation_) {
    return false;
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Variable& a = vars_[i];
    const Variable& b = other.vars_[i];
    if (a.name != b.name || a.weight != b.weight || a.nilpotency != b.nilpotency) {
      return false;
    }
    const auto& ra = relations_[i];
    const auto& rb = other.relations_[i];
    if (ra.has_value() != rb.has_value()) return false;
    if (ra) {
      if (ra->degree != rb->degree || ra->rhs.size() != rb->rhs.size()) {
        return false;
      }
      for (std::size_t k = 0; k < ra->rhs.size(); ++k) {
        if (!(ra->rhs[k].mono == rb->rhs[k].mono) ||
            ra->rhs[k].coeff != rb->rhs[k].coeff) {
          return false;
        }
      }
    }
  }
  return true;
}

QuotientRing::Builder QuotientRing::extend() const {
  Builder b;
  b.vars_ = vars_;
  b.relations_ = relations_;
  b.truncation_ = truncation_;
  return b;
}

// ----------------------------------------------------------------- Builder

using Builder = QuotientRing::Builder;

Builder& Builder::add_variable(std::string name, int weight,
                               std::optional<int> nilpotency) {
  if (name.empty()) {
    throw Error(ErrorKind::InvalidRing, "variable name must be non-empty");
  }
  if (index_of(name)) {
    throw Error(ErrorKind::InvalidRing, "duplicate variable '" + name + "'");
  }
  if (nilpotency && *nilpotency < 1) {
    throw Error(ErrorKind::InvalidRing,
                "nilpotency of '" + name + "' must be at least 1");
  }
  if (vars_.size() == kMaxVariables) {
    throw Error(ErrorKind::InvalidRing, "too many variables (max 32)");
  }
  vars_.push_back({std::move(name), weight, nilpotency});
  relations_.emplace_back();
  return *this;
}

Builder& Builder::add_relation(std::string_view var, int degree, TermList rhs) {
  auto idx = index_of(var);
  if (!idx) {
    throw Error(ErrorKind::UndeclaredVariable,
                "relation for undeclared variable '" + std::string(var) + "'");
  }
  if (degree < 1) {
    throw Error(ErrorKind::InvalidRing, "relation degree must be positive");
  }
  if (vars_[*idx].nilpotency) {
    throw Error(ErrorKind::InvalidRing, "variable '" + std::string(var) +
                                            "' already has a nilpotency");
  }
  if (relations_[*idx]) {
    throw Error(ErrorKind::InvalidRing,
                "duplicate relation for '" + std::string(var) + "'");
  }
  const int target = degree * vars_[*idx].weight;
  for (const Term& t : rhs) {
    if (t.coeff == 0) continue;
    for (std::size_t j = *idx + 1; j < vars_.size(); ++j) {
      if (t.mono[j] != 0) {
        throw Error(ErrorKind::InvalidRing,
                    "relation for '" + std::string(var) +
                        "' uses the later variable '" + vars_[j].name + "'");
      }
    }
    if (static_cast<int>(t.mono[*idx]) >= degree) {
      throw Error(ErrorKind::InvalidRing, "relation for '" + std::string(var) +
                                              "' is not of lower degree");
    }
    int w = 0;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      w += static_cast<int>(t.mono[j]) * vars_[j].weight;
    }
    if (w != target) {
      throw Error(ErrorKind::NotHomogeneous,
                  "relation for '" + std::string(var) +
                      "' is not homogeneous of weight " +
                      std::to_string(target));
    }
  }
  relations_[*idx] = MonicRelation{degree, detail::combine_terms(std::move(rhs))};
  return *this;
}

Builder& Builder::add_relation(std::string_view var, int degree,
                               std::string_view rhs_expr) {
  return add_relation(var, degree, parse(rhs_expr));
}

Builder& Builder::set_truncation(std::optional<int> w) {
  if (w && *w < 0) {
    throw Error(ErrorKind::InvalidRing, "truncation must be non-negative");
  }
  truncation_ = w;
  return *this;
}

std::optional<std::size_t> Builder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

TermList Builder::lift(const RingElement& e) const {
  if (!e.ring()) return {};
  const auto& src = e.ring()->variables();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = index_of(src[i].name);
  TermList out;
  out.reserve(e.size());
  for (const Term& t : e.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) {
        throw Error(ErrorKind::UndeclaredVariable,
                    "variable '" + src[i].name + "' is not declared");
      }
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return out;
}

TermList Builder::parse(std::string_view expr) const {
  return detail::parse_terms(expr, [this](std::string_view n) {
    if (auto i = index_of(n)) return *i;
    throw Error(ErrorKind::UndeclaredVariable,
                "variable '" + std::string(n) + "' is not declared");
  });
}

RingPtr Builder::build() const {
  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing);
  ring->vars_ = vars_;
  ring->relations_.resize(vars_.size());
  ring->truncation_ = truncation_;
  // Lower variables' relations are in place before each rhs is reduced.
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!relations_[i]) continue;
    MonicRelation rel = *relations_[i];
    rel.rhs = ring->reduce(std::move(rel.rhs));
    ring->relations_[i] = std::move(rel);
    ring->has_relations_ = true;
  }
  if (truncation_) {
    std::optional<int> sum = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].weight <= 0) continue;
      std::optional<int> b;
      if (vars_[i].nilpotency) b = *vars_[i].nilpotency - 1;
      if (relations_[i]) b = relations_[i]->degree - 1;
      if (!b) {
        sum.reset();
        break;
      }
      *sum += *b * vars_[i].weight;
    }
    if (sum && *truncation_ < *sum) {
      throw Error(ErrorKind::TruncationTooSmall,
                  "truncation " + std::to_string(*truncation_) +
                      " is below the exactness bound " + std::to_string(*sum));
    }
  }
  return ring;
}

RingPtr make_ring(std::vector<Variable> vars, std::optional<int> truncation) {
  Builder b;
  for (auto& v : vars) b.add_variable(std::move(v.name), v.weight, v.nilpotency);
  b.set_truncation(truncation);
  return b.build();
}

// ------------------------------------------------------------- RingElement

RingElement RingElement::from_terms(RingPtr ring, TermList raw) {
  if (!ring) {
    throw Error(ErrorKind::InvalidRing, "element requires a ring");
  }
  TermList canonical = ring->reduce(std::move(raw));
  return RingElement(std::move(ring), std::move(canonical));
}

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& x) { return storage_less(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  return *this = *this + o;
}
RingElement& RingElement::operator-=(const RingElement& o) {
  return *this = *this - o;
}
RingElement& RingElement::operator*=(const RingElement& o) {
  return *this = *this * o;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  const RingPtr& r = resolve_ring(a, b);
  if (!r) return {};
  return RingElement(r, detail::add_terms(a.terms_, b.terms_));
}

RingElement operator-(const RingElement& a) {
  return RingElement(a.ring_, detail::scale_terms(a.terms_, -1));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return a + (-b);
}

RingElement operator*(const Rational& q, const RingElement& a) {
  return RingElement(a.ring_, detail::scale_terms(a.terms_, q));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  const RingPtr& r = resolve_ring(a, b);
  if (!r) return {};
  if (a.is_zero() || b.is_zero()) return RingElement(r);
  if (!r->has_relations()) {
    TermList raw;
    raw.reserve(a.size() * b.size());
    for (const Term& x : a.terms_) {
      for (const Term& y : b.terms_) {
        Monomial m = x.mono * y.mono;
        if (r->is_dropped(m)) continue;
        raw.push_back({m, x.coeff * y.coeff});
      }
    }
    return RingElement(r, detail::combine_terms(std::move(raw)));
  }
  return RingElement::from_terms(r, detail::mul_terms(a.terms_, b.terms_));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ && b.ring_ && a.ring_ != b.ring_ &&
      !a.ring_->equivalent(*b.ring_)) {
    return false;
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

RingElement pow(const RingElement& e, unsigned k) {
  if (!e.ring()) return {};
  RingElement result = e.ring()->one();
  RingElement base = e;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

// ----------------------------------------------------------------- RingMap

RingMap::RingMap(RingPtr from, RingPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_) {
    index_.resize(from_->size());
    for (std::size_t i = 0; i < from_->size(); ++i) {
      index_[i] = to_->index_of(from_->variable(i).name);
    }
  }
}

RingElement RingMap::operator()(const RingElement& e) const {
  if (!e.ring()) return to_->zero();
  if (e.ring() == to_) return e;
  if (e.ring() != from_ && !e.ring()->equivalent(*from_)) {
    throw Error(ErrorKind::RingMismatch, "element is not from the map's source");
  }
  TermList out;
  out.reserve(e.size());
  for (const Term& t : e.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < index_.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!index_[i]) {
        throw Error(ErrorKind::UndeclaredVariable,
                    "variable '" + from_->variable(i).name +
                        "' is not declared in target ring");
      }
      m.set(*index_[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return RingElement::from_terms(to_, std::move(out));
}

RingElement normal_form(const RingElement& e, const RingPtr& ring) {
  if (!e.ring()) return ring->zero();
  if (e.ring() == ring) return e;
  return RingMap(e.ring(), ring)(e);
}

// ---------------------------------------------------------------- grading

int weight_of(const RingElement& e) {
  std::set<int> ws;
  for (const Term& t : e.terms()) ws.insert(e.ring()->weight(t.mono));
  if (ws.empty()) return 0;
  if (ws.size() > 1) {
    throw Error(ErrorKind::NotHomogeneous,
                "element is not homogeneous: weights " + weights_list(ws));
  }
  return *ws.begin();
}

bool has_weight(const RingElement& e, int w) {
  for (const Term& t : e.terms()) {
    if (e.ring()->weight(t.mono) != w) return false;
  }
  return true;
}

RingElement homogeneous_part(const RingElement& e, int w) {
  if (!e.ring()) return {};
  TermList out;
  for (const Term& t : e.terms()) {
    if (e.ring()->weight(t.mono) == w) out.push_back(t);
  }
  return RingElement::from_terms(e.ring(), std::move(out));
}

Rational augmentation(const RingElement& e) {
  if (e.is_zero()) return 0;
  const Term& first = e.terms().front();
  return first.mono.is_one() ? first.coeff : Rational(0);
}

// ----------------------------------------------------------- ring algebra

RingElement substitute(const RingElement& e,
                       const std::map<std::string, RingElement>& images,
                       const RingPtr& target) {
  if (!e.ring()) return target->zero();
  const RingPtr& src = e.ring();
  std::vector<RingElement> image(src->size());
  std::vector<bool> used(src->size(), false);
  for (const Term& t : e.terms()) {
    for (std::size_t i = 0; i < src->size(); ++i) {
      if (t.mono[i] != 0) used[i] = true;
    }
  }
  for (std::size_t i = 0; i < src->size(); ++i) {
    if (!used[i]) continue;
    const std::string& name = src->variable(i).name;
    auto it = images.find(name);
    image[i] = it != images.end() ? normal_form(it->second, target)
                                  : target->var(name);
  }
  // Powers are cached per variable; exponents are small in every ring here.
  std::vector<std::vector<RingElement>> powers(src->size());
  auto power = [&](std::size_t i, unsigned k) -> const RingElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(target->one());
    while (cache.size() <= k) cache.push_back(cache.back() * image[i]);
    return cache[k];
  };
  RingElement result = target->zero();
  for (const Term& t : e.terms()) {
    RingElement term = target->constant(t.coeff);
    for (std::size_t i = 0; i < src->size() && !term.is_zero(); ++i) {
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

namespace {

std::optional<unsigned> nilpotency_bound(const RingElement& e) {
  const QuotientRing& r = *e.ring();
  bool all_positive = true;
  bool zero_weight_free = true;
  unsigned zero_weight_slack = 0;
  for (const Term& t : e.terms()) {
    if (r.positive_part(t.mono) < 1) all_positive = false;
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.variable(i).weight != 0) continue;
    if (auto b = r.exponent_bound(i)) {
      zero_weight_slack += *b;
    } else {
      zero_weight_free = false;
    }
  }
  if (all_positive) {
    if (auto p = r.positive_bound()) return static_cast<unsigned>(*p) + 1;
  }
  if (r.truncation() && zero_weight_free) {
    return 2 * static_cast<unsigned>(*r.truncation()) + zero_weight_slack + 1;
  }
  return std::nullopt;
}

}  // namespace

unsigned nilpotency_order(const RingElement& e) {
  if (e.is_zero()) return e.ring() ? 1 : 0;
  if (augmentation(e) != 0) {
    throw Error(ErrorKind::NonTerminating,
                "element with nonzero constant term is not nilpotent");
  }
  auto bound = nilpotency_bound(e);
  if (!bound) {
    throw Error(ErrorKind::NonTerminating,
                "ring gives no bound on the nilpotency order of " +
                    to_string(e));
  }
  RingElement p = e;
  for (unsigned k = 1; k <= *bound; ++k) {
    if (p.is_zero()) return k;
    p *= e;
  }
  throw Error(ErrorKind::NonTerminating,
              "element is not nilpotent within the ring's bound");
}

RingElement invert_unit(const RingElement& e) {
  Rational a0 = augmentation(e);
  if (a0 == 0) {
    throw Error(ErrorKind::NotAUnit,
                "element with zero augmentation is not a unit: " + to_string(e));
  }
  Rational inv = 1 / a0;
  RingElement u = -(inv * (e - e.ring()->constant(a0)));
  if (u.is_zero()) return e.ring()->constant(inv);
  nilpotency_order(u);
  RingElement acc = e.ring()->one();
  RingElement p = e.ring()->one();
  for (;;) {
    p *= u;
    if (p.is_zero()) break;
    acc += p;
  }
  return inv * acc;
}

RingElement eval_series(std::span<const RingElement> coeffs,
                        const RingElement& e) {
  const RingPtr& r = e.ring();
  if (!r) {
    throw Error(ErrorKind::InvalidRing, "series argument has no ring");
  }
  RingElement result = r->zero();
  if (coeffs.empty()) return result;
  std::optional<RingMap> map;
  auto lift = [&](const RingElement& c) {
    if (!c.ring() || c.ring() == r) return c.ring() ? c : r->zero();
    if (!map) map.emplace(c.ring(), r);
    return (*map)(c);
  };
  result = lift(coeffs[0]);
  if (coeffs.size() == 1) return result;
  nilpotency_order(e);
  RingElement p = r->one();
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    p *= e;
    if (p.is_zero()) break;
    if (coeffs[k].is_zero()) continue;
    result += lift(coeffs[k]) * p;
  }
  return result;
}

std::map<std::vector<unsigned>, RingElement> split_by(
    const RingElement& e, std::span<const std::string> vars,
    const RingPtr& coeff_ring) {
  std::map<std::vector<unsigned>, RingElement> out;
  if (!e.ring()) return out;
  const RingPtr& src = e.ring();
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(src->require_index(v));
  std::vector<std::optional<std::size_t>> into(src->size());
  for (std::size_t i = 0; i < src->size(); ++i) {
    into[i] = coeff_ring->index_of(src->variable(i).name);
  }
  std::map<std::vector<unsigned>, TermList> grouped;
  for (const Term& t : e.terms()) {
    std::vector<unsigned> key;
    key.reserve(idx.size());
    Monomial rest;
    for (std::size_t i = 0; i < src->size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
      if (!into[i]) {
        throw Error(ErrorKind::UndeclaredVariable,
                    "variable '" + src->variable(i).name +
                        "' is not declared in coefficient ring");
      }
      rest.set(*into[i], t.mono[i]);
    }
    for (std::size_t i : idx) key.push_back(t.mono[i]);
    grouped[key].push_back({rest, t.coeff});
  }
  for (auto& [k, terms] : grouped) {
    RingElement c = RingElement::from_terms(coeff_ring, std::move(terms));
    if (!c.is_zero()) out.emplace(k, std::move(c));
  }
  return out;
}

// -------------------------------------------------------------- rendering

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const RingElement& e) {
  if (e.is_zero()) return "0";
  const QuotientRing& r = *e.ring();
  std::string out;
  bool first = true;
  for (const Term& t : e.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned k = t.mono[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += r.variable(i).name;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace orientcalc
