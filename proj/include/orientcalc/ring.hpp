#pragma once

// Exact sparse multivariate polynomials over Q, weight-graded, and quotient
// rings presented by nilpotency, triangular monic relations and a global
// weight truncation. Every cohomology class in the library is a RingElement.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orientcalc/errors.hpp"

namespace orientcalc {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVariables = 32;

/// Dense exponent vector indexed by the owning ring's variable order.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, kMaxVariables>;

  Monomial() noexcept { exps_.fill(0); }

  unsigned operator[](std::size_t var) const noexcept { return exps_[var]; }
  void set(std::size_t var, unsigned exponent);

  unsigned degree() const noexcept;
  bool is_one() const noexcept;
  const Exponents& exponents() const noexcept { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exps_;
};

/// Storage order: ascending total degree, and inside one degree the
/// lexicographically larger exponent vector first (first declared variable
/// most significant). Serialization and printing follow this order.
bool storage_less(const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial mono;
  Rational coeff;
};
using TermList = std::vector<Term>;

struct Variable {
  std::string name;
  int weight = 1;
  std::optional<int> nilpotency;  // x^k = 0
};

/// v^degree = rhs, where rhs only involves earlier variables and powers of v
/// below `degree`.
struct MonicRelation {
  int degree = 0;
  TermList rhs;
};

class RingElement;
class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// A polynomial ring Q[v_1..v_k] modulo
///   * nilpotency relations v^k = 0,
///   * triangular monic relations v^d = r_v (r_v in earlier variables),
///   * an optional truncation W: a term is discarded when the summed weight
///     of its positive-weight factors exceeds W, or when the summed |weight|
///     of its negative-weight factors exceeds W.
/// Instances are immutable and always owned by a shared_ptr.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  class Builder;

  const std::vector<Variable>& variables() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  const std::optional<MonicRelation>& relation(std::size_t i) const {
    return relations_.at(i);
  }
  bool has_relations() const noexcept { return has_relations_; }
  std::optional<int> truncation() const noexcept { return truncation_; }

  int weight(const Monomial& m) const noexcept;
  int positive_part(const Monomial& m) const noexcept;
  int negative_part(const Monomial& m) const noexcept;
  bool is_dropped(const Monomial& m) const noexcept;

  /// Largest exponent of variable i that can survive in a normal form.
  std::optional<unsigned> exponent_bound(std::size_t i) const;
  /// Largest positive part of any normal-form monomial, if bounded.
  std::optional<int> positive_bound() const;

  /// Reduces an arbitrary list of terms (indexed by this ring's variables)
  /// to the sorted canonical representative.
  TermList reduce(TermList raw) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement constant(const Rational& q) const;
  RingElement var(std::string_view name) const;
  RingElement parse(std::string_view expr) const;
  RingElement monomial(const Monomial& m, const Rational& coeff = 1) const;

  /// Same variables, relations and truncation.
  bool equivalent(const QuotientRing& other) const;

  /// A builder seeded with this ring's presentation.
  Builder extend() const;

 private:
  QuotientRing() = default;

  std::vector<Variable> vars_;
  std::vector<std::optional<MonicRelation>> relations_;
  std::optional<int> truncation_;
  bool has_relations_ = false;
};

class QuotientRing::Builder {
 public:
  Builder() = default;

  Builder& add_variable(std::string name, int weight,
                        std::optional<int> nilpotency = std::nullopt);
  Builder& add_relation(std::string_view var, int degree, TermList rhs);
  Builder& add_relation(std::string_view var, int degree,
                        std::string_view rhs_expr);
  Builder& set_truncation(std::optional<int> w);

  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::vector<Variable>& variables() const noexcept { return vars_; }
  std::optional<int> truncation() const noexcept { return truncation_; }

  /// Transports an element of another ring into this builder's indexing.
  TermList lift(const RingElement& e) const;
  TermList parse(std::string_view expr) const;

  RingPtr build() const;

 private:
  friend class QuotientRing;
  std::vector<Variable> vars_;
  std::vector<std::optional<MonicRelation>> relations_;
  std::optional<int> truncation_;
};

/// Polynomial ring over Q in the given variables, no relations.
RingPtr make_ring(std::vector<Variable> vars,
                  std::optional<int> truncation = std::nullopt);

/// An element in canonical form. Default-constructed elements are a
/// ring-less zero that adopts the ring of whatever it is combined with.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}

  /// Reduces `raw` in `ring`.
  static RingElement from_terms(RingPtr ring, TermList raw);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const Rational& q, const RingElement& a);
  friend RingElement operator*(const RingElement& a, const Rational& q) {
    return q * a;
  }
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingElement(RingPtr ring, TermList canonical)
      : ring_(std::move(ring)), terms_(std::move(canonical)) {}

  RingPtr ring_;
  TermList terms_;

  friend class QuotientRing;
};

RingElement pow(const RingElement& e, unsigned k);

/// Transports elements between rings by variable name.
class RingMap {
 public:
  RingMap(RingPtr from, RingPtr to);
  RingElement operator()(const RingElement& e) const;

 private:
  RingPtr from_;
  RingPtr to_;
  std::vector<std::optional<std::size_t>> index_;
};

/// Reduced representative of e in R; variables are matched by name.
RingElement normal_form(const RingElement& e, const RingPtr& ring);

/// Common weight of all terms; 0 for the zero element.
int weight_of(const RingElement& e);
/// True when e is zero or homogeneous of weight w.
bool has_weight(const RingElement& e, int w);
RingElement homogeneous_part(const RingElement& e, int w);

Rational augmentation(const RingElement& e);

/// Ring homomorphism image. Variables missing from `images` map to the
/// variable of the same name in `target`.
RingElement substitute(const RingElement& e,
                       const std::map<std::string, RingElement>& images,
                       const RingPtr& target);

/// Smallest k with e^k = 0. Throws NonTerminating when the ring gives no
/// bound on the order of e.
unsigned nilpotency_order(const RingElement& e);

RingElement invert_unit(const RingElement& e);

/// sum_k coeffs[k] * e^k; coefficients are transported into e's ring.
RingElement eval_series(std::span<const RingElement> coeffs,
                        const RingElement& e);

/// Groups the terms of e by the exponents of `vars`, transporting the
/// remaining factors into `coeff_ring`.
std::map<std::vector<unsigned>, RingElement> split_by(
    const RingElement& e, std::span<const std::string> vars,
    const RingPtr& coeff_ring);

std::string to_string(const RingElement& e);
std::string to_string(const Rational& q);

}  // namespace orientcalc
