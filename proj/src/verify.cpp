#include "orientcalc/verify.hpp"

#include <functional>
#include <sstream>

#include "orientcalc/chern.hpp"
#include "orientcalc/cobordism.hpp"
#include "orientcalc/duality.hpp"
#include "orientcalc/projspace.hpp"

namespace orientcalc {

namespace {

using Check = std::function<std::string()>;

std::string fail_at(const std::string& what, int n) {
  return what + " at n = " + std::to_string(n);
}

// Base ring A[x_1..x_n] truncated at D for Thom-class comparisons.
RingPtr thom_base(const FormalGroupLaw& F, int rank) {
  auto b = F.coeff_ring()->extend();
  for (int i = 1; i <= rank; ++i) b.add_variable("x" + std::to_string(i), 1);
  b.set_truncation(F.degree());
  return b.build();
}

std::string check_thom(const FormalGroupLaw& F, int rank) {
  RingPtr base = thom_base(F, rank);
  std::vector<RingElement> roots;
  for (int i = 1; i <= rank; ++i) roots.push_back(base->var("x" + std::to_string(i)));
  CohomologyModel model =
      rank == 0 ? model_thom(base, BundleData::trivial(base, 0))
                : model_thom(base, BundleData::from_roots(roots));
  RingElement rel = thom_class(F, model, ThomRoute::Relation);
  RingElement tw = thom_class(F, model, ThomRoute::Twist);
  RingElement qu = thom_class(F, model, ThomRoute::Quotient);
  if (!(rel == tw)) return fail_at("relation != twist", rank);
  if (!(rel == qu)) return fail_at("relation != quotient", rank);
  if (!has_weight(rel, rank)) return fail_at("Thom class weight", rank);
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(const FormalGroupLaw& F, int max_n) {
  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const Check& fn) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const Error& e) {
      r.detail = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    out.push_back(std::move(r));
  };
  const RingPtr& A = F.coeff_ring();
  const RingPtr& S = F.series_ring();
  const bool generic = F.kind() == FglKind::Log || F.kind() == FglKind::Explicit;

  run("fgl-axioms", [&]() -> std::string {
    auto v = check_axioms(F);
    if (v.empty()) return {};
    std::ostringstream os;
    os << v.size() << " violation(s); first: " << v.front().axiom << " "
       << v.front().where << ": " << to_string(v.front().defect);
    return os.str();
  });

  run("formal-inverse", [&]() -> std::string {
    RingElement x = S->var("x");
    RingElement m = series_element(F, formal_inverse(F));
    RingElement r = F(x, m);
    return r.is_zero() ? std::string() : "F(x, m(x)) = " + to_string(r);
  });

  run("n-series-additivity", [&]() -> std::string {
    for (int r = -3; r <= 3; ++r) {
      for (int s = -3; s <= 3; ++s) {
        RingElement lhs = series_element(F, n_series(F, r + s));
        RingElement rhs = F(series_element(F, n_series(F, r)),
                            series_element(F, n_series(F, s)));
        if (!(lhs == rhs)) {
          return "[r+s] != F([r],[s]) for r = " + std::to_string(r) +
                 ", s = " + std::to_string(s);
        }
      }
    }
    return {};
  });

  run("pn-triple-agreement", [&]() -> std::string {
    auto rec = pn_class_recurrence(F, max_n).classes;
    auto ser = pn_class_series(F, max_n).classes;
    auto det = pn_class_det(F, max_n).classes;
    for (int n = 0; n <= max_n; ++n) {
      if (!(rec[n] == ser[n])) return fail_at("recurrence != series", n);
      if (!(rec[n] == det[n])) return fail_at("recurrence != determinant", n);
    }
    return {};
  });

  run("p-omega-inverse", [&]() -> std::string {
    auto p = pn_class_series(F, max_n).classes;
    for (int k = 0; k <= max_n; ++k) {
      RingElement s = A->zero();
      for (int i = 0; i <= k; ++i) s += p[i] * F.a(k - i, 1);
      if (!(s == (k == 0 ? A->one() : A->zero()))) {
        return fail_at("p(x) omega(x) coefficient", k);
      }
    }
    return {};
  });

  run("myschenko-relation", [&]() -> std::string {
    auto p = pn_class_recurrence(F, max_n).classes;
    for (int n = 1; n <= max_n; ++n) {
      RingElement s = A->zero();
      for (int i = 0; i <= n; ++i) {
        s += (i == 0 ? A->one() : F.a(1, i)) * p[n - i];
      }
      if (!s.is_zero()) return fail_at("sum a_{1,i}[P^{n-i}] != 0", n);
    }
    return {};
  });

  run("det-layout", [&]() -> std::string {
    // Small sizes cannot tell the layouts apart; only require that the
    // frozen one is among those that match.
    resolve_det_layout(F, max_n);
    if (!(pn_class_det(F, max_n, kFrozenDetLayout).classes ==
          pn_class_recurrence(F, max_n).classes)) {
      return "frozen layout " + to_string(kFrozenDetLayout) +
             " does not reproduce the recurrence";
    }
    return {};
  });

  run("eta-prime-equals-pn", [&]() -> std::string {
    auto p = pn_class_recurrence(F, max_n).classes;
    for (int n = 0; n <= max_n; ++n) {
      if (!(eta_prime_coeffs(F, n)[n] == p[n])) return fail_at("eta'_n != [P^n]", n);
    }
    return {};
  });

  run("dual-matrix-inverse", [&]() -> std::string {
    for (int n = 0; n <= max_n; ++n) {
      CoeffMatrix m = dual_matrix(F, n);
      if (!(m == m.transpose())) return fail_at("M_n not symmetric", n);
      if (!(m * invert_matrix(m) == CoeffMatrix::identity(A, n + 1))) {
        return fail_at("M_n M_n^-1 != I", n);
      }
    }
    return {};
  });

  run("fundamental-relation", [&]() -> std::string {
    for (int n = 0; n <= max_n; ++n) {
      if (!fundamental_relation_check(F, n).is_zero()) {
        return fail_at("sum eta_i eta'_{n-i} != [n=0]", n);
      }
    }
    return {};
  });

  run("eta-prime-cofactor", [&]() -> std::string {
    for (int n = 0; n <= max_n; ++n) {
      auto etap = eta_prime_coeffs(F, n);
      for (int i = 0; i <= n; ++i) {
        if (!(eta_prime_cofactor(F, n, i) == etap[i])) {
          return fail_at("cofactor eta'_" + std::to_string(i), n);
        }
      }
    }
    return {};
  });

  run("gysin-delta-pi", [&]() -> std::string {
    for (int n = 0; n <= std::min(max_n, 4); ++n) {
      if (!(delta_star_matrix(F, n) * pi_star_matrix(F, n) ==
            CoeffMatrix::identity(A, n + 1))) {
        return fail_at("delta* pi* != I", n);
      }
    }
    return {};
  });

  run("pairing-gram", [&]() -> std::string {
    for (int n = 0; n <= max_n; ++n) {
      CoeffMatrix g = pairing_gram(F, n);
      if (!(g == g.transpose())) return fail_at("Gram not symmetric", n);
      RingElement d = determinant(g);
      if (!(d == A->one() || d == -A->one())) return fail_at("det G != +-1", n);
    }
    return {};
  });

  run("diagonal-direct-closed", [&]() -> std::string {
    for (int n = 0; n <= std::min(max_n, 3); ++n) {
      RingElement closed = diagonal_class_closed(F, n);
      if (!(diagonal_class_direct(F, n) == closed)) {
        return fail_at("direct != closed", n);
      }
      if (!has_weight(closed, n)) return fail_at("diagonal weight", n);
    }
    return {};
  });

  run("diagonal-hyperplane", [&]() -> std::string {
    std::vector<std::string> cd{"c", "d"};
    for (int n = 0; n + 1 <= max_n; ++n) {
      CohomologyModel small = model_product(A, n, n, Convention::Dual);
      RingElement big = diagonal_class_closed(F, n + 1);
      RingElement cur = diagonal_class_closed(F, n);
      if (!(restrict_hyperplane(big, small) == small.gen(0) * cur)) {
        return fail_at("restriction != c * diagonal", n);
      }
      auto eb = split_by(big, cd, A);
      auto ec = split_by(cur, cd, A);
      auto coeff = [&](auto& m, unsigned i, unsigned j) {
        auto it = m.find({i, j});
        return it == m.end() ? A->zero() : it->second;
      };
      for (unsigned j = 0; j <= static_cast<unsigned>(n); ++j) {
        if (!coeff(eb, 0, j).is_zero()) return fail_at("eta^{(n+1)}_{0,j} != 0", n);
        for (unsigned i = 1; i <= static_cast<unsigned>(n); ++i) {
          if (!(coeff(eb, i, j) == coeff(ec, i - 1, j))) {
            return fail_at("eta^{(n+1)}_{i,j} != eta^{(n)}_{i-1,j}", n);
          }
        }
      }
    }
    return {};
  });

  run("thom-three-routes", [&]() -> std::string {
    int cap = generic ? 3 : 4;
    for (int rank = 0; rank <= std::min(max_n, cap); ++rank) {
      if (auto d = check_thom(F, rank); !d.empty()) return d;
    }
    return {};
  });

  run("multiplicity", [&]() -> std::string {
    for (int r = 1; r <= std::max(max_n, 1); ++r) {
      Multiplicity m = f_intersection_multiplicity(F, r);
      if (augmentation(m.rho) != r) return fail_at("augmentation(rho) != r", r);
      if (!(normal_form(m.rho, m.thom.ring()) * m.thom == m.target)) {
        return fail_at("rho t != [r](t)", r);
      }
      if (F.kind() == FglKind::Additive && !(m.rho == m.base->constant(r))) {
        return fail_at("additive rho != r", r);
      }
    }
    return {};
  });

  run("divisor-pullback", [&]() -> std::string {
    for (int r = 1; r <= 3; ++r) {
      auto rep = divisor_pullback_check(F, r, std::max(max_n, 1));
      if (!rep.passed) return "residual " + to_string(rep.residual) + " for r = " + std::to_string(r);
    }
    return {};
  });

  run("blowup-matrix", [&]() -> std::string {
    for (int n = 1; n <= std::min(std::max(max_n, 1), 5); ++n) {
      RingElement d = determinant(blowup_gysin_matrix(F, n).dropped);
      if (augmentation(d) == 0) return fail_at("dropped determinant not a unit", n);
    }
    return {};
  });

  run("blowup-unit", [&]() -> std::string {
    for (int d = 1; d <= std::min(std::max(max_n, 1), 3); ++d) {
      RingElement v = blowup_unit_check(F, d);
      if (augmentation(v) != 1) return fail_at("p_*(e) has augmentation != 1", d);
      if (F.kind() == FglKind::Additive && !(v == A->one())) {
        return fail_at("additive p_*(e) != 1", d);
      }
    }
    return {};
  });

  run("homogeneity", [&]() -> std::string {
    auto p = pn_class_recurrence(F, max_n).classes;
    for (int n = 0; n <= max_n; ++n) {
      if (!has_weight(p[n], -n)) return fail_at("[P^n] weight", n);
      auto etap = eta_prime_coeffs(F, n);
      for (int i = 0; i <= n; ++i) {
        if (!has_weight(etap[i], -i)) return fail_at("eta'_i weight", i);
      }
    }
    return {};
  });

  return out;
}

}  // namespace orientcalc
