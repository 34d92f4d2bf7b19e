#include "orientcalc/cobordism.hpp"

#include <set>

#include "orientcalc/chern.hpp"
#include "orientcalc/projspace.hpp"
#include "window.hpp"

namespace orientcalc {

namespace {

RingElement a1(const std::vector<RingElement>& eta, const RingPtr& ring,
               int k) {
  if (k < 0 || k >= static_cast<int>(eta.size())) return ring->zero();
  return eta[k];
}

// Monomials of the coefficient ring of weight w <= 0.
std::vector<Monomial> monomials_of_weight(const RingPtr& ring, int w) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    int vw = ring->variable(i).weight;
    if (vw >= 0) {
      throw Error(ErrorKind::InvalidRing,
                  "coefficient variable '" + ring->variable(i).name +
                      "' must have negative weight");
    }
    vars.push_back(i);
  }
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (remaining == 0) {
      if (!ring->is_dropped(m)) out.push_back(m);
      return;
    }
    if (k == vars.size()) return;
    int step = -ring->variable(vars[k]).weight;
    for (int e = 0; e * step <= remaining; ++e) {
      m.set(vars[k], static_cast<unsigned>(e));
      self(self, k + 1, remaining - e * step);
    }
    m.set(vars[k], 0);
  };
  rec(rec, 0, -w);
  return out;
}

// Solves sum_j q_j cols[j] = rhs over Q; each column is an element of one
// ring. Returns the unique solution.
std::vector<Rational> solve_unique(const std::vector<RingElement>& cols,
                                   const RingElement& rhs) {
  std::vector<Monomial> rows;
  auto index = [&](const Monomial& m) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == m) return i;
    }
    rows.push_back(m);
    return rows.size() - 1;
  };
  for (const auto& c : cols) {
    for (const Term& t : c.terms()) index(t.mono);
  }
  for (const Term& t : rhs.terms()) index(t.mono);
  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1));
  for (std::size_t j = 0; j < nc; ++j) {
    for (const Term& t : cols[j].terms()) a[index(t.mono)][j] = t.coeff;
  }
  for (const Term& t : rhs.terms()) a[index(t.mono)][nc] = t.coeff;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t p = row;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = col; k <= nc; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < nr; ++r) {
    if (a[r][nc] != 0) {
      throw Error(ErrorKind::NoSolution, "rho * t = [r](t) is inconsistent");
    }
  }
  if (pivot_col.size() < nc) {
    throw Error(ErrorKind::AmbiguousSolution,
                "rho * t = [r](t) does not determine rho");
  }
  std::vector<Rational> q(nc);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) q[pivot_col[r]] = a[r][nc];
  return q;
}

}  // namespace

CobordismTable pn_class_recurrence(const FormalGroupLaw& F, int N) {
  auto eta = eta_coeffs(F, N);
  const RingPtr& ring = F.coeff_ring();
  CobordismTable t;
  t.classes.push_back(ring->one());
  for (int n = 1; n <= N; ++n) {
    RingElement s = ring->zero();
    for (int i = 1; i <= n; ++i) s += eta[i] * t.classes[n - i];
    t.classes.push_back(-s);
  }
  return t;
}

CobordismTable pn_class_series(const FormalGroupLaw& F, int N) {
  if (N < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  if (N >= 1 && !F.exact() && F.degree() < N + 1) {
    throw Error(ErrorKind::TruncationTooSmall,
                "omega up to x^" + std::to_string(N) + " needs D >= " +
                    std::to_string(N + 1));
  }
  const RingPtr& a = F.coeff_ring();
  auto b = a->extend();
  b.add_variable("x", 1, N + 1);
  RingPtr ring = detail::build_with_window(std::move(b), a->truncation());
  RingMap lift(a, ring);
  RingElement x = ring->var("x");
  RingElement omega = ring->zero();
  RingElement p = ring->one();
  for (int i = 0; i <= N; ++i) {
    omega += lift(F.a(i, 1)) * p;
    p *= x;
  }
  RingElement inv = invert_unit(omega);
  UnivariateSeries s{a, std::vector<RingElement>(N + 1, a->zero())};
  std::vector<std::string> xs{"x"};
  for (auto& [k, v] : split_by(inv, xs, a)) s.coeffs[k[0]] = v;
  return {s.coeffs};
}

std::string to_string(DetLayout layout) {
  switch (layout) {
    case DetLayout::HankelAsPrinted: return "hankel-as-printed";
    case DetLayout::HankelRowReversed: return "hankel-row-reversed";
    case DetLayout::HankelColReversed: return "hankel-col-reversed";
  }
  return "unknown";
}

CoeffMatrix myschenko_matrix(const FormalGroupLaw& F, int n,
                             DetLayout layout) {
  auto eta = eta_coeffs(F, n);
  const RingPtr& ring = F.coeff_ring();
  const auto size = static_cast<std::size_t>(n);
  CoeffMatrix m(ring, size, size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = 0;
      switch (layout) {
        case DetLayout::HankelAsPrinted: k = i + j - n + 2; break;
        case DetLayout::HankelRowReversed: k = j - i + 1; break;
        case DetLayout::HankelColReversed: k = i - j + 1; break;
      }
      m(i, j) = a1(eta, ring, k);
    }
  }
  return m;
}

CobordismTable pn_class_det(const FormalGroupLaw& F, int N,
                            DetLayout layout) {
  CobordismTable t;
  for (int n = 0; n <= N; ++n) {
    RingElement d = determinant(myschenko_matrix(F, n, layout));
    t.classes.push_back(n % 2 == 0 ? d : -d);
  }
  return t;
}

DetLayout resolve_det_layout(const FormalGroupLaw& F, int N) {
  auto expected = pn_class_recurrence(F, N).classes;
  for (DetLayout l : {DetLayout::HankelAsPrinted, DetLayout::HankelRowReversed,
                      DetLayout::HankelColReversed}) {
    if (pn_class_det(F, N, l).classes == expected) return l;
  }
  throw Error(ErrorKind::LayoutInconsistent,
              "no orientation of the determinant matrix reproduces the "
              "recurrence up to n = " + std::to_string(N));
}

RingElement class_from_fundamental(const std::vector<RingElement>& x,
                                   const FormalGroupLaw& F, int N) {
  if (static_cast<int>(x.size()) > N + 1) {
    throw Error(ErrorKind::InvalidRing, "more coefficients than N + 1");
  }
  std::optional<int> codim;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    int w = weight_of(x[i]) + static_cast<int>(i);
    if (codim && *codim != w) {
      throw Error(ErrorKind::NotHomogeneous,
                  "x_" + std::to_string(i) + " has weight " +
                      std::to_string(w - static_cast<int>(i)) + ", expected " +
                      std::to_string(*codim - static_cast<int>(i)));
    }
    codim = w;
  }
  auto table = pn_class_recurrence(F, N);
  RingElement out = F.coeff_ring()->zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) {
      out += normal_form(x[i], F.coeff_ring()) * table.classes[N - i];
    }
  }
  return out;
}

Multiplicity f_intersection_multiplicity(const FormalGroupLaw& F, int r,
                                         int nu_nilpotency) {
  if (nu_nilpotency < 1) {
    throw Error(ErrorKind::InvalidRing, "nu needs nilpotency >= 1");
  }
  const RingPtr& a = F.coeff_ring();
  auto b = a->extend();
  b.add_variable("nu", 1, nu_nilpotency);
  RingPtr base = detail::build_with_window(std::move(b), a->truncation());
  CohomologyModel model =
      model_thom(base, BundleData::from_roots({base->var("nu")}));
  RingElement t = thom_class(F, model, ThomRoute::Relation);
  RingElement target = apply_series(F, n_series(F, r), t);

  std::vector<Monomial> basis;
  std::vector<RingElement> cols;
  std::size_t nu = base->require_index("nu");
  for (int j = 0; j < nu_nilpotency; ++j) {
    for (Monomial m : monomials_of_weight(a, -j)) {
      Monomial lifted;
      for (std::size_t i = 0; i < a->size(); ++i) {
        if (m[i]) lifted.set(base->require_index(a->variable(i).name), m[i]);
      }
      lifted.set(nu, static_cast<unsigned>(j));
      if (base->is_dropped(lifted)) continue;
      basis.push_back(lifted);
      cols.push_back(normal_form(base->monomial(lifted), model.ring) * t);
    }
  }
  auto q = solve_unique(cols, target);
  TermList terms;
  for (std::size_t i = 0; i < basis.size(); ++i) terms.push_back({basis[i], q[i]});
  return {base, RingElement::from_terms(base, std::move(terms)), t, target};
}

DivisorPullbackReport divisor_pullback_check(const FormalGroupLaw& F, int r,
                                             int n) {
  CohomologyModel pn = model_projspace(F.coeff_ring(), n, Convention::Canonical,
                                       "h");
  RingElement h = pn.gen();
  DivisorPullbackReport rep;
  rep.value = tensor_power_c1(F, h, r);
  Multiplicity mult = f_intersection_multiplicity(F, r, n + 1);
  rep.rho = substitute(mult.rho, {{"nu", h}}, pn.ring);
  rep.residual = rep.value - rep.rho * h;
  rep.passed = rep.residual.is_zero() && augmentation(mult.rho) == r;
  return rep;
}

BlowupMatrices blowup_gysin_matrix(const FormalGroupLaw& F, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidRing, "blow-up matrix needs n >= 1");
  auto pn = pn_class_recurrence(F, n - 1).classes;
  const RingPtr& ring = F.coeff_ring();
  const auto size = static_cast<std::size_t>(n);
  CoeffMatrix full(ring, size, size + 1);
  for (int i = 0; i + 1 < n; ++i) full(i, i + 1) = ring->one();
  for (int i = 0; i < n; ++i) full(i, size) = pn[n - 1 - i];
  CoeffMatrix dropped(ring, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) dropped(i, j) = full(i, j + 1);
  }
  return {full, dropped};
}

RingElement blowup_unit_check(const FormalGroupLaw& F, int d) {
  CohomologyModel pd = model_projspace(F.coeff_ring(), d, Convention::Dual);
  const RingPtr& ring = pd.ring;
  // c_1(L) = m(c) for the dual generator c; Q = trivial^{d+1} / L.
  RingElement l = apply_series(F, formal_inverse(F), pd.gen());
  BundleData q = quotient_chern(BundleData::trivial(ring, d + 1),
                                BundleData::from_roots({l}));
  return pushforward_point(F, pd, q.chern(d));
}

}  // namespace orientcalc
