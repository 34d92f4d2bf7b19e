#pragma once

// Cobordism classes of projective spaces, fundamental-class expansions,
// blow-up matrices and F-intersection multiplicities.

#include <optional>
#include <string>
#include <vector>

#include "orientcalc/duality.hpp"
#include "orientcalc/fgl.hpp"

namespace orientcalc {

struct CobordismTable {
  std::vector<RingElement> classes;  // [P^0] .. [P^N]
};

/// [P^n] = -sum_{i=1}^n a_{1,i} [P^{n-i}].
CobordismTable pn_class_recurrence(const FormalGroupLaw& F, int N);
/// Coefficients of 1 / omega(x).
CobordismTable pn_class_series(const FormalGroupLaw& F, int N);

/// Orientation of the n x n matrix in the determinant formula.
///   HankelAsPrinted:    H_ij = a_{1, i+j-n+2}
///   HankelRowReversed:  H_{n-1-i, j} = a_{1, j-i+1}
///   HankelColReversed:  H_{i, n-1-j} = a_{1, i-j+1}
enum class DetLayout { HankelAsPrinted, HankelRowReversed, HankelColReversed };

/// The layout that reproduces the recurrence; see resolve_det_layout.
inline constexpr DetLayout kFrozenDetLayout = DetLayout::HankelRowReversed;

std::string to_string(DetLayout layout);
CoeffMatrix myschenko_matrix(const FormalGroupLaw& F, int n, DetLayout layout);
/// [P^n] = (-1)^n det of the layout's matrix.
CobordismTable pn_class_det(const FormalGroupLaw& F, int N,
                            DetLayout layout = kFrozenDetLayout);
/// First layout agreeing with the recurrence for every n <= N; throws
/// LayoutInconsistent if none does.
DetLayout resolve_det_layout(const FormalGroupLaw& F, int N);

/// [X] = sum x_i [P^{N-i}]; weight(x_i) + i must be constant.
RingElement class_from_fundamental(const std::vector<RingElement>& x,
                                   const FormalGroupLaw& F, int N);

struct Multiplicity {
  RingPtr base;        // A[nu]/(nu^k)
  RingElement rho;     // in base
  RingElement thom;    // t = nu - xi in the Thom model
  RingElement target;  // [r]_F(t)
};

/// rho with [r]_F(t) = rho * t for the Thom class t of a line bundle with
/// root nu, nu^k = 0. Throws NoSolution / AmbiguousSolution.
Multiplicity f_intersection_multiplicity(const FormalGroupLaw& F, int r,
                                         int nu_nilpotency = 3);

struct DivisorPullbackReport {
  RingElement value;     // [r]_F(h) in A[h]/(h^{n+1})
  RingElement rho;       // multiplicity with nu -> h
  RingElement residual;  // value - rho * h
  bool passed = false;
};

DivisorPullbackReport divisor_pullback_check(const FormalGroupLaw& F, int r,
                                             int n);

struct BlowupMatrices {
  CoeffMatrix full;     // n x (n+1)
  CoeffMatrix dropped;  // first column removed
};

BlowupMatrices blowup_gysin_matrix(const FormalGroupLaw& F, int n);

/// p_*(e) for e = c_d(Q) on P^d.
RingElement blowup_unit_check(const FormalGroupLaw& F, int d);

}  // namespace orientcalc
