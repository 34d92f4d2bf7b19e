#pragma once

// Duality matrices of P^n over a formal group law.

#include <vector>

#include "orientcalc/fgl.hpp"
#include "orientcalc/projspace.hpp"

namespace orientcalc {

/// Dense row-major matrix over a coefficient ring.
class CoeffMatrix {
 public:
  CoeffMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static CoeffMatrix identity(const RingPtr& ring, std::size_t n);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  RingElement& operator()(std::size_t i, std::size_t j) {
    return entries_.at(i * cols_ + j);
  }
  const RingElement& operator()(std::size_t i, std::size_t j) const {
    return entries_.at(i * cols_ + j);
  }

  CoeffMatrix transpose() const;
  /// Drops the given row and column.
  CoeffMatrix minor(std::size_t row, std::size_t col) const;

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> entries_;
};

/// Division-free determinant (Laplace expansion with memoised minors).
RingElement determinant(const CoeffMatrix& m);
/// Gauss-Jordan elimination with unit pivots. Throws NotInvertible.
CoeffMatrix invert_matrix(const CoeffMatrix& m);

/// (1, a_{1,1}, ..., a_{1,n}).
std::vector<RingElement> eta_coeffs(const FormalGroupLaw& F, int n);
/// (M_n)_{ij} = eta_{i+j-n}.
CoeffMatrix dual_matrix(const FormalGroupLaw& F, int n);
/// eta'_0..eta'_n read off the inverse of M_n.
std::vector<RingElement> eta_prime_coeffs(const FormalGroupLaw& F, int n);
/// eta'_i from the minors of M_n: (-1)^{n-i} det(minor(0, n-i)) / det M_n.
RingElement eta_prime_cofactor(const FormalGroupLaw& F, int n, int i);
/// sum eta_i eta'_{n-i} - [n = 0].
RingElement fundamental_relation_check(const FormalGroupLaw& F, int n);

/// The column (eta'_n, ..., eta'_1, 1)^T.
CoeffMatrix gysin_projection_vector(const FormalGroupLaw& F, int n);
/// (n+1)^2 x (n+1); row (j,k) is j*(n+1)+k.
CoeffMatrix pi_star_matrix(const FormalGroupLaw& F, int n);
/// (n+1) x (n+1)^2.
CoeffMatrix delta_star_matrix(const FormalGroupLaw& F, int n);

/// A-linear c^i -> eta'_{n-i} on an element of the P^n model.
RingElement pushforward_point(const FormalGroupLaw& F,
                              const CohomologyModel& pn, const RingElement& e);

/// G_{ij} = eta'_{n-i-j}.
CoeffMatrix pairing_gram(const FormalGroupLaw& F, int n);

}  // namespace orientcalc
