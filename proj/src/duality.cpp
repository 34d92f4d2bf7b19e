#include "orientcalc/duality.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace orientcalc {

CoeffMatrix::CoeffMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, ring_->zero()) {}

CoeffMatrix CoeffMatrix::identity(const RingPtr& ring, std::size_t n) {
  CoeffMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

CoeffMatrix CoeffMatrix::transpose() const {
  CoeffMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

CoeffMatrix CoeffMatrix::minor(std::size_t row, std::size_t col) const {
  CoeffMatrix m(ring_, rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == col) continue;
      m(mi, mj++) = (*this)(i, j);
    }
    ++mi;
  }
  return m;
}

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::InvalidRing, "matrix shapes do not match");
  }
  CoeffMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RingElement determinant(const CoeffMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::InvalidRing, "determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return m.ring()->one();
  if (n > 63) throw Error(ErrorKind::InvalidRing, "matrix too large");
  // det of the bottom rows restricted to the column set `mask`.
  std::unordered_map<std::uint64_t, RingElement> memo;
  std::function<RingElement(std::uint64_t)> rec = [&](std::uint64_t mask) {
    std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (row == n) return m.ring()->one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    RingElement acc = m.ring()->zero();
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1U)) continue;
      if (!m(row, j).is_zero()) {
        RingElement sub = rec(mask & ~(std::uint64_t{1} << j));
        if (!sub.is_zero()) {
          RingElement t = m(row, j) * sub;
          acc += sign > 0 ? t : -t;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec((std::uint64_t{1} << n) - 1);
}

CoeffMatrix invert_matrix(const CoeffMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NotInvertible, "non-square matrix");
  }
  const std::size_t n = m.rows();
  CoeffMatrix a = m;
  CoeffMatrix inv = CoeffMatrix::identity(m.ring(), n);
  auto swap_rows = [n](CoeffMatrix& x, std::size_t r, std::size_t s) {
    for (std::size_t j = 0; j < n; ++j) std::swap(x(r, j), x(s, j));
  };
  for (std::size_t col = 0; col < n; ++col) {
    // Prefer constant pivots; otherwise any entry with nonzero augmentation.
    std::optional<std::size_t> pivot;
    for (std::size_t r = col; r < n; ++r) {
      const RingElement& e = a(r, col);
      if (augmentation(e) == 0) continue;
      if (e.size() == 1) {
        pivot = r;
        break;
      }
      if (!pivot) pivot = r;
    }
    if (!pivot) {
      throw Error(ErrorKind::NotInvertible,
                  "no unit pivot in column " + std::to_string(col));
    }
    swap_rows(a, col, *pivot);
    swap_rows(inv, col, *pivot);
    RingElement scale = invert_unit(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      RingElement f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<RingElement> eta_coeffs(const FormalGroupLaw& F, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidRing, "negative dimension");
  if (n >= 1 && !F.exact() && F.degree() < n + 1) {
    throw Error(ErrorKind::TruncationTooSmall,
                "eta_" + std::to_string(n) + " = a_{1," + std::to_string(n) +
                    "} needs D >= " + std::to_string(n + 1) + ", law has D = " +
                    std::to_string(F.degree()));
  }
  std::vector<RingElement> eta{F.coeff_ring()->one()};
  for (int i = 1; i <= n; ++i) eta.push_back(F.a(1, i));
  return eta;
}

CoeffMatrix dual_matrix(const FormalGroupLaw& F, int n) {
  auto eta = eta_coeffs(F, n);
  const auto size = static_cast<std::size_t>(n + 1);
  CoeffMatrix m(F.coeff_ring(), size, size);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i + j >= n) m(i, j) = eta[i + j - n];
    }
  }
  return m;
}

std::vector<RingElement> eta_prime_coeffs(const FormalGroupLaw& F, int n) {
  CoeffMatrix inv = invert_matrix(dual_matrix(F, n));
  std::vector<RingElement> out;
  for (int k = 0; k <= n; ++k) out.push_back(inv(0, n - k));
  return out;
}

RingElement eta_prime_cofactor(const FormalGroupLaw& F, int n, int i) {
  CoeffMatrix m = dual_matrix(F, n);
  RingElement det = determinant(m);
  if (n == 0) return invert_unit(det);
  RingElement minor = determinant(m.minor(0, static_cast<std::size_t>(n - i)));
  if ((n - i) % 2 != 0) minor = -minor;
  return minor * invert_unit(det);
}

RingElement fundamental_relation_check(const FormalGroupLaw& F, int n) {
  auto eta = eta_coeffs(F, n);
  auto etap = eta_prime_coeffs(F, n);
  RingElement s = F.coeff_ring()->zero();
  for (int i = 0; i <= n; ++i) s += eta[i] * etap[n - i];
  if (n == 0) s -= F.coeff_ring()->one();
  return s;
}

CoeffMatrix gysin_projection_vector(const FormalGroupLaw& F, int n) {
  auto etap = eta_prime_coeffs(F, n);
  CoeffMatrix v(F.coeff_ring(), static_cast<std::size_t>(n + 1), 1);
  for (int i = 0; i <= n; ++i) v(i, 0) = etap[n - i];
  return v;
}

CoeffMatrix pi_star_matrix(const FormalGroupLaw& F, int n) {
  auto etap = eta_prime_coeffs(F, n);
  const auto size = static_cast<std::size_t>(n + 1);
  CoeffMatrix m(F.coeff_ring(), size * size, size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      m(j * size + k, k) = etap[n - j];
    }
  }
  return m;
}

CoeffMatrix delta_star_matrix(const FormalGroupLaw& F, int n) {
  auto eta = eta_coeffs(F, n);
  const auto size = static_cast<std::size_t>(n + 1);
  CoeffMatrix m(F.coeff_ring(), size, size * size);
  for (int l = 0; l <= n; ++l) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        int idx = j + k - l - n;
        if (idx >= 0 && idx <= n) m(l, j * size + k) = eta[idx];
      }
    }
  }
  return m;
}

RingElement pushforward_point(const FormalGroupLaw& F,
                              const CohomologyModel& pn, const RingElement& e) {
  if (pn.kind != ModelKind::ProjSpace) {
    throw Error(ErrorKind::InvalidRing, "pushforward needs a P^n model");
  }
  const int n = pn.dims.at(0);
  auto etap = eta_prime_coeffs(F, n);
  std::vector<std::string> gen{pn.generators.at(0).name};
  RingElement out = F.coeff_ring()->zero();
  for (auto& [k, c] : split_by(normal_form(e, pn.ring), gen, F.coeff_ring())) {
    if (static_cast<int>(k[0]) <= n) out += c * etap[n - k[0]];
  }
  return out;
}

CoeffMatrix pairing_gram(const FormalGroupLaw& F, int n) {
  auto etap = eta_prime_coeffs(F, n);
  const auto size = static_cast<std::size_t>(n + 1);
  CoeffMatrix g(F.coeff_ring(), size, size);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) g(i, j) = etap[n - i - j];
  }
  return g;
}

}  // namespace orientcalc
