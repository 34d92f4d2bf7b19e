#pragma once

#include <algorithm>

#include "orientcalc/ring.hpp"

namespace orientcalc::detail {

// Builds a model ring over a coefficient ring whose own truncation W must
// not cut into the model's positive window: the result keeps max(W, P).
inline RingPtr build_with_window(QuotientRing::Builder b,
                                 std::optional<int> coeff_truncation) {
  b.set_truncation(std::nullopt);
  if (!coeff_truncation) return b.build();
  RingPtr loose = b.build();
  int w = *coeff_truncation;
  if (auto p = loose->positive_bound()) w = std::max(w, *p);
  b.set_truncation(w);
  return b.build();
}

}  // namespace orientcalc::detail
