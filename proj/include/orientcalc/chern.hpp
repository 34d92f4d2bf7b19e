#pragma once

// Splitting-principle Chern calculus.

#include <string>
#include <vector>

#include "orientcalc/fgl.hpp"
#include "orientcalc/ring.hpp"

namespace orientcalc {

/// A vector bundle of rank n, either split (Chern roots) or given by its
/// Chern classes c_1..c_n. All elements live in one ring.
class BundleData {
 public:
  enum class Form { Roots, Classes };

  static BundleData from_roots(std::vector<RingElement> roots);
  static BundleData from_classes(std::vector<RingElement> classes);
  /// Rank-n trivial bundle (all classes zero) in `ring`.
  static BundleData trivial(const RingPtr& ring, int rank);

  Form form() const noexcept { return form_; }
  int rank() const noexcept { return static_cast<int>(data_.size()); }
  const RingPtr& ring() const noexcept { return ring_; }
  /// Roots in Roots form; c_1..c_n in Classes form.
  const std::vector<RingElement>& data() const noexcept { return data_; }

  /// c_1..c_n, from the roots when split.
  std::vector<RingElement> classes() const;
  /// c_k with c_0 = 1 and c_k = 0 beyond the rank.
  RingElement chern(int k) const;
  /// 1 + c_1 + ... + c_n.
  RingElement total() const;

 private:
  BundleData(Form form, RingPtr ring, std::vector<RingElement> data);

  Form form_;
  RingPtr ring_;
  std::vector<RingElement> data_;
};

/// e_1..e_n of the roots.
std::vector<RingElement> elementary_from_roots(
    const std::vector<RingElement>& roots);

/// The unique q with q(e_1(r)..e_n(r)) = p for p symmetric in the root
/// variables. The result lives in a ring with the non-root variables of p's
/// ring followed by `prefix`1..`prefix`n of weight k.
RingElement express_in_elementary(const RingElement& p,
                                  const std::vector<std::string>& roots,
                                  const std::string& prefix = "e");

BundleData whitney_total(const BundleData& a, const BundleData& b);
BundleData dual_bundle(const FormalGroupLaw& F, const BundleData& b);
/// L (x) E where l = c_1(L).
BundleData twist_by_line(const FormalGroupLaw& F, const RingElement& l,
                         const BundleData& b);
/// Classes of Q in 0 -> sub -> big -> Q -> 0.
BundleData quotient_chern(const BundleData& big, const BundleData& sub);

/// Weight-k parts of a total class 1 + ..., k = 1..rank.
BundleData classes_from_total(const RingElement& total, int rank);

}  // namespace orientcalc
