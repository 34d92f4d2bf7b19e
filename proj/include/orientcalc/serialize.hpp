#pragma once

// Canonical JSON forms and FGL configuration loading.

#include <json.hpp>

#include <optional>
#include <string>

#include "orientcalc/chern.hpp"
#include "orientcalc/cobordism.hpp"
#include "orientcalc/duality.hpp"
#include "orientcalc/fgl.hpp"

namespace orientcalc {

using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "mono": {var: exp}}, ...] in storage order.
Json to_json(const RingElement& e);
/// Accepts the term array or an expression string.
RingElement element_from_json(const Json& j, const RingPtr& ring);

Json to_json(const QuotientRing& ring);
/// Parses {"vars", "relations", "truncation"}; when `over` is given its
/// presentation comes first and duplicate names must agree.
RingPtr ring_from_json(const Json& j, const RingPtr& over = nullptr);

Json to_json(const UnivariateSeries& s);
Json to_json(const CoeffMatrix& m);
Json to_json(const std::vector<RingElement>& v);

Json fgl_to_config(const FormalGroupLaw& F);
FormalGroupLaw fgl_from_config(const Json& j);

/// Default weight truncation of the presets (D = W + 1).
inline constexpr int kDefaultPresetWeight = 8;

/// "additive", "multiplicative", "generic" or "generic:W". `weight`
/// overrides the preset's weight truncation.
std::optional<FormalGroupLaw> fgl_from_preset(const std::string& name,
                                              std::optional<int> weight = {});
/// A preset name or a path to a JSON config; `weight` sets D = W + 1.
FormalGroupLaw load_fgl(const std::string& spec,
                        std::optional<int> weight = {});

Json table_to_json(const FormalGroupLaw& F, const CobordismTable& t);

struct BundleFile {
  RingPtr base;
  BundleData bundle;
};

/// {"base": ring, "roots": [...]} or {"base": ring, "rank": n,
/// "classes": [...]}; the base ring is laid over `coeff_ring`.
BundleFile bundle_from_json(const Json& j, const RingPtr& coeff_ring);
Json to_json(const BundleData& b);

}  // namespace orientcalc
