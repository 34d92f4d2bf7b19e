#include "orientcalc/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace orientcalc {

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorKind::ConfigError, what);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(first) || s[0] == '_' || first >= 0x80)) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || u >= 0x80)) return false;
  }
  return true;
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    config_error(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

FormalGroupLaw with_degree(const FormalGroupLaw& F, int degree) {
  switch (F.kind()) {
    case FglKind::Additive: return fgl_additive(degree);
    case FglKind::Multiplicative: return fgl_multiplicative(degree);
    case FglKind::Log:
      return fgl_from_log(F.log_coeffs(), degree);
    case FglKind::Explicit: {
      if (degree > F.degree()) {
        config_error("explicit law is only given up to degree " +
                     std::to_string(F.degree()));
      }
      FormalGroupLaw::Coeffs c;
      for (const auto& [ij, v] : F.coeffs()) {
        if (ij.first + ij.second <= degree) c.emplace(ij, v);
      }
      return FormalGroupLaw(FglKind::Explicit, F.coeff_ring(), degree,
                            std::move(c), false);
    }
  }
  config_error("unknown FGL kind");
}

}  // namespace

Json to_json(const RingElement& e) {
  Json out = Json::array();
  if (e.is_zero()) return out;
  const QuotientRing& r = *e.ring();
  for (const Term& t : e.terms()) {
    Json mono = Json::object();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (t.mono[i]) mono[r.variable(i).name] = t.mono[i];
    }
    out.push_back({{"coeff", to_string(t.coeff)}, {"mono", mono}});
  }
  return out;
}

RingElement element_from_json(const Json& j, const RingPtr& ring) {
  if (j.is_string()) return ring->parse(j.get<std::string>());
  if (j.is_number_integer()) return ring->constant(j.get<long>());
  if (!j.is_array()) config_error("element must be a term array or string");
  TermList terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff")) {
      config_error("term needs a \"coeff\" field");
    }
    Rational c;
    const auto& cj = t["coeff"];
    if (cj.is_string()) {
      try {
        c = Rational(cj.get<std::string>());
        c.canonicalize();
      } catch (const std::invalid_argument&) {
        config_error("bad coefficient '" + cj.get<std::string>() + "'");
      }
    } else if (cj.is_number_integer()) {
      c = cj.get<long>();
    } else {
      config_error("coefficient must be a \"p/q\" string");
    }
    if (c.get_den() == 0) config_error("zero denominator");
    Monomial m;
    if (t.contains("mono")) {
      for (const auto& [name, exp] : t["mono"].items()) {
        if (!exp.is_number_unsigned()) config_error("bad exponent for " + name);
        m.set(ring->require_index(name), exp.get<unsigned>());
      }
    }
    terms.push_back({m, c});
  }
  return RingElement::from_terms(ring, std::move(terms));
}

Json to_json(const QuotientRing& ring) {
  Json vars = Json::array();
  Json rels = Json::object();
  RingPtr self = ring.shared_from_this();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Variable& v = ring.variable(i);
    Json vj = {{"name", v.name}, {"weight", v.weight}};
    if (v.nilpotency) vj["nilpotency"] = *v.nilpotency;
    vars.push_back(vj);
    if (const auto& rel = ring.relation(i)) {
      rels[v.name] = {{"degree", rel->degree},
                      {"rhs", to_json(RingElement::from_terms(self, rel->rhs))}};
    }
  }
  Json out = {{"vars", vars}, {"relations", rels}};
  out["truncation"] = ring.truncation() ? Json(*ring.truncation()) : Json();
  return out;
}

RingPtr ring_from_json(const Json& j, const RingPtr& over) {
  if (!j.is_object()) config_error("ring must be an object");
  QuotientRing::Builder b = over ? over->extend() : QuotientRing::Builder();
  if (j.contains("vars")) {
    for (const auto& v : j["vars"]) {
      if (!v.contains("name") || !v["name"].is_string()) {
        config_error("variable needs a name");
      }
      std::string name = v["name"].get<std::string>();
      int weight = v.value("weight", 1);
      std::optional<int> nil;
      if (v.contains("nilpotency") && !v["nilpotency"].is_null()) {
        nil = v["nilpotency"].get<int>();
      }
      if (auto idx = b.index_of(name)) {
        const Variable& old = b.variables()[*idx];
        if (old.weight != weight || old.nilpotency != nil) {
          config_error("variable '" + name + "' clashes with the coefficient ring");
        }
        continue;
      }
      b.add_variable(name, weight, nil);
    }
  }
  if (j.contains("relations")) {
    RingPtr partial = b.build();
    for (const auto& [name, rel] : j["relations"].items()) {
      int degree = get_int(rel, "degree");
      if (!rel.contains("rhs")) config_error("relation needs \"rhs\"");
      b.add_relation(name, degree, b.lift(element_from_json(rel["rhs"], partial)));
    }
  }
  if (j.contains("truncation")) {
    b.set_truncation(j["truncation"].is_null()
                         ? (over ? over->truncation() : std::nullopt)
                         : std::optional<int>(j["truncation"].get<int>()));
  }
  return b.build();
}

Json to_json(const UnivariateSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs) out.push_back(to_json(c));
  return out;
}

Json to_json(const CoeffMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const std::vector<RingElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json fgl_to_config(const FormalGroupLaw& F) {
  Json out;
  switch (F.kind()) {
    case FglKind::Additive:
      return {{"kind", "additive"}, {"D", F.degree()}};
    case FglKind::Multiplicative:
      return {{"kind", "multiplicative"}, {"D", F.degree()}};
    case FglKind::Log:
      out = {{"kind", "log"}, {"D", F.degree()}};
      out["log_coeffs"] = to_json(F.log_coeffs());
      break;
    case FglKind::Explicit: {
      out = {{"kind", "explicit"}, {"D", F.degree()}};
      Json c = Json::object();
      for (const auto& [ij, v] : F.coeffs()) {
        c[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
            to_json(v);
      }
      out["explicit_coeffs"] = c;
      break;
    }
  }
  out["coeff_ring"] = to_json(*F.coeff_ring());
  return out;
}

FormalGroupLaw fgl_from_config(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    config_error("FGL config needs a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  const int degree = get_int(j, "D");
  if (degree < 1) config_error("\"D\" must be at least 1");
  if (kind == "additive") return fgl_additive(degree);
  if (kind == "multiplicative") return fgl_multiplicative(degree);

  RingPtr ring;
  if (j.contains("coeff_ring")) ring = ring_from_json(j["coeff_ring"]);

  if (kind == "log") {
    if (!j.contains("log_coeffs") || !j["log_coeffs"].is_array()) {
      config_error("log law needs a \"log_coeffs\" array");
    }
    const Json& lc = j["log_coeffs"];
    if (!ring) {
      // Bare symbols in position i are declared with weight -(i+1).
      QuotientRing::Builder b;
      for (std::size_t i = 0; i < lc.size(); ++i) {
        if (!lc[i].is_string()) continue;
        std::string s = lc[i].get<std::string>();
        if (is_identifier(s) && !b.index_of(s)) {
          b.add_variable(s, -static_cast<int>(i + 1));
        }
      }
      b.set_truncation(degree - 1);
      ring = b.build();
    }
    std::vector<RingElement> coeffs;
    for (const auto& c : lc) coeffs.push_back(element_from_json(c, ring));
    return fgl_from_log(coeffs, degree);
  }
  if (kind == "explicit") {
    if (!ring) ring = make_ring({});
    if (!j.contains("explicit_coeffs") || !j["explicit_coeffs"].is_object()) {
      config_error("explicit law needs an \"explicit_coeffs\" object");
    }
    FormalGroupLaw::Coeffs c;
    for (const auto& [key, val] : j["explicit_coeffs"].items()) {
      int i = 0;
      int k = 0;
      char comma = 0;
      std::istringstream is(key);
      if (!(is >> i >> comma >> k) || comma != ',' || !is.eof()) {
        config_error("bad coefficient key '" + key + "', expected \"i,j\"");
      }
      c[{i, k}] = element_from_json(val, ring);
    }
    return FormalGroupLaw(FglKind::Explicit, ring, degree, std::move(c), false);
  }
  config_error("unknown FGL kind '" + kind + "'");
}

std::optional<FormalGroupLaw> fgl_from_preset(const std::string& name,
                                              std::optional<int> weight) {
  int w = weight.value_or(kDefaultPresetWeight);
  if (w < 0) config_error("truncation must be non-negative");
  if (name == "additive") return fgl_additive(w + 1);
  if (name == "multiplicative") return fgl_multiplicative(w + 1);
  if (name == "generic") return fgl_generic(std::max(w, 1));
  if (name.rfind("generic:", 0) == 0) {
    std::string tail = name.substr(8);
    if (tail.empty() ||
        !std::all_of(tail.begin(), tail.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      config_error("bad preset '" + name + "'");
    }
    return fgl_generic(weight.value_or(std::stoi(tail)));
  }
  return std::nullopt;
}

FormalGroupLaw load_fgl(const std::string& spec, std::optional<int> weight) {
  if (auto f = fgl_from_preset(spec, weight)) return *f;
  std::ifstream in(spec);
  if (!in) config_error("'" + spec + "' is neither a preset nor a readable file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    config_error("cannot parse '" + spec + "': " + e.what());
  }
  FormalGroupLaw F = fgl_from_config(j);
  if (weight) {
    if (*weight < 0) config_error("truncation must be non-negative");
    return with_degree(F, *weight + 1);
  }
  return F;
}

Json table_to_json(const FormalGroupLaw& F, const CobordismTable& t) {
  return {{"fgl", fgl_to_config(F)}, {"classes", to_json(t.classes)}};
}

BundleFile bundle_from_json(const Json& j, const RingPtr& coeff_ring) {
  if (!j.is_object()) config_error("bundle file must be an object");
  RingPtr base = j.contains("base") ? ring_from_json(j["base"], coeff_ring)
                                    : coeff_ring;
  std::vector<RingElement> data;
  if (j.contains("roots")) {
    for (const auto& r : j["roots"]) data.push_back(element_from_json(r, base));
    if (data.empty()) return {base, BundleData::trivial(base, 0)};
    for (auto& d : data) d = normal_form(d, base);
    return {base, BundleData::from_roots(std::move(data))};
  }
  if (j.contains("classes")) {
    for (const auto& c : j["classes"]) data.push_back(element_from_json(c, base));
    if (j.contains("rank") && get_int(j, "rank") != static_cast<int>(data.size())) {
      config_error("\"rank\" does not match the number of classes");
    }
    if (data.empty()) return {base, BundleData::trivial(base, 0)};
    for (auto& d : data) d = normal_form(d, base);
    return {base, BundleData::from_classes(std::move(data))};
  }
  config_error("bundle file needs \"roots\" or \"classes\"");
}

Json to_json(const BundleData& b) {
  Json out;
  out["rank"] = b.rank();
  out[b.form() == BundleData::Form::Roots ? "roots" : "classes"] =
      to_json(b.data());
  return out;
}

}  // namespace orientcalc
