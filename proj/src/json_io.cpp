#include "wass1d/json_io.hpp"

#include <json.hpp>

#include "wass1d/error.hpp"

namespace wass1d {

using nlohmann::json;

namespace {

Domain parse_domain(const json& j) {
  const std::string d = j.at("domain").get<std::string>();
  if (d == "real") return Domain::RealLine;
  if (d == "unit") return Domain::UnitInterval;
  fail(ErrorCode::ParseError, "unknown domain '" + d + "'");
}

Measure measure_from(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "a measure must be a JSON object");
  const Domain domain = parse_domain(j);
  const std::string type = j.at("type").get<std::string>();
  if (type == "discrete") {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      if (!a.is_array() || a.size() != 2) fail(ErrorCode::ParseError, "an atom is [position, weight]");
      atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    }
    return from_atoms(domain, std::move(atoms));
  }
  if (type == "pl_quantile") {
    std::vector<double> breaks = j.at("breaks").get<std::vector<double>>();
    std::vector<Segment> segs;
    for (const auto& s : j.at("segments")) {
      if (!s.is_array() || s.size() != 2)
        fail(ErrorCode::ParseError, "a segment is [intercept, slope]");
      segs.push_back({s[0].get<double>(), s[1].get<double>()});
    }
    if (breaks.size() != segs.size() + 1 || breaks.front() != 0.0 || breaks.back() != 1.0)
      fail(ErrorCode::InvalidMeasure, "breaks must run from 0 to 1, one more than segments");
    return Measure::from_pieces(domain, std::move(breaks), std::move(segs));
  }
  fail(ErrorCode::ParseError, "unknown measure type '" + type + "'");
}

json measure_to(const Measure& mu) {
  json j;
  j["domain"] = to_string(mu.domain());
  if (mu.is_discrete()) {
    j["type"] = "discrete";
    json atoms = json::array();
    for (const auto& a : mu.atoms()) atoms.push_back({a.position, a.weight});
    j["atoms"] = std::move(atoms);
  } else {
    j["type"] = "pl_quantile";
    j["breaks"] = std::vector<double>(mu.breaks().begin(), mu.breaks().end());
    json segs = json::array();
    for (const auto& s : mu.segments()) segs.push_back({s.intercept, s.slope});
    j["segments"] = std::move(segs);
  }
  return j;
}

IsometryDescriptor descriptor_from(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "a descriptor must be a JSON object");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "trivial") {
    Trivial t{j.value("orientation", 1), j.value("offset", 0.0)};
    if (t.orientation != 1 && t.orientation != -1)
      fail(ErrorCode::InvalidArgument, "orientation must be 1 or -1");
    return {t};
  }
  if (kind == "flip") return {Flip{}};
  if (kind == "translation") return {Translation{measure_from(j.at("nu"))}};
  if (kind == "barycentric_reflection") return {BarycentricReflection{}};
  if (kind == "exotic") return {Exotic{j.at("q").get<double>()}};
  if (kind == "compose") {
    Composition c;
    for (const auto& item : j.at("items")) c.items.push_back(descriptor_from(item));
    return {std::move(c)};
  }
  fail(ErrorCode::ParseError, "unknown descriptor kind '" + kind + "'");
}

json descriptor_to(const IsometryDescriptor& iso) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return {{"kind", "trivial"}, {"orientation", d.orientation}, {"offset", d.offset}};
        } else if constexpr (std::is_same_v<T, Flip>) {
          return {{"kind", "flip"}};
        } else if constexpr (std::is_same_v<T, Translation>) {
          return {{"kind", "translation"}, {"nu", measure_to(d.nu)}};
        } else if constexpr (std::is_same_v<T, BarycentricReflection>) {
          return {{"kind", "barycentric_reflection"}};
        } else if constexpr (std::is_same_v<T, Exotic>) {
          return {{"kind", "exotic"}, {"q", d.q}};
        } else {
          json items = json::array();
          for (const auto& item : d.items) items.push_back(descriptor_to(item));
          return {{"kind", "compose"}, {"items", std::move(items)}};
        }
      },
      iso.kind);
}

template <class F>
auto guarded(const std::string& text, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Measure measure_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return measure_from(j); });
}

std::string measure_to_json(const Measure& mu) { return measure_to(mu).dump(); }

std::string measures_to_json(const std::vector<Measure>& measures) {
  json arr = json::array();
  for (const auto& m : measures) arr.push_back(measure_to(m));
  return arr.dump();
}

IsometryDescriptor descriptor_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return descriptor_from(j); });
}

std::string descriptor_to_json(const IsometryDescriptor& iso) { return descriptor_to(iso).dump(); }

}  // namespace wass1d
