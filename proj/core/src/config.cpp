#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"
#include "jcnc/nonclassicality.hpp"
#include "jcnc/runner.hpp"

namespace jcnc {

namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kKnownKeys = {
    "case",   "field_dim", "mean_photon",    "alpha",
    "t_max",  "n_points",  "layers",         "oracle_compare",
    "oracle_case_b_frequency", "output_prefix"};

double get_real(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, "expected a number, got " + v.dump());
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(key, "expected a finite number");
  return x;
}

int get_int(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::floor(x) == x && std::abs(x) < 1e9) return static_cast<int>(x);
  }
  throw ConfigError(key, "expected an integer, got " + v.dump());
}

CaseId parse_case(const json& v) {
  if (!v.is_string()) throw ConfigError("case", "expected one of \"A\", \"B\", \"C\", \"D\"");
  const auto s = v.get<std::string>();
  if (s == "A" || s == "a") return CaseId::A;
  if (s == "B" || s == "b") return CaseId::B;
  if (s == "C" || s == "c") return CaseId::C;
  if (s == "D" || s == "d") return CaseId::D;
  throw ConfigError("case", "expected one of \"A\", \"B\", \"C\", \"D\", got \"" + s + "\"");
}

}  // namespace

char to_char(CaseId id) { return static_cast<char>('A' + static_cast<int>(id)); }

ScenarioCase ScenarioConfig::scenario() const {
  switch (case_id) {
    case CaseId::A:
      return VacuumFieldExcitedAtom{};
    case CaseId::B:
      return FockFieldGroundAtom{};
    case CaseId::C:
      return ThermalFieldExcitedAtom{mean_photon.value_or(0.0)};
    case CaseId::D:
      return CoherentFieldExcitedAtom{{alpha.value_or(0.0), 0.0}};
  }
  return VacuumFieldExcitedAtom{};
}

ScenarioConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed configuration: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.contains(key)) throw ConfigError(key, "unknown key");
  }
  if (!doc.contains("case")) throw ConfigError("case", "required key is missing");

  ScenarioConfig cfg;
  cfg.case_id = parse_case(doc.at("case"));
  cfg.field_dim = cfg.case_id == CaseId::A ? 2 : 3;
  cfg.t_max = 2.0 * std::numbers::pi;
  cfg.oracle_case_b_frequency = std::sqrt(2.0);
  cfg.output_prefix = std::string("jc_case_") + static_cast<char>('a' + static_cast<int>(cfg.case_id));

  if (doc.contains("field_dim")) cfg.field_dim = get_int(doc, "field_dim");
  if (doc.contains("mean_photon")) cfg.mean_photon = get_real(doc, "mean_photon");
  if (doc.contains("alpha")) cfg.alpha = get_real(doc, "alpha");
  if (doc.contains("t_max")) cfg.t_max = get_real(doc, "t_max");
  if (doc.contains("n_points")) cfg.n_points = get_int(doc, "n_points");
  if (doc.contains("layers")) cfg.layers = get_int(doc, "layers");
  if (doc.contains("oracle_case_b_frequency")) {
    cfg.oracle_case_b_frequency = get_real(doc, "oracle_case_b_frequency");
  }
  if (doc.contains("oracle_compare")) {
    const json& v = doc.at("oracle_compare");
    if (!v.is_boolean()) throw ConfigError("oracle_compare", "expected true or false, got " + v.dump());
    cfg.oracle_compare = v.get<bool>();
  }
  if (doc.contains("output_prefix")) {
    const json& v = doc.at("output_prefix");
    if (!v.is_string() || v.get<std::string>().empty()) {
      throw ConfigError("output_prefix", "expected a non-empty path string");
    }
    cfg.output_prefix = v.get<std::string>();
  }

  // case-parameter consistency
  if (cfg.case_id == CaseId::C) {
    if (!cfg.mean_photon) throw ConfigError("mean_photon", "required for case C");
    if (!(*cfg.mean_photon > 0.0)) throw ConfigError("mean_photon", "must be positive");
  } else if (cfg.mean_photon) {
    throw ConfigError("mean_photon", "only valid for case C");
  }
  if (cfg.case_id == CaseId::D) {
    if (!cfg.alpha) throw ConfigError("alpha", "required for case D");
  } else if (cfg.alpha) {
    throw ConfigError("alpha", "only valid for case D");
  }

  const int min_dim = minimum_field_dim(cfg.scenario());
  if (cfg.field_dim < min_dim) {
    throw ConfigError("field_dim", "case " + std::string(1, to_char(cfg.case_id)) + " needs field_dim >= " +
                                       std::to_string(min_dim));
  }
  if (cfg.field_dim > 32) throw ConfigError("field_dim", "dense engine supports field_dim <= 32");
  if (cfg.n_points < 2) throw ConfigError("n_points", "must be at least 2");
  if (cfg.layers < 1) throw ConfigError("layers", "must be at least 1");
  if (cfg.layers > kMaxCascadeLayers) {
    throw ConfigError("layers", "must not exceed " + std::to_string(kMaxCascadeLayers));
  }
  if (!(cfg.t_max > 0.0)) throw ConfigError("t_max", "must be positive");
  if (!(cfg.oracle_case_b_frequency > 0.0)) throw ConfigError("oracle_case_b_frequency", "must be positive");
  return cfg;
}

std::string config_json(const ScenarioConfig& cfg) {
  json doc = {
      {"case", std::string(1, to_char(cfg.case_id))},
      {"field_dim", cfg.field_dim},
      {"t_max", cfg.t_max},
      {"n_points", cfg.n_points},
      {"layers", cfg.layers},
      {"oracle_compare", cfg.oracle_compare},
      {"oracle_case_b_frequency", cfg.oracle_case_b_frequency},
      {"output_prefix", cfg.output_prefix},
  };
  if (cfg.mean_photon) doc["mean_photon"] = *cfg.mean_photon;
  if (cfg.alpha) doc["alpha"] = *cfg.alpha;
  return doc.dump(2);
}

}  // namespace jcnc
