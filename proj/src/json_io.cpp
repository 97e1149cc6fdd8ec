#include "salem/json_io.hpp"

#include <fstream>

namespace salem {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::ConfigError, std::string(what) + " must be an array");
  std::vector<int> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      fail(ErrorKind::ConfigError, std::string(what) + " entries must be integers");
    v.push_back(e.get<int>());
  }
  return v;
}

}  // namespace

ModifiedSalem config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");
  for (const char* key : {"q", "p", "theta"}) {
    if (!j.contains(key))
      fail(ErrorKind::ConfigError, std::string("config is missing \"") + key + "\"");
  }
  if (!j["q"].is_number_integer())
    fail(ErrorKind::ConfigError, "\"q\" must be an integer");
  if (!j["p"].is_array())
    fail(ErrorKind::ConfigError, "\"p\" must be an array of reals");
  std::vector<double> p;
  for (const auto& e : j["p"]) {
    if (!e.is_number())
      fail(ErrorKind::ConfigError, "\"p\" entries must be numbers");
    p.push_back(e.get<double>());
  }
  try {
    SalemSystem sys = validate_system(j["q"].get<int>(), p);
    DigitPermutation theta = make_permutation(int_vector(j["theta"], "\"theta\""));
    return make_modified_salem(std::move(sys), std::move(theta));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    fail(ErrorKind::ConfigError, e.what());
  }
}

ModifiedSalem load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ConfigError, "cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

json digit_string_to_json(const DigitString& d) {
  json j;
  j["prefix"] = d.prefix;
  if (d.has_period())
    j["period"] = d.period;
  else
    j["period"] = nullptr;
  return j;
}

DigitString digit_string_from_json(const SalemSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("prefix"))
    fail(ErrorKind::ConfigError, "digit string must be {\"prefix\":[...],\"period\":[...]|null}");
  std::vector<int> prefix = int_vector(j["prefix"], "\"prefix\"");
  std::vector<int> period;
  if (j.contains("period") && !j["period"].is_null())
    period = int_vector(j["period"], "\"period\"");
  return make_digit_string(sys, std::move(prefix), std::move(period));
}

json to_json(const JumpReport& r) {
  return json{{"x0", r.x0},
              {"left", r.left_limit},
              {"right", r.right_limit},
              {"jump", r.jump}};
}

json to_json(const IncrementResult& r) {
  return json{{"base", r.cylinder.base},
              {"mu", r.mu},
              {"length", r.length},
              {"ratio", r.ratio}};
}

json to_json(const FrequencyTable& t) {
  return json{{"counts", t.counts}, {"r", t.r}, {"freqs", t.freqs}};
}

json to_json(const MoranResult& r) {
  return json{{"digit_set", r.digit_set},
              {"alpha", r.alpha},
              {"residual", r.residual}};
}

json to_json(const DimensionBounds& d) {
  return json{{"a", d.a},           {"b", d.b},   {"alpha1", d.alpha1},
              {"alpha2", d.alpha2}, {"lo", d.lo}, {"hi", d.hi}};
}

json to_json(const IntegralResult& r) {
  return json{{"value", r.value},
              {"numerator", r.numerator},
              {"denominator", r.denominator}};
}

json to_json(const FixedSetClass& c) {
  const char* kind = nullptr;
  switch (c.kind) {
    case FixedSetKind::Empty: kind = "Empty"; break;
    case FixedSetKind::Singleton: kind = "Singleton"; break;
    case FixedSetKind::Interval: kind = "Interval"; break;
    case FixedSetKind::Fractal: kind = "Fractal"; break;
  }
  json j{{"kind", kind}, {"fixed_digits", c.fixed_digits}};
  j["point"] = c.point ? json(*c.point) : json(nullptr);
  j["dimension"] = c.dimension ? to_json(*c.dimension) : json(nullptr);
  return j;
}

json to_json(const AffinePair& m) {
  return json{{"digit", m.digit},
              {"x_scale", m.x_scale},
              {"x_offset", m.x_offset},
              {"y_scale", m.y_scale},
              {"y_offset", m.y_offset}};
}

json to_json(const CoverReport& r) {
  return json{{"L1", r.L1}, {"rank", r.rank}, {"total_area", r.total_area}};
}

json to_json(const BoxCountReport& r) {
  return json{{"levels", r.levels}, {"counts", r.counts}, {"slope", r.slope}};
}

json to_json(const SelfAffinityReport& r) {
  return json{{"max_deviation", r.max_deviation},
              {"failures", r.failure_count},
              {"checks", r.checks}};
}

}  // namespace salem
