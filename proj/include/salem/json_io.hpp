#pragma once

#include <string>

#include <json.hpp>

#include "salem/analysis.hpp"
#include "salem/ifs.hpp"

namespace salem {

/// Parses {"q": int, "p": [q reals], "theta": [q ints]}.  Any structural or
/// invariant failure raises ConfigError.
ModifiedSalem config_from_json(const nlohmann::json& j);
ModifiedSalem load_config(const std::string& path);

/// Digit strings travel as {"prefix": [...], "period": [...] | null}.
nlohmann::json digit_string_to_json(const DigitString& d);
DigitString digit_string_from_json(const SalemSystem& sys, const nlohmann::json& j);

nlohmann::json to_json(const JumpReport& r);
nlohmann::json to_json(const IncrementResult& r);
nlohmann::json to_json(const FrequencyTable& t);
nlohmann::json to_json(const MoranResult& r);
nlohmann::json to_json(const DimensionBounds& d);
nlohmann::json to_json(const IntegralResult& r);
nlohmann::json to_json(const FixedSetClass& c);
nlohmann::json to_json(const AffinePair& m);
nlohmann::json to_json(const CoverReport& r);
nlohmann::json to_json(const BoxCountReport& r);
nlohmann::json to_json(const SelfAffinityReport& r);

}  // namespace salem
