// JSON forms of the library types. Series serialize as arrays of [re, im]
// pairs indexed by power; a harmonic map is {"h": [...], "g": [...]}. Ordered
// JSON is used throughout so serialized reports are byte-stable.
#pragma once

#include <string>

#include <json.hpp>

#include "harmdisk/bounds.hpp"
#include "harmdisk/certificate.hpp"
#include "harmdisk/class_params.hpp"
#include "harmdisk/constructions.hpp"
#include "harmdisk/series.hpp"
#include "harmdisk/special_functions.hpp"

namespace harmdisk {

using json = nlohmann::ordered_json;

json to_json(const AnalyticSeries& s);
json to_json(const HarmonicMap& f);
json to_json(const GridSpec& grid);
json to_json(const Certificate& c);
json to_json(const RegimeReport& r);
json to_json(const GrowthEnvelope& env);
json to_json(const IdentityCheck& check);
json to_json(const ConditionReport& report);

AnalyticSeries series_from_json(const json& j);
HarmonicMap map_from_json(const json& j);
GridSpec grid_from_json(const json& j);

// File helpers; parse errors surface as std::invalid_argument.
HarmonicMap load_map(const std::string& path);
void save_map(const HarmonicMap& f, const std::string& path);
void save_series(const AnalyticSeries& s, const std::string& path);

}  // namespace harmdisk
