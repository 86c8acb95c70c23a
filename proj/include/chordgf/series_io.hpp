#pragma once

#include <string>

#include <json.hpp>

#include "chordgf/power_series.hpp"

namespace chordgf::io {

/// {"num": "<decimal>", "den": "<decimal>"}
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"order": N, "coefficients": [{"num": ..., "den": ...}, ...]}
nlohmann::json to_json(const PowerSeries& f);
/// Throws ParseError on schema violations (length != order + 1, bad decimals).
PowerSeries series_from_json(const nlohmann::json& j);

/// One row per power: "index,num,den", preceded by a header line.
std::string to_csv(const PowerSeries& f);
PowerSeries series_from_csv(const std::string& text);

/// Comma-separated exact coefficients, e.g. "0, 1, 1, 7".
std::string to_plain(const PowerSeries& f);

}  // namespace chordgf::io
