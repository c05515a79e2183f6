#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "threecore/factor.hpp"
#include "threecore/series.hpp"
#include "threecore/verify.hpp"

namespace threecore {

// Coefficients travel as decimal strings so exactness survives JSON;
// indices are plain integers.

nlohmann::json series_to_json(const IntSeries& s);  // array of decimal strings
IntSeries series_from_json(const nlohmann::json& j);

std::string series_to_csv(const IntSeries& s);  // header "index,value"
IntSeries series_from_csv(const std::string& text);

nlohmann::json report_to_json(const VerificationReport& report);

std::string density_to_csv(const std::vector<DensityRow>& rows);  // "X,zeros,ratio"
nlohmann::json density_to_json(const std::vector<DensityRow>& rows);

std::string to_string(const Factorization& f);  // e.g. "2^4 * 13"

}  // namespace threecore
