#include "threecore/io.hpp"

#include <sstream>
#include <stdexcept>

namespace threecore {

nlohmann::json series_to_json(const IntSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& v : s.coefficients()) arr.push_back(v.to_string());
  return arr;
}

IntSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("series_from_json: expected a non-empty array");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const auto& v : j)
    coeffs.push_back(Int::from_string(v.get<std::string>()));
  return IntSeries::from_coefficients(std::move(coeffs));
}

std::string series_to_csv(const IntSeries& s) {
  std::string out = "index,value\n";
  for (int n = 0; n <= s.precision(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += s[n].to_string();
    out += '\n';
  }
  return out;
}

IntSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "index,value")
    throw std::invalid_argument("series_from_csv: missing header");
  std::vector<Int> coeffs;
  int expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("series_from_csv: malformed row");
    if (std::stoll(line.substr(0, comma)) != expected)
      throw std::invalid_argument("series_from_csv: indices must be 0,1,2,...");
    coeffs.push_back(Int::from_string(line.substr(comma + 1)));
    ++expected;
  }
  if (coeffs.empty())
    throw std::invalid_argument("series_from_csv: no coefficient rows");
  return IntSeries::from_coefficients(std::move(coeffs));
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json ranges = nlohmann::json::object();
  for (const auto& [key, value] : report.ranges) ranges[key] = value;
  nlohmann::json mismatches = nlohmann::json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back({{"what", m.what},
                          {"index", m.index},
                          {"left", m.left},
                          {"right", m.right}});
  }
  return {{"campaign", report.campaign},
          {"ranges", ranges},
          {"mismatches", mismatches},
          {"status", report.passed ? "pass" : "fail"},
          {"elapsed_seconds", report.elapsed_seconds}};
}

std::string density_to_csv(const std::vector<DensityRow>& rows) {
  std::string out = "X,zeros,ratio\n";
  for (const DensityRow& row : rows) {
    out += std::to_string(row.bound);
    out += ',';
    out += std::to_string(row.zeros);
    out += ',';
    out += row.ratio.to_decimal(6);
    out += '\n';
  }
  return out;
}

nlohmann::json density_to_json(const std::vector<DensityRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DensityRow& row : rows) {
    arr.push_back({{"X", row.bound},
                   {"zeros", row.zeros},
                   {"ratio", row.ratio.to_string()},
                   {"ratio_decimal", row.ratio.to_decimal(6)}});
  }
  return arr;
}

std::string to_string(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const PrimePower& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

}  // namespace threecore
