#include "chordgf/series_io.hpp"

#include <sstream>
#include <vector>

#include "chordgf/error.hpp"

namespace chordgf::io {

nlohmann::json to_json(const Rational& r) {
  return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
      !j["den"].is_string()) {
    throw ParseError("rational must be {\"num\": \"...\", \"den\": \"...\"}");
  }
  const Rational r = Rational::from_strings(j["num"].get<std::string>(), j["den"].get<std::string>());
  return r;
}

nlohmann::json to_json(const PowerSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : f.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", f.order()}, {"coefficients", coeffs}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients") ||
      !j["order"].is_number_unsigned() || !j["coefficients"].is_array()) {
    throw ParseError("series must be {\"order\": N, \"coefficients\": [...]}");
  }
  const auto order = j["order"].get<std::size_t>();
  const auto& arr = j["coefficients"];
  if (arr.size() != order + 1) throw ParseError("coefficient count does not match order + 1");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(rational_from_json(c));
  return PowerSeries(std::move(coeffs));
}

std::string to_csv(const PowerSeries& f) {
  std::ostringstream os;
  os << "index,num,den\n";
  for (std::size_t k = 0; k <= f.order(); ++k) {
    os << k << ',' << f[k].numerator().get_str() << ',' << f[k].denominator().get_str() << '\n';
  }
  return os.str();
}

PowerSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "index,num,den") throw ParseError("missing CSV header");
  std::vector<Rational> coeffs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto a = line.find(',');
    const auto b = line.find(',', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw ParseError("malformed CSV row '" + line + "'");
    if (std::stoul(line.substr(0, a)) != coeffs.size()) throw ParseError("CSV rows out of order");
    coeffs.push_back(Rational::from_strings(line.substr(a + 1, b - a - 1), line.substr(b + 1)));
  }
  if (coeffs.empty()) throw ParseError("CSV has no rows");
  return PowerSeries(std::move(coeffs));
}

std::string to_plain(const PowerSeries& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (k) os << ", ";
    os << f[k];
  }
  return os.str();
}

}  // namespace chordgf::io
