#include "lipkr/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lipkr/error.hpp"

namespace lipkr {

namespace {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) {
    return Rational(v.get<long long>());
  }
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());
  }
  throw Error(ErrorCode::ParseError,
              std::string(what) + " must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& q) {
  return json(to_string(q));
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::ParseError, "input is not valid JSON");
  }
  return doc;
}

}  // namespace

MetricSpace metric_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("dist")) {
    throw Error(ErrorCode::ParseError,
                "metric file needs \"points\" and \"dist\" fields");
  }
  if (!doc["points"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "\"points\" must be an integer");
  }
  const long long n = doc["points"].get<long long>();
  const json& dist = doc["dist"];
  if (n < 2 || !dist.is_array() || static_cast<long long>(dist.size()) != n) {
    throw Error(ErrorCode::ParseError,
                "\"dist\" must be a square matrix over at least 2 points");
  }
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n));
  for (size_t i = 0; i < m.size(); ++i) {
    const json& row = dist[i];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      throw Error(ErrorCode::ParseError,
                  "\"dist\" must be a square matrix over at least 2 points");
    }
    m[i].reserve(static_cast<size_t>(n));
    for (const json& v : row) {
      m[i].push_back(rational_from_json(v, "distance"));
    }
  }
  return MetricSpace::validate(m);
}

std::string metric_to_json(const MetricSpace& ms) {
  json doc;
  doc["points"] = ms.points();
  json rows = json::array();
  for (const auto& row : ms.matrix()) {
    json r = json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    rows.push_back(std::move(r));
  }
  doc["dist"] = std::move(rows);
  return doc.dump(2) + "\n";
}

SignedMeasure measure_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("coeffs") ||
      !doc["coeffs"].is_object()) {
    throw Error(ErrorCode::ParseError,
                "measure file needs a \"coeffs\" object");
  }
  SignedMeasure mu;
  for (const auto& [key, v] : doc["coeffs"].items()) {
    size_t used = 0;
    int point = 0;
    try {
      point = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || point < 1) {
      throw Error(ErrorCode::ParseError,
                  "coefficient key \"" + key + "\" is not a point label");
    }
    mu.coeffs[point] = rational_from_json(v, "coefficient");
  }
  return mu;
}

std::string measure_to_json(const SignedMeasure& mu) {
  json coeffs = json::object();
  for (const auto& [x, c] : mu.coeffs) {
    coeffs[std::to_string(x)] = rational_to_json(c);
  }
  json doc;
  doc["coeffs"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot read file " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace lipkr
