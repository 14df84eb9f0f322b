#pragma once

#include <string>

#include "lipkr/metric.hpp"
#include "lipkr/norms.hpp"

namespace lipkr {

// {"points": k, "dist": [[...]]} with entries as integers or "p/q" strings.
MetricSpace metric_from_json(const std::string& text);
std::string metric_to_json(const MetricSpace& ms);

// {"coeffs": {"1": "1", "4": "-1"}}
SignedMeasure measure_from_json(const std::string& text);
std::string measure_to_json(const SignedMeasure& mu);

std::string read_text_file(const std::string& path);

}  // namespace lipkr
