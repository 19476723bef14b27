#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aenergy/bounds.hpp"
#include "aenergy/harness.hpp"
#include "aenergy/spectra.hpp"

namespace aenergy {

enum class OutputFormat { Table, Json, Csv };

// 10 significant digits; magnitudes below 1e-12 print as 0.
std::string format_number(double value);
std::string format_values(const std::vector<double>& values);

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const ReproductionTable& table);

std::string render_checks(const std::vector<Check>& checks, double energy, OutputFormat format);
std::string render_report(const VerificationReport& report, OutputFormat format);
std::string render_reproduction(const ReproductionTable& table, OutputFormat format);

}  // namespace aenergy
