#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evidentia/ds/mass_function.hpp"
#include "evidentia/engine/session.hpp"

namespace evidentia::engine {

// Focal sets render as arrays of member labels in frame order; the full frame
// lists every label including the catch-all.
nlohmann::ordered_json focal_set_json(const ds::FocalSet& set);
nlohmann::ordered_json mass_json(const ds::MassFunction& mass);

// Full-precision JSON numbers.
nlohmann::ordered_json report_json(const DiagnosisReport& report);
nlohmann::ordered_json step_json(const CombinationStep& step);
nlohmann::ordered_json trace_json(const std::vector<CombinationStep>& trace);

// Byte-stable JSON text with every number printed to five decimal places.
// Identical reports always produce identical text.
std::string canonical_report(const DiagnosisReport& report);

// Human-readable table. The first line is "<top hypothesis> <mass>".
std::string report_text(const DiagnosisReport& report);

}  // namespace evidentia::engine
