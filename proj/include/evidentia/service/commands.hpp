#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace evidentia::service {

// Command-line front ends. Each returns the process exit status.

// 0 on a valid KB, 1 with a line-anchored diagnostic on an invalid one, 2 when
// the file cannot be read.
int run_validate(const std::filesystem::path& kb_path, std::ostream& out, std::ostream& err);

enum class ReportFormat { text, json };

// Folds the given symptoms in order and prints the report. 1 on unknown or
// repeated ids (listing the valid ones) or total conflict.
int run_evaluate(const std::filesystem::path& kb_path, const std::vector<std::string>& symptom_ids,
                 ReportFormat format, std::ostream& out, std::ostream& err);

// Interactive loop: pick symptoms by number or id, "-<id>" retracts, "q" quits.
int run_consult(const std::filesystem::path& kb_path, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace evidentia::service
