#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace runo {

struct ReportFile {
  std::string name;
  std::string content;
};

/// Every verification table the library can produce, as named text files.
/// Contents depend only on the library and its embedded data.
std::vector<ReportFile> build_report();

/// Writes build_report() into `dir` (created if needed); returns the names.
std::vector<std::string> write_report(const std::filesystem::path& dir);

}  // namespace runo
