#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace beamwave::cli {

// Shortest decimal representation that round-trips back to the same double.
std::string format_double(double x);

// Minimal CSV emitter. Cells are written verbatim; every value produced by
// this program is free of commas and quotes.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);

  void write_row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
};

// One JSON object per line.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::ordered_json>& records);

}  // namespace beamwave::cli
