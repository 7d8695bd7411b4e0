#include "beamwave/cli/output.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace beamwave::cli {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (res.ec != std::errc{}) throw std::runtime_error("failed to format a double");
  return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot open output file '" + path.string() + "'");
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::ordered_json>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path.string() + "'");
  for (const auto& record : records) {
    out << record.dump() << '\n';
  }
}

}  // namespace beamwave::cli
