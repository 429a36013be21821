#include "qwalk/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwalk::io {

std::string format_double(double value) {
  char buffer[40];
  const int written = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char byte : bytes) {
    hash ^= static_cast<unsigned char>(byte);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buffer, 16);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed while reading " + path);
  }
  return std::move(content).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("failed while writing " + path);
  }
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line_number) {
  T value{};
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed numeric field '" + std::string(field) +
                                "' on CSV line " + std::to_string(line_number));
  }
  return value;
}

}  // namespace

std::vector<PositionDistribution> read_distribution_csv(std::string_view text) {
  std::vector<PositionDistribution> snapshots;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (line.empty()) {
      continue;
    }
    if (!saw_header) {
      if (line != "t,n,probability") {
        throw std::invalid_argument("expected header 't,n,probability', got '" +
                                    std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }
    const std::size_t first_comma = line.find(',');
    const std::size_t second_comma =
        first_comma == std::string_view::npos ? std::string_view::npos
                                              : line.find(',', first_comma + 1);
    if (second_comma == std::string_view::npos) {
      throw std::invalid_argument("expected 3 fields on CSV line " + std::to_string(line_number));
    }
    const int t = parse_field<int>(line.substr(0, first_comma), line_number);
    const int site = parse_field<int>(
        line.substr(first_comma + 1, second_comma - first_comma - 1), line_number);
    const double mass = parse_field<double>(line.substr(second_comma + 1), line_number);
    if (snapshots.empty() || snapshots.back().time != t) {
      snapshots.push_back(PositionDistribution{t, {}});
    }
    snapshots.back().masses.emplace_back(site, mass);
  }
  if (!saw_header) {
    throw std::invalid_argument("distribution CSV is empty");
  }
  return snapshots;
}

}  // namespace qwalk::io
