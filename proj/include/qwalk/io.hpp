#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/diagnostics.hpp"

namespace qwalk::io {

// Raised for file-system failures (open/read/write); callers that own an
// exit-code contract map it separately from validation errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest text that still round-trips a double exactly (17 significant
// digits).
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Parses the simulate CSV schema (header "t,n,probability"); consecutive rows
// sharing a time become one distribution, in file order.
std::vector<PositionDistribution> read_distribution_csv(std::string_view text);

}  // namespace qwalk::io
