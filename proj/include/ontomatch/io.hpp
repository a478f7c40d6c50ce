#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ontomatch/errors.hpp"

namespace ontomatch {

/// Reads a whole file; throws IoError if it cannot be opened or read.
std::string read_file(const std::filesystem::path& path);

/// Writes content, replacing any existing file; throws IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ontomatch
