#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace vendokit {

/// Reads a whole file in binary mode. Throws Error(NotFound) or Error(Io).
std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it into place.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace vendokit
