#pragma once

#include <string>
#include <string_view>

namespace switchopt {

/// Whole-file read. Throws IoError.
std::string read_text_file(const std::string& path);

/// Whole-file write (truncating). Throws IoError.
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace switchopt
