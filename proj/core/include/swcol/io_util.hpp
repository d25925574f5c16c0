#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace swcol {

/// Writes contents to a sibling temp file and renames it into place, so the
/// target path never holds a partial file. The temp file is removed if
/// anything throws.
void atomic_write_file(const std::filesystem::path& path, std::string_view contents);

std::string read_text_file(const std::filesystem::path& path);

} // namespace swcol
