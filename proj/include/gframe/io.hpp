#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gframe/frame.hpp"

// Frame interchange format:
//
//   {"dim_h": n,
//    "operators": [{"rows": k, "re": [[...], ...], "im": [[...], ...]}, ...]}
//
// "re"/"im" are row-major nested arrays of k rows with n numbers each. A
// missing "im" means a zero imaginary part; the writer omits it in that case.

namespace gframe {

GFrame frame_from_json(const nlohmann::json& doc);
nlohmann::json frame_to_json(const GFrame& f);

GFrame parse_frame(std::string_view text);
std::string dump_frame(const GFrame& f);

/// Throws Io when the file cannot be read or written, Parse on malformed content.
GFrame load_frame(const std::filesystem::path& path);
void save_frame(const GFrame& f, const std::filesystem::path& path);

}  // namespace gframe
