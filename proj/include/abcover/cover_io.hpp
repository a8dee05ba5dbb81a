#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "abcover/cover.hpp"

namespace abcover::io {

/// Line-oriented cover format:
///
///   # comment
///   group: 2,2
///   component: 1,0 ; 6 ; s
///   component: 0,1 ; 4 ; q
///
/// The group must be written in invariant-factor form, since labels are
/// coordinates in that basis. The name field is optional. The parsed cover
/// is validated; throws ParseError (with line number) on syntax errors and
/// InvalidCoverData on validation failures.
CoverData parse_cover(std::string_view text);

CoverData parse_cover_file(const std::filesystem::path& path);

/// Inverse of parse_cover.
std::string serialize_cover(const CoverData& cover);

}  // namespace abcover::io
