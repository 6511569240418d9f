#pragma once

#include <istream>
#include <string>

#include "posetcomp/poset.hpp"

namespace posetcomp {

/// Parses the plain-text poset format (see docs/poset_format.md).
/// Errors are ErrorKind::parse_error with a "line k: ..." message.
Poset parse_poset(std::istream& in, const std::string& default_name = "poset");
Poset parse_poset_string(const std::string& text, const std::string& default_name = "poset");
Poset load_poset_file(const std::string& path);

/// Writes p back in the same format, `le` lines for covering pairs only.
std::string format_poset(const Poset& p);

}  // namespace posetcomp
