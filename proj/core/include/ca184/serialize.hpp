#pragma once

#include <string>
#include <string_view>

#include "ca184/config.hpp"
#include "ca184/path.hpp"
#include "ca184/profile.hpp"

namespace ca184 {

// One-line text formats:
//   ca184:RING:<N>:<0/1 string>
//   ca184:OPEN:<lo>..<hi>:<0/1 string>
//   ba:RING:<N>:<+-0 string>
//   ba:OPEN:<lo>..<hi>:<+-0 string>
//   path:HALF|WHOLE:<t2>:<p2>:<+- string>
// Profiles serialize to CSV with a "k,height" header row.

std::string to_string(const Ca184Config& eta);
std::string to_string(const BaConfig& zeta);
std::string to_string(const SecondClassPath& path);

Ca184Config parse_ca(std::string_view text);
BaConfig parse_ba(std::string_view text);
SecondClassPath parse_path(std::string_view text);

/// Parses either configuration kind; the tag decides.
enum class ConfigTag { Ca184, Ba };
ConfigTag peek_config_tag(std::string_view text);

std::string profile_to_csv(const HeightProfile& f);
HeightProfile parse_profile_csv(std::string_view csv);

} // namespace ca184
