#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "malle/report/group_spec.hpp"

namespace malle::report {

/// A named scenario: one or more groups plus golden checks.
///
/// Each check is an object with a "kind" and an "expect" record; see
/// run_check in commands.cpp for the kinds understood.
struct Preset {
  std::string name;
  std::string description;
  std::map<std::string, GroupSpecFile> groups;  // "main" is the default
  nlohmann::json checks = nlohmann::json::array();
};

const std::vector<Preset>& presets();

/// Throws UnknownPreset.
const Preset& find_preset(std::string_view name);

}  // namespace malle::report
