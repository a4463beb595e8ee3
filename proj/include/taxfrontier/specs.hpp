#pragma once

#include <map>
#include <string>

#include "taxfrontier/skill_distribution.hpp"

namespace taxfrontier {

/// Parsed CLI policy spec. alpha is never part of the spec string; it is
/// always derived by budget balance.
struct PolicySpec {
  bool linear = true;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double y1 = 0.0;
};

/// "uniform:<a>:<b>", e.g. "uniform:0:10".
SkillDistribution parse_distribution_spec(const std::string& spec);

/// "linear:<beta>" or "twobracket:<beta1>:<beta2>:<y1>".
PolicySpec parse_policy_spec(const std::string& spec);

/// Flat "key = value" config text, '#' starts a comment. Keys repeat the CLI
/// flag names. Throws std::invalid_argument on malformed lines.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Loads and parses a config file; throws std::invalid_argument if the file
/// cannot be read.
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Locale-independent double parsing; throws std::invalid_argument.
double parse_double(const std::string& text);

}  // namespace taxfrontier
