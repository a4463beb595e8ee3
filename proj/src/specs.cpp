#include "taxfrontier/specs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace taxfrontier {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) parts.push_back(token);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

}  // namespace

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

SkillDistribution parse_distribution_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "uniform") {
    return SkillDistribution::uniform(parse_double(parts[1]),
                                      parse_double(parts[2]));
  }
  throw std::invalid_argument("bad distribution spec '" + spec +
                              "' (expected uniform:<a>:<b>)");
}

PolicySpec parse_policy_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  PolicySpec p;
  if (parts.size() == 2 && parts[0] == "linear") {
    p.linear = true;
    p.beta1 = p.beta2 = parse_double(parts[1]);
    p.y1 = 0.0;
    return p;
  }
  if (parts.size() == 4 && parts[0] == "twobracket") {
    p.linear = false;
    p.beta1 = parse_double(parts[1]);
    p.beta2 = parse_double(parts[2]);
    p.y1 = parse_double(parts[3]);
    return p;
  }
  throw std::invalid_argument(
      "bad policy spec '" + spec +
      "' (expected linear:<beta> or twobracket:<beta1>:<beta2>:<y1>)");
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace taxfrontier
