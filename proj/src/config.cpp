#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"

namespace kaclab {

const char* version() noexcept { return KACLAB_VERSION_STRING; }

namespace {

const std::vector<std::pair<std::string, std::string>>& defaults() {
  static const std::vector<std::pair<std::string, std::string>> d{
      {"N", ""},  // empty: the command's own default
      {"beta", "0.1"},
      {"delta", ""},  // empty: follow the schedule delta_N = N^{-(1 - 2 beta)}
      {"seed", "1"},
      {"samples", "0"},
      {"steps", "1000"},
      {"out", ""},
      {"svg", ""},
      {"grid_theta", "256"},
      {"grid_phi", "256"},
      {"grid_r", "128"},
      {"synthetic", "false"},
      {"oracle_gaussian", "false"},
      {"threads", "0"},
      {"timing", "false"},
      {"inject_violation", "false"},
      {"stride", "1"},
      {"observables", "m4,max_abs,v1_sq,v1_quartic"},
      {"init", "uniform"},
  };
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* expected) {
  fail(ErrorCode::kConfig,
       "config: value '" + value + "' for key '" + key + "' is not " + expected);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, raw, "an integer");
  }
  return out;
}

}  // namespace

RunConfig::RunConfig() {
  for (const auto& [k, v] : defaults()) {
    values_[k] = v;
    explicit_[k] = false;
  }
}

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, value] : defaults()) k.push_back(key);
    return k;
  }();
  return keys;
}

std::string RunConfig::canonical_key(const std::string& key) {
  std::string k = trim(key);
  std::replace(k.begin(), k.end(), '-', '_');
  for (const auto& known : known_keys()) {
    if (k == known) return known;
  }
  // Keys are case-insensitive apart from the canonical spelling of N.
  std::string lower = k;
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& known : known_keys()) {
    std::string kl = known;
    for (char& c : kl) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == kl) return known;
  }
  fail(ErrorCode::kConfig, "config: unknown key '" + key + "'");
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const std::string k = canonical_key(key);
  values_[k] = trim(value);
  explicit_[k] = true;
}

void RunConfig::set_default(const std::string& key, const std::string& value) {
  const std::string k = canonical_key(key);
  if (!explicit_[k]) values_[k] = value;
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "config: cannot open '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::kConfig, "config: " + path + ":" + std::to_string(lineno) +
                                   ": expected key=value");
    }
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void RunConfig::apply_environment() {
  for (const auto& key : known_keys()) {
    std::string name = "KACLAB_";
    for (char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* v = std::getenv(name.c_str())) set(key, v);
  }
}

bool RunConfig::is_set(const std::string& key) const {
  return explicit_.at(canonical_key(key));
}

std::string RunConfig::get(const std::string& key) const {
  return values_.at(canonical_key(key));
}

int RunConfig::get_int(const std::string& key) const {
  return parse_integer<int>(key, get(key));
}

long RunConfig::get_long(const std::string& key) const {
  return parse_integer<long>(key, get(key));
}

std::uint64_t RunConfig::get_u64(const std::string& key) const {
  const std::string v = trim(get(key));
  if (v.size() > 2 && v[0] == '0' && (v[1] == 'x' || v[1] == 'X')) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data() + 2, v.data() + v.size(), out, 16);
    if (ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, v, "a 64-bit integer");
    return out;
  }
  return parse_integer<std::uint64_t>(key, v);
}

double RunConfig::get_double(const std::string& key) const {
  const std::string v = trim(get(key));
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v, "a number");
  }
  return out;
}

bool RunConfig::get_bool(const std::string& key) const {
  std::string v = trim(get(key));
  for (char& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  bad_value(key, v, "a boolean");
}

std::vector<std::string> RunConfig::get_list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(get(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> RunConfig::get_int_list(const std::string& key) const {
  std::vector<int> out;
  for (const auto& item : get_list(key)) out.push_back(parse_integer<int>(key, item));
  return out;
}

std::string RunConfig::header(const std::string& command) const {
  std::string h = "# kaclab " + std::string(version()) + "\n# command = " + command + "\n";
  for (const auto& [key, value] : defaults()) {
    if (key == "out" || key == "svg" || key == "threads") continue;
    h += "# " + key + " = " + values_.at(key) + "\n";
  }
  return h;
}

}  // namespace kaclab
