#pragma once

// Experiment harness behind the command-line tool: flat configuration,
// sweep records, CSV/SVG rendering and the seven subcommands.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kaclab {

const char* version() noexcept;

// Flat key=value configuration. Later writes override earlier ones, so the
// caller applies sources in the order file, environment, flags.
class RunConfig {
 public:
  RunConfig();  // populated with defaults

  static const std::vector<std::string>& known_keys();
  // Accepts '-' in place of '_'; unknown keys are a config error.
  static std::string canonical_key(const std::string& key);

  void set(const std::string& key, const std::string& value);
  // Replaces the value only if no source has set the key.
  void set_default(const std::string& key, const std::string& value);
  // Lines of key=value; '#' starts a comment.
  void load_file(const std::string& path);
  // Reads KACLAB_<KEY> for every known key.
  void apply_environment();

  bool is_set(const std::string& key) const;  // given by some source, not defaulted
  std::string get(const std::string& key) const;
  int get_int(const std::string& key) const;
  long get_long(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<int> get_int_list(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;

  // "# key = value" lines for every key except those that only affect I/O
  // or scheduling (out, svg, threads), so output bytes do not depend on them.
  std::string header(const std::string& command) const;

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> explicit_;
};

struct SweepRecord {
  int N = 0;
  double beta = 0.0;
  double delta = 0.0;
  double H_per_particle = 0.0;
  double numerator_per_particle = 0.0;
  double ratio = 0.0;
  double ratio_lower_bound = 0.0;
  double paper_bound_per_particle = 0.0;
  double eps0 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double runtime_seconds = 0.0;
};

std::string format_double(double x);  // 17 significant digits
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& r);

struct LogLogSeries {
  std::vector<double> x;
  std::vector<double> y;
};
// Self-contained SVG with log-log axes; `reference` is drawn dashed.
std::string loglog_svg(const std::string& title, const LogLogSeries& data,
                       const LogLogSeries& reference);

struct CommandResult {
  int exit_code = 0;    // 0 iff every assertion of the suite held
  std::string csv;      // header comments, column line, rows
  std::string summary;  // human-readable notes for stderr
  std::string svg;      // empty unless requested and produced
};

const std::vector<std::string>& command_names();
// Throws kaclab::Error for invalid input or numerical failure.
CommandResult run_command(const std::string& command, const RunConfig& config);

}  // namespace kaclab
