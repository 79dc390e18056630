// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "kaclab/kaclab.h"

namespace {

constexpr int kExitError = 2;

int report_error(kl_status status) {
  std::cerr << "error (" << kl_status_name(status) << "): " << kl_last_error() << "\n";
  return kExitError;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f.flush());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy production experiments for the Kac model"};
  app.set_version_flag("--version", kl_version());

  std::string command;
  app.add_option("command", command,
                 "density-check | clt | zn | gamma | sweep | walk | bounds")
      ->required()
      ->check(CLI::IsMember(
          {"density-check", "clt", "zn", "gamma", "sweep", "walk", "bounds"}));

  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file");

  // Value flags, forwarded as configuration keys when given.
  std::vector<std::pair<std::string, std::optional<std::string>>> values{
      {"N", {}},          {"beta", {}},       {"delta", {}},      {"seed", {}},
      {"samples", {}},    {"steps", {}},      {"out", {}},        {"svg", {}},
      {"grid-theta", {}}, {"grid-phi", {}},   {"grid-r", {}},     {"stride", {}},
      {"observables", {}}, {"init", {}},
  };
  for (auto& [key, slot] : values) {
    app.add_option("--" + key, slot, "sets config key '" + key + "'");
  }
  std::vector<std::pair<std::string, bool>> switches{
      {"synthetic", false}, {"oracle-gaussian", false}, {"timing", false},
      {"inject-violation", false}};
  for (auto& [key, on] : switches) {
    app.add_flag("--" + key, on, "sets config key '" + key + "' to true");
  }

  CLI11_PARSE(app, argc, argv);

  kl_config* cfg = nullptr;
  if (kl_status st = kl_config_create(&cfg); st != KL_OK) return report_error(st);
  kl_status st = KL_OK;
  if (!config_path.empty()) st = kl_config_load_file(cfg, config_path.c_str());
  if (st == KL_OK) st = kl_config_apply_env(cfg);
  for (const auto& [key, slot] : values) {
    if (st == KL_OK && slot) st = kl_config_set(cfg, key.c_str(), slot->c_str());
  }
  for (const auto& [key, on] : switches) {
    if (st == KL_OK && on) st = kl_config_set(cfg, key.c_str(), "true");
  }
  std::string out_path, svg_path;
  const char* v = nullptr;
  if (st == KL_OK && (st = kl_config_get(cfg, "out", &v)) == KL_OK) out_path = v;
  if (st == KL_OK && (st = kl_config_get(cfg, "svg", &v)) == KL_OK) svg_path = v;
  kl_result* result = nullptr;
  if (st == KL_OK) st = kl_run(command.c_str(), cfg, &result);
  kl_config_destroy(cfg);
  if (st != KL_OK) return report_error(st);

  std::cerr << kl_result_summary(result);
  int exit_code = kl_result_exit_code(result);
  if (out_path.empty()) {
    std::cout << kl_result_csv(result);
    std::cout.flush();
  } else if (!write_file(out_path, kl_result_csv(result))) {
    std::cerr << "error (i/o error): cannot write '" << out_path << "'\n";
    exit_code = kExitError;
  }
  const std::string svg = kl_result_svg(result);
  if (!svg.empty() && !svg_path.empty() && !write_file(svg_path, svg.c_str())) {
    std::cerr << "warning: cannot write plot '" << svg_path << "'\n";
  }
  kl_result_destroy(result);
  return exit_code;
}
