#include "kaclab/kaclab.h"

#include <exception>
#include <new>
#include <string>

#include "kaclab/clt_engine.hpp"
#include "kaclab/densities.hpp"
#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"
#include "kaclab/functionals.hpp"
#include "kaclab/normalization.hpp"

struct kl_density {
  kaclab::Density density;
};

struct kl_config {
  kaclab::RunConfig config;
};

struct kl_result {
  kaclab::CommandResult result;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_config_value;

template <typename F>
kl_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return KL_OK;
  } catch (const kaclab::Error& e) {
    g_last_error = e.what();
    return static_cast<kl_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return KL_ERR_INTERNAL;
  }
}

kl_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return KL_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* kl_version(void) { return kaclab::version(); }

const char* kl_status_name(kl_status status) {
  switch (status) {
    case KL_OK: return "ok";
    case KL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KL_ERR_INTERNAL: return "internal error";
    default: break;
  }
  if (status >= 1 && status <= 12) {
    return kaclab::error_code_name(static_cast<kaclab::ErrorCode>(status));
  }
  return "unknown status";
}

const char* kl_last_error(void) { return g_last_error.c_str(); }

kl_status kl_density_create_kac(double delta, kl_density** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new kl_density{kaclab::Density::kac_mixture(kaclab::Delta::make(delta))};
  });
}

kl_status kl_density_create_gaussian(kl_density** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new kl_density{kaclab::Density::standard_gaussian()}; });
}

void kl_density_destroy(kl_density* density) { delete density; }

kl_status kl_delta_schedule(int N, double beta, double* delta_out) {
  if (!delta_out) return null_argument("delta_out");
  return guarded([&] { *delta_out = kaclab::delta_schedule(N, beta).delta.value(); });
}

kl_status kl_conv_power(const kl_density* density, int n, double u, double* out) {
  if (!density) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = kaclab::conv_power(density->density, n, u); });
}

kl_status kl_log_z(const kl_density* density, int N, double u, double* out) {
  if (!density) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = kaclab::log_Z(density->density, N, u).logZ.log_magnitude();
  });
}

kl_status kl_entropy(const kl_density* density, int N, double* out) {
  if (!density) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = kaclab::entropy(density->density, N).H; });
}

kl_status kl_production_numerator(const kl_density* density, int N, double* out) {
  if (!density) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = kaclab::production_numerator(density->density, N).value; });
}

kl_status kl_config_create(kl_config** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new kl_config{}; });
}

void kl_config_destroy(kl_config* config) { delete config; }

kl_status kl_config_set(kl_config* config, const char* key, const char* value) {
  if (!config) return null_argument("config");
  if (!key || !value) return null_argument("key/value");
  return guarded([&] { config->config.set(key, value); });
}

kl_status kl_config_load_file(kl_config* config, const char* path) {
  if (!config) return null_argument("config");
  if (!path) return null_argument("path");
  return guarded([&] { config->config.load_file(path); });
}

kl_status kl_config_apply_env(kl_config* config) {
  if (!config) return null_argument("config");
  return guarded([&] { config->config.apply_environment(); });
}

kl_status kl_config_get(const kl_config* config, const char* key,
                        const char** value_out) {
  if (!config) return null_argument("config");
  if (!key || !value_out) return null_argument("key/value_out");
  return guarded([&] {
    g_config_value = config->config.get(key);
    *value_out = g_config_value.c_str();
  });
}

kl_status kl_run(const char* command, const kl_config* config, kl_result** out) {
  if (!command) return null_argument("command");
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new kl_result{kaclab::run_command(command, config->config)};
  });
}

int kl_result_exit_code(const kl_result* result) {
  return result ? result->result.exit_code : -1;
}

const char* kl_result_csv(const kl_result* result) {
  return result ? result->result.csv.c_str() : "";
}

const char* kl_result_summary(const kl_result* result) {
  return result ? result->result.summary.c_str() : "";
}

const char* kl_result_svg(const kl_result* result) {
  return result ? result->result.svg.c_str() : "";
}

void kl_result_destroy(kl_result* result) { delete result; }

}  // extern "C"
