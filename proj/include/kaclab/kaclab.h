#ifndef KACLAB_KACLAB_H
#define KACLAB_KACLAB_H

/* C interface to the kaclab shared library.
 *
 * Every function returns a kl_status; on failure a message is available from
 * kl_last_error() on the calling thread until the next call on that thread.
 * Objects are opaque and owned by the caller once created. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KACLAB_BUILDING_LIBRARY)
#define KL_API __attribute__((visibility("default")))
#else
#define KL_API
#endif

typedef enum kl_status {
  KL_OK = 0,
  KL_ERR_DOMAIN = 1,
  KL_ERR_UNSUPPORTED_ORDER = 2,
  KL_ERR_CONFIG = 3,
  KL_ERR_INSUFFICIENT_DATA = 4,
  KL_ERR_INDETERMINATE = 5,
  KL_ERR_UNRELIABLE = 6,
  KL_ERR_INCONSISTENT = 7,
  KL_ERR_REFINEMENT = 8,
  KL_ERR_CERTIFICATE_UNAVAILABLE = 9,
  KL_ERR_UNDEFINED = 10,
  KL_ERR_TAIL_TOLERANCE = 11,
  KL_ERR_IO = 12,
  KL_ERR_INVALID_ARGUMENT = 98, /* null handle or pointer */
  KL_ERR_INTERNAL = 99
} kl_status;

typedef struct kl_density kl_density;
typedef struct kl_config kl_config;
typedef struct kl_result kl_result;

KL_API const char* kl_version(void);
KL_API const char* kl_status_name(kl_status status);
KL_API const char* kl_last_error(void);

/* Densities: the two-Maxwellian mixture f_delta, or the standard Gaussian. */
KL_API kl_status kl_density_create_kac(double delta, kl_density** out);
KL_API kl_status kl_density_create_gaussian(kl_density** out);
KL_API void kl_density_destroy(kl_density* density);

/* delta_N = N^{-(1 - 2 beta)}. */
KL_API kl_status kl_delta_schedule(int N, double beta, double* delta_out);
/* h^{*n}(u), the n-fold convolution of the law of V^2. */
KL_API kl_status kl_conv_power(const kl_density* density, int n, double u,
                               double* out);
/* log Z_N(f, sqrt u). */
KL_API kl_status kl_log_z(const kl_density* density, int N, double u,
                          double* out);
/* Relative entropy H_N of the sphere-restricted product state. */
KL_API kl_status kl_entropy(const kl_density* density, int N, double* out);
/* Entropy production numerator <log F_N, N(I - Q) F_N>. */
KL_API kl_status kl_production_numerator(const kl_density* density, int N,
                                         double* out);

/* Flat key=value configuration. Apply sources in increasing precedence:
 * file, environment, explicit settings. */
KL_API kl_status kl_config_create(kl_config** out);
KL_API void kl_config_destroy(kl_config* config);
KL_API kl_status kl_config_set(kl_config* config, const char* key,
                               const char* value);
KL_API kl_status kl_config_load_file(kl_config* config, const char* path);
KL_API kl_status kl_config_apply_env(kl_config* config);
/* Effective value of a key; valid until the next call on this thread. */
KL_API kl_status kl_config_get(const kl_config* config, const char* key,
                               const char** value_out);

/* Runs one of: density-check, clt, zn, gamma, sweep, walk, bounds. */
KL_API kl_status kl_run(const char* command, const kl_config* config,
                        kl_result** out);
KL_API int kl_result_exit_code(const kl_result* result);
KL_API const char* kl_result_csv(const kl_result* result);
KL_API const char* kl_result_summary(const kl_result* result);
/* Empty string when no plot was requested or produced. */
KL_API const char* kl_result_svg(const kl_result* result);
KL_API void kl_result_destroy(kl_result* result);

#ifdef __cplusplus
}
#endif

#endif /* KACLAB_KACLAB_H */
