/* qdiss.h - C interface to the damped free particle library.
 *
 * Every function that can fail returns a qdiss_status; on failure the
 * message is available from qdiss_last_error() on the same thread.
 * Units: hbar = k_B = M = 1. */

#ifndef QDISS_H
#define QDISS_H

#include <stddef.h>

#if defined(QDISS_BUILDING)
#define QDISS_API __attribute__((visibility("default")))
#else
#define QDISS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QDISS_OK = 0,
  QDISS_INVALID_ARGUMENT = 1,
  QDISS_DOMAIN_ERROR = 2, /* outside where the formula exists, e.g. strict-ohmic C_Z */
  QDISS_NULL_POINTER = 3,
  QDISS_INTERNAL_ERROR = 4
} qdiss_status;

typedef struct qdiss_bath qdiss_bath;
typedef struct qdiss_system qdiss_system;
typedef struct qdiss_dos qdiss_dos;

QDISS_API const char* qdiss_version(void);
QDISS_API const char* qdiss_last_error(void);

/* omega_d must be finite; use qdiss_bath_ohmic for the infinite-cutoff bath. */
QDISS_API qdiss_status qdiss_bath_drude(double gamma, double omega_d, qdiss_bath** out);
QDISS_API qdiss_status qdiss_bath_ohmic(double gamma, qdiss_bath** out);
QDISS_API void qdiss_bath_free(qdiss_bath* bath);

/* box_ratio = L / lambda_D, the box length over the thermal length at T = omega_d. */
QDISS_API qdiss_status qdiss_system_free_particle(double box_ratio, qdiss_system** out);
QDISS_API qdiss_status qdiss_system_oscillator(double omega0, qdiss_system** out);
QDISS_API void qdiss_system_free(qdiss_system* system);

QDISS_API qdiss_status qdiss_energy_e(const qdiss_bath* bath, double beta, double* out);
QDISS_API qdiss_status qdiss_heat_ce(const qdiss_bath* bath, double T, double* out);
QDISS_API qdiss_status qdiss_internal_u(const qdiss_bath* bath, double beta, double* out);
QDISS_API qdiss_status qdiss_heat_cz(const qdiss_bath* bath, double T, double* out);
QDISS_API qdiss_status qdiss_log_partition(const qdiss_system* system, const qdiss_bath* bath, double beta,
                                           double* out);
QDISS_API qdiss_status qdiss_entropy(const qdiss_system* system, const qdiss_bath* bath, double T, double* out);

typedef struct {
  double T, E, U, c_e, c_z, S, F, ln_z;
} qdiss_thermo_point;

QDISS_API qdiss_status qdiss_thermo(const qdiss_system* system, const qdiss_bath* bath, double T,
                                    qdiss_thermo_point* out);

typedef enum { QDISS_CE_HIGH = 0, QDISS_CE_LOW = 1, QDISS_CZ_HIGH = 2, QDISS_CZ_LOW = 3 } qdiss_asymptotic;

QDISS_API qdiss_status qdiss_asymptotic_value(const qdiss_bath* bath, double T, qdiss_asymptotic which,
                                              double* out);

QDISS_API qdiss_status qdiss_ground_energy(const qdiss_bath* bath, double* out);
QDISS_API qdiss_status qdiss_delta_weight(const qdiss_system* system, const qdiss_bath* bath, double* out);
QDISS_API qdiss_status qdiss_shifted_partition(const qdiss_system* system, const qdiss_bath* bath, double beta,
                                               double* out);
/* E is absolute; results are densities in 1/energy. */
QDISS_API qdiss_status qdiss_undamped_dos(const qdiss_system* system, const qdiss_bath* bath, double E,
                                          double* out);
QDISS_API qdiss_status qdiss_dos_low_energy_series(const qdiss_system* system, const qdiss_bath* bath, double E,
                                                   double* out);

typedef enum { QDISS_DE_HOOG = 0, QDISS_GAVER_STEHFEST = 1 } qdiss_method;

typedef struct {
  qdiss_method method;
  int nodes;       /* de Hoog terms in [8, 64], or Stehfest order, even in [8, 18] */
  int shift;       /* nonzero: invert Z e^(beta U0) */
  int cross_check; /* nonzero: also run the other method */
  int check_nodes;
} qdiss_inversion_config;

QDISS_API void qdiss_inversion_config_default(qdiss_inversion_config* cfg);

/* energies are (E - U0)/omega_d > 0. cfg may be NULL for defaults. */
QDISS_API qdiss_status qdiss_dos_invert(const qdiss_system* system, const qdiss_bath* bath, const double* energies,
                                        size_t n, const qdiss_inversion_config* cfg, qdiss_dos** out);
QDISS_API void qdiss_dos_free(qdiss_dos* dos);

QDISS_API size_t qdiss_dos_size(const qdiss_dos* dos);
QDISS_API const double* qdiss_dos_energies(const qdiss_dos* dos);
/* omega_d rho, box ratio included */
QDISS_API const double* qdiss_dos_rho(const qdiss_dos* dos);
/* NULL when no cross-check was run */
QDISS_API const double* qdiss_dos_rho_check(const qdiss_dos* dos);
QDISS_API const unsigned char* qdiss_dos_unreliable(const qdiss_dos* dos);
QDISS_API double qdiss_dos_delta_weight(const qdiss_dos* dos);
QDISS_API double qdiss_dos_u0(const qdiss_dos* dos);

/* intervals of (E - U0)/omega_d where rho < 0 */
QDISS_API size_t qdiss_dos_negative_interval_count(const qdiss_dos* dos);
QDISS_API qdiss_status qdiss_dos_negative_interval(const qdiss_dos* dos, size_t i, double* lo, double* hi);

typedef void (*qdiss_verify_callback)(const char* name, double worst, double tolerance, int passed, void* user);

/* Runs the cross-check suite, reporting each check through cb (may be NULL). */
QDISS_API qdiss_status qdiss_verify(qdiss_verify_callback cb, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif
