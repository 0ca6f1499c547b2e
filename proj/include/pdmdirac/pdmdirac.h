/* pdmdirac: relativistic Coulomb spectrum for a particle with the
 * position-dependent mass m*(r) = m(1 + a/r), with numerical oracles.
 *
 * C API over the C++ core. Natural units hbar = m = c = 1: lengths in
 * Compton lengths, energies in units of mc^2, e^2 = alpha. All functions
 * that can fail return a pdm_status; pdm_last_error() carries a
 * human-readable detail for the most recent failure on this thread.
 */
#ifndef PDMDIRAC_H
#define PDMDIRAC_H

#include <stddef.h>

#define PDMDIRAC_VERSION "0.1.0"

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdm_status {
    PDM_OK = 0,
    PDM_ERR_INVALID_ARGUMENT = 1, /* malformed input (quantum numbers, mesh, ...) */
    PDM_ERR_NO_BOUND_STATE = 2,   /* a >= e^2/mc^2 */
    PDM_ERR_FALL_TO_CENTER = 3,   /* (j+1/2)^2 + a^2 - alpha^2 < 0 */
    PDM_ERR_NUMERICAL = 4         /* bracket failure, coarse mesh, non-convergence */
} pdm_status;

/* Opaque handle holding (alpha, a). */
typedef struct pdm_model pdm_model;
/* Opaque handle for a bound-state radial wavefunction. */
typedef struct pdm_wavefunction pdm_wavefunction;

/* Derived quantities of one level. epsilon = E/mc^2. */
typedef struct pdm_level {
    double l_star;
    double n_star;
    double e_star_sq;
    double epsilon;
} pdm_level;

/* Mesh override for the finite-difference oracles. Pass NULL (or a
 * non-positive field) to use the built-in defaults. */
typedef struct pdm_mesh_spec {
    double r_max;
    int n_points;
} pdm_mesh_spec;

typedef struct pdm_oracle_result {
    double epsilon;             /* self-consistent energy, units mc^2 */
    double residual;            /* final |F(epsilon)| */
    double mesh_error_estimate; /* Richardson estimate */
    int iterations;             /* root-finder evaluations */
} pdm_oracle_result;

const char* pdm_status_name(pdm_status status);
const char* pdm_last_error(void);

pdm_status pdm_model_create(double alpha, double a, pdm_model** out);
void pdm_model_destroy(pdm_model* model);
void pdm_model_params(const pdm_model* model, double* alpha, double* a);

/* 0 = no bound states (a > e^2/mc^2), 1 = bound family (a < e^2/mc^2),
 * 2 = the degenerate single level at a = e^2/mc^2 exactly. */
int pdm_bound_state_kind(const pdm_model* model);

/* Radicand (j+1/2)^2 + a^2 - alpha^2 of the effective orbital number. */
pdm_status pdm_discriminant(const pdm_model* model, int n_r, int l, int two_j, double* out);

/* Exact closed-form level (l*, n*, e*^2, epsilon). */
pdm_status pdm_level_compute(const pdm_model* model, int n_r, int l, int two_j, pdm_level* out);

/* alpha = 0 specializations. */
pdm_status pdm_energy_free_case(const pdm_model* model, int n_r, int l, int two_j, double* out);
pdm_status pdm_ground_state_energy(const pdm_model* model, double* out);
pdm_status pdm_mean_effective_mass(const pdm_model* model, double* out);

/* Quasirelativistic expansion at fixed abar = a/alpha (abar < 1). */
pdm_status pdm_energy_expansion(double alpha, double a_bar, int n_r, int l, int two_j,
                                double* out);
pdm_status pdm_rest_energy_estimate(double alpha, double a_bar, int n_r, int l, int two_j,
                                    double* out);
/* |exact - expansion|, evaluated in extended precision so residuals below
 * double rounding on the energies themselves stay meaningful. */
pdm_status pdm_expansion_residual(double alpha, double a_bar, int n_r, int l, int two_j,
                                  double* out);

/* Independent finite-difference oracle with Richardson extrapolation. */
pdm_status pdm_oracle_solve(const pdm_model* model, int n_r, int l, int two_j,
                            const pdm_mesh_spec* mesh, double tol, pdm_oracle_result* out);

pdm_status pdm_wavefunction_create(const pdm_model* model, int n_r, int l, int two_j,
                                   pdm_wavefunction** out);
void pdm_wavefunction_destroy(pdm_wavefunction* wf);
pdm_status pdm_wavefunction_info(const pdm_wavefunction* wf, pdm_level* out);
pdm_status pdm_wavefunction_eval(const pdm_wavefunction* wf, const double* r, double* out,
                                 size_t count);
pdm_status pdm_wavefunction_norm_error(const pdm_wavefunction* wf, double* out);
pdm_status pdm_wavefunction_node_count(const pdm_wavefunction* wf, int* out);

/* Non-relativistic position-dependent-mass lab. Ordering exponents
 * (eta, eps, rho) must satisfy eta + eps + rho = -1; the symmetric
 * ordering is (-1/2, 0, -1/2). */
pdm_status pdm_ordering_eigenvalues(double a, double alpha, int l, double eta, double eps,
                                    double rho, const pdm_mesh_spec* mesh, int count,
                                    double* out);
pdm_status pdm_wkb_levels(double a, double alpha, int l, int n_r_max, double* out);
/* orderings: n_orderings consecutive (eta, eps, rho) triples. */
pdm_status pdm_ordering_spread(double a, double alpha, int l, const double* orderings,
                               size_t n_orderings, int n_r, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PDMDIRAC_H */
