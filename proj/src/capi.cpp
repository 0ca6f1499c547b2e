#include "pdmdirac/pdmdirac.h"

#include "expansion.hpp"
#include "ordering.hpp"
#include "oracle.hpp"
#include "spectrum.hpp"
#include "wavefunction.hpp"

#include <array>
#include <cstring>
#include <new>
#include <string>
#include <vector>

struct pdm_model {
    pdm::ModelParams params;
};

struct pdm_wavefunction {
    pdm::RadialWavefunction wf;
};

namespace {

thread_local std::string g_last_error;

pdm_status to_status(pdm::ErrorKind kind)
{
    switch (kind) {
    case pdm::ErrorKind::invalid_argument: return PDM_ERR_INVALID_ARGUMENT;
    case pdm::ErrorKind::no_bound_state: return PDM_ERR_NO_BOUND_STATE;
    case pdm::ErrorKind::fall_to_center: return PDM_ERR_FALL_TO_CENTER;
    case pdm::ErrorKind::numerical: return PDM_ERR_NUMERICAL;
    }
    return PDM_ERR_NUMERICAL;
}

template <typename Fn> pdm_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return PDM_OK;
    } catch (const pdm::Error& e) {
        g_last_error = e.what();
        return to_status(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PDM_ERR_NUMERICAL;
    }
}

pdm::RadialMesh resolve_mesh(const pdm_model* model, int n_r, int l, int two_j,
                             const pdm_mesh_spec* spec)
{
    const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
    pdm::RadialMesh mesh = pdm::default_mesh(model->params, qn);
    if (spec) {
        if (spec->r_max > 0.0)
            mesh.r_max = spec->r_max;
        if (spec->n_points > 0)
            mesh.n_points = spec->n_points;
        mesh = pdm::make_mesh(mesh.r_max, mesh.n_points);
    }
    return mesh;
}

} // namespace

extern "C" {

const char* pdm_status_name(pdm_status status)
{
    switch (status) {
    case PDM_OK: return "ok";
    case PDM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PDM_ERR_NO_BOUND_STATE: return "no bound state";
    case PDM_ERR_FALL_TO_CENTER: return "fall to center";
    case PDM_ERR_NUMERICAL: return "numerical failure";
    }
    return "unknown";
}

const char* pdm_last_error(void) { return g_last_error.c_str(); }

pdm_status pdm_model_create(double alpha, double a, pdm_model** out)
{
    if (!out)
        return PDM_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        const pdm::ModelParams p = pdm::make_params(alpha, a);
        *out = new pdm_model{p};
    });
}

void pdm_model_destroy(pdm_model* model) { delete model; }

void pdm_model_params(const pdm_model* model, double* alpha, double* a)
{
    if (!model)
        return;
    if (alpha)
        *alpha = model->params.alpha;
    if (a)
        *a = model->params.a;
}

int pdm_bound_state_kind(const pdm_model* model)
{
    if (!model)
        return 0;
    if (model->params.a == model->params.alpha)
        return 2;
    return pdm::bound_state_condition(model->params) ? 1 : 0;
}

pdm_status pdm_discriminant(const pdm_model* model, int n_r, int l, int two_j, double* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        *out = pdm::discriminant(model->params, qn);
    });
}

pdm_status pdm_level_compute(const pdm_model* model, int n_r, int l, int two_j, pdm_level* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        const pdm::LevelResult lv = pdm::energy_exact(model->params, qn);
        out->l_star = lv.l_star;
        out->n_star = lv.n_star;
        out->e_star_sq = lv.e_star_sq;
        out->epsilon = lv.epsilon;
    });
}

pdm_status pdm_energy_free_case(const pdm_model* model, int n_r, int l, int two_j, double* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        *out = pdm::energy_free_case(model->params, qn);
    });
}

pdm_status pdm_ground_state_energy(const pdm_model* model, double* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = pdm::ground_state_energy(model->params); });
}

pdm_status pdm_mean_effective_mass(const pdm_model* model, double* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = pdm::mean_effective_mass(model->params); });
}

pdm_status pdm_energy_expansion(double alpha, double a_bar, int n_r, int l, int two_j,
                                double* out)
{
    if (!out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        *out = pdm::energy_expansion(pdm::make_expansion_input(alpha, a_bar, qn));
    });
}

pdm_status pdm_rest_energy_estimate(double alpha, double a_bar, int n_r, int l, int two_j,
                                    double* out)
{
    if (!out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        *out = pdm::rest_energy_estimate(pdm::make_expansion_input(alpha, a_bar, qn));
    });
}

pdm_status pdm_expansion_residual(double alpha, double a_bar, int n_r, int l, int two_j,
                                  double* out)
{
    if (!out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        const std::array<double, 1> alphas{alpha};
        *out = pdm::residual_order_probe(a_bar, qn, alphas)[0].second;
    });
}

pdm_status pdm_oracle_solve(const pdm_model* model, int n_r, int l, int two_j,
                            const pdm_mesh_spec* mesh, double tol, pdm_oracle_result* out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        const pdm::RadialMesh m = resolve_mesh(model, n_r, l, two_j, mesh);
        const pdm::OracleResult res =
            pdm::self_consistent_energy(model->params, qn, m, tol > 0.0 ? tol : 1e-10);
        out->epsilon = res.epsilon;
        out->residual = res.residual;
        out->mesh_error_estimate = res.mesh_error_estimate;
        out->iterations = res.iterations;
    });
}

pdm_status pdm_wavefunction_create(const pdm_model* model, int n_r, int l, int two_j,
                                   pdm_wavefunction** out)
{
    if (!model || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        const pdm::QuantumNumbers qn = pdm::make_quantum_numbers(n_r, l, two_j);
        const pdm::LevelResult lv = pdm::energy_exact(model->params, qn);
        *out = new pdm_wavefunction{pdm::radial_wavefunction(lv, qn)};
    });
}

void pdm_wavefunction_destroy(pdm_wavefunction* wf) { delete wf; }

pdm_status pdm_wavefunction_info(const pdm_wavefunction* wf, pdm_level* out)
{
    if (!wf || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    out->l_star = wf->wf.l_star;
    out->n_star = wf->wf.n_star;
    out->e_star_sq = wf->wf.e_star_sq;
    out->epsilon = 0.0; // not carried by the wavefunction
    return PDM_OK;
}

pdm_status pdm_wavefunction_eval(const pdm_wavefunction* wf, const double* r, double* out,
                                 size_t count)
{
    if (!wf || !r || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        for (size_t i = 0; i < count; ++i)
            out[i] = pdm::evaluate(wf->wf, r[i]);
    });
}

pdm_status pdm_wavefunction_norm_error(const pdm_wavefunction* wf, double* out)
{
    if (!wf || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = pdm::normalization_check(wf->wf); });
}

pdm_status pdm_wavefunction_node_count(const pdm_wavefunction* wf, int* out)
{
    if (!wf || !out)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] { *out = pdm::node_count(wf->wf); });
}

pdm_status pdm_ordering_eigenvalues(double a, double alpha, int l, double eta, double eps,
                                    double rho, const pdm_mesh_spec* mesh, int count,
                                    double* out)
{
    if (!out || count < 1)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        pdm::RadialMesh m = pdm::default_pdm_mesh(a, alpha, l, count);
        if (mesh) {
            if (mesh->r_max > 0.0)
                m.r_max = mesh->r_max;
            if (mesh->n_points > 0)
                m.n_points = mesh->n_points;
            m = pdm::make_mesh(m.r_max, m.n_points);
        }
        const pdm::PdmProblem prob{a, alpha, l, pdm::make_ordering(eta, eps, rho), m};
        const std::vector<double> ev = pdm::pdm_eigenvalues(prob, count);
        std::memcpy(out, ev.data(), sizeof(double) * ev.size());
    });
}

pdm_status pdm_wkb_levels(double a, double alpha, int l, int n_r_max, double* out)
{
    if (!out || n_r_max < 0)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const std::vector<double> ev = pdm::wkb_levels(a, alpha, l, n_r_max);
        std::memcpy(out, ev.data(), sizeof(double) * ev.size());
    });
}

pdm_status pdm_ordering_spread(double a, double alpha, int l, const double* orderings,
                               size_t n_orderings, int n_r, double* out)
{
    if (!out || !orderings || n_orderings == 0)
        return PDM_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<pdm::OrderingSpec> specs;
        specs.reserve(n_orderings);
        for (size_t i = 0; i < n_orderings; ++i)
            specs.push_back(pdm::make_ordering(orderings[3 * i], orderings[3 * i + 1],
                                               orderings[3 * i + 2]));
        *out = pdm::ordering_spread(a, alpha, l, specs, n_r);
    });
}

} // extern "C"
