#pragma once

#include "model.hpp"

#include <span>
#include <vector>

namespace pdm {

// Bound-state radial functions: hydrogen-like with non-integer l* and
// effective charge e*^2,
//   R(r) = N rho^{l*} exp(-rho/2) L_{n_r}^{(2l*+1)}(rho),  rho = 2 e*^2 r / n*.
struct RadialWavefunction {
    double l_star = 0.0;
    double n_star = 1.0;
    double e_star_sq = 1.0;
    double scale = 1.0;         // effective Bohr radius 1/e*^2
    double norm_constant = 1.0; // closed-form Gamma normalization
    int n_r = 0;
};

// Generalized Laguerre polynomial L_k^{(beta)}(x) with real beta > -1,
// by the forward three-term recurrence in the degree.
double generalized_laguerre(int k, double beta, double x);

RadialWavefunction radial_wavefunction(const LevelResult& level, const QuantumNumbers& qn);

double evaluate(const RadialWavefunction& wf, double r);
std::vector<double> evaluate(const RadialWavefunction& wf, std::span<const double> r_values);

// |integral R^2 r^2 dr - 1| by adaptive quadrature with the r = t^2
// substitution that regularizes the origin; the quadrature, not the
// Gamma formula, is the authority on the normalization.
double normalization_check(const RadialWavefunction& wf);

// Sign changes of R on (0, infinity); equals n_r for a valid state.
int node_count(const RadialWavefunction& wf);

// integral R_a R_b r^2 dr for two states sharing (l*, e*^2).
double radial_overlap(const RadialWavefunction& a, const RadialWavefunction& b);

} // namespace pdm
