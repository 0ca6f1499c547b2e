#pragma once

#include "model.hpp"

namespace pdm {

// Closed-form spectrum of the Coulomb problem with mass m*(r) = 1 + a/r.
// All energies are epsilon = E/mc^2.

// Effective orbital number sqrt((j+1/2)^2 + a^2 - alpha^2) - 1/2 -+ 1/2,
// upper sign for j = l + 1/2. Throws fall_to_center when the radicand is
// negative.
double l_star(const ModelParams& p, const QuantumNumbers& qn);

// Effective principal number n_r + l* + 1.
double n_star(const ModelParams& p, const QuantumNumbers& qn);

// Exact level. Throws no_bound_state when a > alpha, fall_to_center when
// the radicand of l* is negative. The boundary a = alpha returns
// epsilon = 1 exactly (the single degenerate level).
LevelResult energy_exact(const ModelParams& p, const QuantumNumbers& qn);

// Free-case spectrum (alpha = 0, a < 0): epsilon = sqrt(1 - (a/n*)^2).
double energy_free_case(const ModelParams& p, const QuantumNumbers& qn);

// Ground state, n* = sqrt(1 + a^2 - alpha^2):
// epsilon = [a*alpha + sqrt(1 + a^2 - alpha^2)] / (1 + a^2).
double ground_state_energy(const ModelParams& p);

// Mean effective mass of the alpha = 0 ground state: 1/sqrt(1 + a^2).
// Plays the role of the rest energy of the free bound particle.
double mean_effective_mass(const ModelParams& p);

} // namespace pdm
