#pragma once

#include "model.hpp"

#include <span>
#include <utility>
#include <vector>

namespace pdm {

// Quasirelativistic expansion of the spectrum in powers of alpha at fixed
// abar = a/(alpha), abar < 1.
struct ExpansionInput {
    double alpha = 0.0;
    double a_bar = 0.0;
    QuantumNumbers qn;

    int n() const { return qn.principal(); }
};

ExpansionInput make_expansion_input(double alpha, double a_bar, const QuantumNumbers& qn);

// Two-term expansion:
// epsilon = 1 - (alpha^2/2n^2)(1-abar)^2
//             - (alpha^4/2n^4)(1-abar)^3 [ n(1+abar)/(j+1/2) - (3/4)(1+abar/3) ].
double energy_expansion(const ExpansionInput& in);

// First-order rest-energy estimate: epsilon = 1 - (alpha^2/2n^2)(1-2*abar),
// the Bohr term shifted by the perturbative <e^2/r> mass contribution.
double rest_energy_estimate(const ExpansionInput& in);

// |energy_exact - energy_expansion| for each alpha, with a = abar*alpha.
// The ratio of residuals at alpha and alpha/2 tends to 2^6 = 64: the
// truncation error of the expansion is O(alpha^6).
std::vector<std::pair<double, double>>
residual_order_probe(double a_bar, const QuantumNumbers& qn, std::span<const double> alphas);

// |rest_energy_estimate - (expansion truncated at alpha^2)|; equals
// (alpha^2/2n^2) * abar^2 in closed form, so the two agree at linear
// order in abar.
double linearization_consistency(double a_bar, const QuantumNumbers& qn, double alpha);

} // namespace pdm
