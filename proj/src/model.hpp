#pragma once

#include "error.hpp"

namespace pdm {

// Natural units hbar = m = c = 1 throughout: the Compton length is 1,
// e^2 = alpha, energies are in units of mc^2.

// Dimensionless physics inputs. `a` is the mass-length parameter of
// m*(r) = 1 + a/r in Compton units; the classical-radius form abar
// satisfies a = abar * alpha.
struct ModelParams {
    double alpha = 0.0; // fine-structure constant, >= 0
    double a = 0.0;     // may take either sign
};

ModelParams make_params(double alpha, double a);

// (n_r, l, j) with j kept as the integer 2j so that branch selection and
// degeneracy checks are exact. two_j = 2l+1 is the upper branch
// (j = l + 1/2), two_j = 2l-1 the lower one (j = l - 1/2, l >= 1).
struct QuantumNumbers {
    int n_r = 0;
    int l = 0;
    int two_j = 1;

    bool upper_branch() const { return two_j == 2 * l + 1; }
    double j_plus_half() const { return 0.5 * (two_j + 1); }
    int principal() const { return n_r + l + 1; } // n = n_r + l + 1
};

QuantumNumbers make_quantum_numbers(int n_r, int l, int two_j);

// Derived quantities for one bound level.
struct LevelResult {
    double l_star;    // effective orbital number, > -1
    double n_star;    // n_r + l_star + 1
    double e_star_sq; // effective charge squared, epsilon*alpha - a
    double epsilon;   // energy in units mc^2, in (0, 1]
};

// Radicand of the effective orbital number: (j+1/2)^2 + a^2 - alpha^2.
// Pure arithmetic; the caller checks the sign before taking l*.
double discriminant(const ModelParams& p, const QuantumNumbers& qn);

// True iff a family of bound states exists: a < alpha (i.e. a < e^2/mc^2).
// The boundary a = alpha carries exactly one degenerate level at E = mc^2
// and is classified as not bound here; spectrum code treats it specially.
bool bound_state_condition(const ModelParams& p);

} // namespace pdm
