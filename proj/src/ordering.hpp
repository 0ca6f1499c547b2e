#pragma once

#include "model.hpp"
#include "oracle.hpp"
#include "tridiag.hpp"

#include <span>
#include <vector>

namespace pdm {

// Non-relativistic lab for the position-dependent-mass Schroedinger
// problem m*(r) = 1 + a/r with the Coulomb potential -alpha/r, under the
// two-sided kinetic orderings
//   T = (1/4)(m^eta p m^eps p m^rho + m^rho p m^eps p m^eta),
// eta + eps + rho = -1.
struct OrderingSpec {
    double eta = -0.5;
    double eps = 0.0;
    double rho = -0.5;
};

OrderingSpec make_ordering(double eta, double eps, double rho);
inline OrderingSpec symmetric_ordering() { return {-0.5, 0.0, -0.5}; }

struct PdmProblem {
    double a = 0.0;
    double alpha = 0.0;
    int l = 0;
    OrderingSpec ordering{};
    RadialMesh mesh{};
};

// Ordering-dependent correction potential of the reduced form
//   H = -1/2 div (1/m*) grad + U_ord + l(l+1)/(2 m* r^2) + V
// (acting on R), with mu = m*'/m*:
//   U_ord = -(1/4m)[ (eta+rho)(mu' + 2 mu/r) - (2 eta rho + eta + rho) mu^2 ].
double ordering_potential(const OrderingSpec& ord, double a, double r);

// Extra term from the u = r R reduction: -m*'/(2 m*^2 r).
double radial_reduction_potential(double a, double r);

// Domain [r_min, r_max] with an inner hard wall at |a|(1+1e-6) when a < 0,
// keeping m* > 0 on the mesh; r_max sized for levels up to n_r_max.
RadialMesh default_pdm_mesh(double a, double alpha, int l, int n_r_max);
double pdm_inner_wall(double a);

// Symmetric tridiagonal discretization of the reduced operator on u.
Tridiag pdm_hamiltonian_matrix(const PdmProblem& prob);

// Lowest `count` eigenvalues, ascending. Errors when m* is not positive
// on the mesh or the box does not resolve `count` bound levels.
std::vector<double> pdm_eigenvalues(const PdmProblem& prob, int count);

// Radial action integral for p_r^2 = 2 m*(E - V) - (l+1/2)^2/r^2
// (Langer-corrected), by 64-point Gauss quadrature after the
// r = r1 + (r2-r1) sin^2(theta) substitution. Returns 0 when no
// classical region exists at this E.
double wkb_action(double a, double alpha, int l, double energy);

// Closed form of the same action, pi*(B/sqrt(-2E) - sqrt(C)) with
// B = alpha + E a, C = (l+1/2)^2 - 2 a alpha; cross-check only.
double wkb_action_closed_form(double a, double alpha, int l, double energy);

// Bohr-Sommerfeld levels: action = 2 pi (n_r + 1/2) over a full cycle,
// i.e. the one-way integral equals pi (n_r + 1/2), solved for E per level.
std::vector<double> wkb_levels(double a, double alpha, int l, int n_r_max);

// max_ord |E_ord(n_r) - E_sym(n_r)| / |E_sym(n_r+1) - E_sym(n_r)|.
double ordering_spread(double a, double alpha, int l, std::span<const OrderingSpec> orderings,
                       int n_r);

} // namespace pdm
