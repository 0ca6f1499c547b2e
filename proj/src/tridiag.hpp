#pragma once

#include <vector>

namespace pdm {

// Symmetric tridiagonal matrix: diag.size() = n, off.size() = n - 1.
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;
};

// Number of eigenvalues strictly below lambda (Sturm/LDL^T count).
int sturm_count(const Tridiag& t, double lambda);

// k-th eigenvalue in ascending order (k counts from 0), by bisection on
// the Sturm count between the Gershgorin bounds.
double tridiag_eigenvalue(const Tridiag& t, int k);

// Eigenvalues k0..k1 inclusive, ascending.
std::vector<double> tridiag_eigenvalues(const Tridiag& t, int k0, int k1);

// Eigenvector for an eigenvalue estimate, by inverse iteration with a
// pivoted tridiagonal solve; normalized to unit Euclidean norm.
std::vector<double> tridiag_eigenvector(const Tridiag& t, double lambda);

// Sign changes of consecutive entries, ignoring entries below
// `negligible` relative to the largest magnitude.
int count_sign_changes(const std::vector<double>& v, double negligible = 1e-8);

} // namespace pdm
