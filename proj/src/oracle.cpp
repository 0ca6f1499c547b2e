#include "oracle.hpp"

#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace pdm {

namespace {

// r = r_max t^s; the transformed eigenfunction behaves like
// t^{s(l*+1)+(s-1)/2} near the origin. u ~ r^{l*+1} with non-integer l*
// leaves an h^{2l*+2} truncation component that Richardson cannot cancel,
// so grade until the transformed exponent clears ~3.5.
int grading_exponent(double l_star)
{
    if (l_star < 0.0)
        return 3;
    return l_star < 1.0 ? 2 : 1;
}

} // namespace

RadialMesh make_mesh(double r_max, int n_points)
{
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        fail(ErrorKind::invalid_argument, "mesh r_max must be positive and finite");
    if (n_points < 200)
        fail(ErrorKind::invalid_argument, "mesh needs at least 200 points");
    return {r_max, n_points};
}

RadialMesh default_mesh(const ModelParams& p, const QuantumNumbers& qn)
{
    const LevelResult lv = energy_exact(p, qn);
    const double r_max = 40.0 * lv.n_star * lv.n_star / std::max(lv.e_star_sq, 0.1);
    return make_mesh(r_max, 4000);
}

std::vector<double> mesh_nodes(double l_star, const RadialMesh& mesh)
{
    const int s = grading_exponent(l_star);
    const int n = mesh.n_points;
    const double h = 1.0 / (n + 1);
    std::vector<double> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        r[static_cast<std::size_t>(i - 1)] = mesh.r_max * std::pow(i * h, s);
    return r;
}

Tridiag effective_hamiltonian_matrix(double e_star_sq, double l_star, const RadialMesh& mesh)
{
    if (!(e_star_sq > 0.0))
        fail(ErrorKind::invalid_argument, "effective charge squared must be positive");
    if (!(l_star > -1.0))
        fail(ErrorKind::invalid_argument, "l* must exceed -1");

    // Liouville form on uniform t with r = r_max t^s:
    //   -(1/2) d/dt[(1/g') du/dt] + g' q(r) u = E* g' u,   g'(t) = s r_max t^{s-1},
    // then the diagonal similarity B^{-1/2} A B^{-1/2} with B = diag(g')
    // restores a standard symmetric problem.
    const int s = grading_exponent(l_star);
    const int n = mesh.n_points;
    const double h = 1.0 / (n + 1);
    const double cc = 0.5 * l_star * (l_star + 1.0);

    auto gp = [&](double t) { return s * mesh.r_max * std::pow(t, s - 1); };
    auto q = [&](double r) { return cc / (r * r) - e_star_sq / r; };

    Tridiag a;
    a.diag.resize(static_cast<std::size_t>(n));
    a.off.resize(static_cast<std::size_t>(n - 1));
    std::vector<double> b(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double t = i * h;
        const double pm = 1.0 / gp(t - 0.5 * h);
        const double pp = 1.0 / gp(t + 0.5 * h);
        const double gi = gp(t);
        const double r = mesh.r_max * std::pow(t, s);
        a.diag[static_cast<std::size_t>(i - 1)] = 0.5 * (pm + pp) / (h * h) + gi * q(r);
        b[static_cast<std::size_t>(i - 1)] = gi;
        if (i < n)
            a.off[static_cast<std::size_t>(i - 1)] = -0.5 * pp / (h * h);
    }
    for (int i = 0; i < n; ++i) {
        a.diag[static_cast<std::size_t>(i)] /= b[static_cast<std::size_t>(i)];
        if (i < n - 1)
            a.off[static_cast<std::size_t>(i)] /=
                std::sqrt(b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i + 1)]);
    }
    return a;
}

double effective_hamiltonian_eigenvalue(double e_star_sq, double l_star, int n_r,
                                        const RadialMesh& mesh)
{
    if (n_r < 0)
        fail(ErrorKind::invalid_argument, "n_r must be non-negative");
    const Tridiag t = effective_hamiltonian_matrix(e_star_sq, l_star, mesh);
    const double ev = tridiag_eigenvalue(t, n_r);
    if (ev >= 0.0)
        fail(ErrorKind::numerical, "mesh too coarse: eigenvalue " + std::to_string(n_r) +
                                       " not resolved as a bound state in the box");
    return ev;
}

namespace {

struct RootResult {
    double x;
    double f;
    int evals;
};

// Illinois variant of false position on a sign-changing bracket.
RootResult illinois(const std::function<double(double)>& f, double x0, double f0, double x1,
                    double f1, double ftol)
{
    int evals = 0;
    int side = 0;
    double x = x0, fx = f0;
    for (int iter = 0; iter < 200; ++iter) {
        x = (x0 * f1 - x1 * f0) / (f1 - f0);
        if (!std::isfinite(x) || x <= std::min(x0, x1) || x >= std::max(x0, x1))
            x = 0.5 * (x0 + x1);
        fx = f(x);
        ++evals;
        if (std::abs(fx) < ftol || std::abs(x1 - x0) < 1e-15)
            return {x, fx, evals};
        if ((fx > 0.0) == (f0 > 0.0)) {
            x0 = x;
            f0 = fx;
            if (side == -1)
                f1 *= 0.5;
            side = -1;
        } else {
            x1 = x;
            f1 = fx;
            if (side == 1)
                f0 *= 0.5;
            side = 1;
        }
    }
    return {x, fx, evals};
}

} // namespace

OracleResult self_consistent_energy(const ModelParams& p, const QuantumNumbers& qn,
                                    const RadialMesh& mesh, double tol)
{
    if (p.a == p.alpha)
        fail(ErrorKind::no_bound_state,
             "a = e^2/mc^2: the single boundary level is excluded from the oracle");
    if (!bound_state_condition(p))
        fail(ErrorKind::no_bound_state, "no bound states: a > e^2/mc^2");
    if (discriminant(p, qn) <= 0.0)
        fail(ErrorKind::fall_to_center, "oracle requires a strictly positive discriminant");

    const double ls = l_star(p, qn);
    const LevelResult analytic = energy_exact(p, qn);
    const double turning = analytic.n_star * analytic.n_star / analytic.e_star_sq;
    if (mesh.r_max <= 10.0 * turning)
        fail(ErrorKind::invalid_argument,
             "mesh r_max = " + std::to_string(mesh.r_max) +
                 " does not exceed 10x the classical turning radius " + std::to_string(turning));

    const double eps_lo = p.alpha > 0.0 ? std::max(p.a / p.alpha + 1e-9, 0.01) : 0.01;
    const double eps_hi = 1.0 - 1e-12;

    int total_evals = 0;
    auto solve_on = [&](int n_points) {
        const RadialMesh m{mesh.r_max, n_points};
        auto F = [&](double eps) {
            ++total_evals;
            const double e2 = eps * p.alpha - p.a;
            const Tridiag t = effective_hamiltonian_matrix(e2, ls, m);
            // Positive box eigenvalues are kept as-is here: the sign of F is
            // still meaningful for bracketing near the weak-coupling edge.
            return tridiag_eigenvalue(t, qn.n_r) - 0.5 * (eps * eps - 1.0);
        };

        // Coarse pre-scan: demand exactly one sign change before committing.
        constexpr int kScan = 32;
        double prev_x = eps_lo;
        double prev_f = F(prev_x);
        int changes = 0;
        double b0 = 0, fb0 = 0, b1 = 0, fb1 = 0;
        for (int i = 1; i <= kScan; ++i) {
            const double x = eps_lo + (eps_hi - eps_lo) * i / kScan;
            const double fx = F(x);
            if ((fx > 0.0) != (prev_f > 0.0)) {
                ++changes;
                b0 = prev_x;
                fb0 = prev_f;
                b1 = x;
                fb1 = fx;
            }
            prev_x = x;
            prev_f = fx;
        }
        if (changes == 0)
            fail(ErrorKind::numerical,
                 "bracket failure: F has no sign change on (" + std::to_string(eps_lo) + ", 1); " +
                     "alpha=" + std::to_string(p.alpha) + " a=" + std::to_string(p.a));
        if (changes > 1)
            fail(ErrorKind::numerical,
                 "bracket failure: F changes sign " + std::to_string(changes) +
                     " times on the search interval");

        return illinois(F, b0, fb0, b1, fb1, tol);
    };

    const RootResult coarse = solve_on(mesh.n_points);
    const RootResult fine = solve_on(2 * mesh.n_points);

    OracleResult out;
    out.epsilon = (4.0 * fine.x - coarse.x) / 3.0; // O(h^2) Richardson
    out.residual = std::abs(fine.f);
    out.mesh_error_estimate = std::abs(fine.x - coarse.x) / 3.0;
    out.iterations = total_evals;
    return out;
}

} // namespace pdm
