#include "spectrum.hpp"

#include <cmath>
#include <string>

namespace pdm {

namespace {

constexpr double kQuadraticResidualTol = 1e-12;

} // namespace

double l_star(const ModelParams& p, const QuantumNumbers& qn)
{
    const double d = discriminant(p, qn);
    if (d < 0.0)
        fail(ErrorKind::fall_to_center,
             "fall to center: (j+1/2)^2 + a^2 - alpha^2 = " + std::to_string(d) + " < 0");
    const double root = std::sqrt(d);
    return qn.upper_branch() ? root - 1.0 : root;
}

double n_star(const ModelParams& p, const QuantumNumbers& qn)
{
    return qn.n_r + l_star(p, qn) + 1.0;
}

LevelResult energy_exact(const ModelParams& p, const QuantumNumbers& qn)
{
    if (p.a > p.alpha)
        fail(ErrorKind::no_bound_state,
             "no bound states: a = " + std::to_string(p.a) + " exceeds e^2/mc^2 = " +
                 std::to_string(p.alpha));

    const double ls = l_star(p, qn);
    const double ns = qn.n_r + ls + 1.0;
    if (!(ns > 0.0))
        fail(ErrorKind::fall_to_center, "effective principal number n* = " + std::to_string(ns) +
                                            " is not positive");

    LevelResult out;
    out.l_star = ls;
    out.n_star = ns;

    if (p.a == p.alpha) {
        // Single degenerate level at E = mc^2, independent of quantum numbers.
        out.epsilon = 1.0;
        out.e_star_sq = 0.0;
        return out;
    }

    const double t = p.alpha / ns;
    const double eps =
        (p.a * p.alpha / (ns * ns) + std::sqrt(1.0 + (p.alpha * p.alpha - p.a * p.a) / (ns * ns))) /
        (1.0 + t * t);
    out.epsilon = eps;
    out.e_star_sq = eps * p.alpha - p.a;

    if (out.e_star_sq < 0.0)
        fail(ErrorKind::numerical, "internal: effective charge squared came out negative");
    const double residual =
        0.5 * (eps * eps - 1.0) + out.e_star_sq * out.e_star_sq / (2.0 * ns * ns);
    if (std::abs(residual) > kQuadraticResidualTol)
        fail(ErrorKind::numerical,
             "internal: defining quadratic residual " + std::to_string(residual) + " too large");
    return out;
}

double energy_free_case(const ModelParams& p, const QuantumNumbers& qn)
{
    if (p.alpha != 0.0)
        fail(ErrorKind::invalid_argument, "free-case spectrum requires alpha = 0");
    if (p.a >= 0.0)
        fail(ErrorKind::no_bound_state, "free-case bound states require a < 0");
    const double ns = n_star(p, qn);
    const double x = p.a / ns;
    return std::sqrt(1.0 - x * x);
}

double ground_state_energy(const ModelParams& p)
{
    if (p.a > p.alpha)
        fail(ErrorKind::no_bound_state, "no bound states: a >= e^2/mc^2");
    const double rad = 1.0 + p.a * p.a - p.alpha * p.alpha;
    if (rad < 0.0)
        fail(ErrorKind::fall_to_center, "ground state radicand 1 + a^2 - alpha^2 < 0");
    if (p.a == p.alpha)
        return 1.0;
    return (p.a * p.alpha + std::sqrt(rad)) / (1.0 + p.a * p.a);
}

double mean_effective_mass(const ModelParams& p)
{
    if (p.alpha != 0.0)
        fail(ErrorKind::invalid_argument, "mean effective mass is defined for alpha = 0");
    return 1.0 / std::sqrt(1.0 + p.a * p.a);
}

} // namespace pdm
