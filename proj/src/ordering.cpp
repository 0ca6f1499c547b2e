#include "ordering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace pdm {

OrderingSpec make_ordering(double eta, double eps, double rho)
{
    if (std::abs(eta + eps + rho + 1.0) > 1e-12)
        fail(ErrorKind::invalid_argument, "ordering exponents must satisfy eta + eps + rho = -1");
    return {eta, eps, rho};
}

double ordering_potential(const OrderingSpec& ord, double a, double r)
{
    const double m = 1.0 + a / r;
    const double mp = -a / (r * r);
    const double mpp = 2.0 * a / (r * r * r);
    const double mu = mp / m;
    const double mup = mpp / m - mu * mu;
    const double s = ord.eta + ord.rho;
    return -(s * (mup + 2.0 * mu / r) - (2.0 * ord.eta * ord.rho + s) * mu * mu) / (4.0 * m);
}

double radial_reduction_potential(double a, double r)
{
    const double m = 1.0 + a / r;
    const double mp = -a / (r * r);
    return -mp / (2.0 * m * m * r);
}

double pdm_inner_wall(double a)
{
    return a < 0.0 ? -a * (1.0 + 1e-6) : 0.0;
}

RadialMesh default_pdm_mesh(double a, double alpha, int l, int n_r_max)
{
    const double n = n_r_max + l + 2;
    const double coupling = std::max(alpha, 0.1);
    const double r_max = 8.0 * n * n / coupling + std::abs(a);
    const int n_points = static_cast<int>(std::clamp(r_max / 0.12, 8000.0, 120000.0));
    return make_mesh(r_max, n_points);
}

Tridiag pdm_hamiltonian_matrix(const PdmProblem& prob)
{
    const int n = prob.mesh.n_points;
    const double r_min = pdm_inner_wall(prob.a);
    if (prob.mesh.r_max <= r_min)
        fail(ErrorKind::invalid_argument, "mesh r_max lies inside the excluded m* <= 0 region");
    const double h = (prob.mesh.r_max - r_min) / (n + 1);
    if (1.0 + prob.a / (r_min + 0.5 * h) <= 0.0)
        fail(ErrorKind::invalid_argument, "m*(r) is not positive on the mesh");

    const double cc = 0.5 * prob.l * (prob.l + 1.0);
    auto vtot = [&](double r) {
        const double m = 1.0 + prob.a / r;
        return ordering_potential(prob.ordering, prob.a, r) +
               radial_reduction_potential(prob.a, r) + cc / (m * r * r) - prob.alpha / r;
    };
    auto p = [&](double r) { return 1.0 / (1.0 + prob.a / r); };

    Tridiag t;
    t.diag.resize(static_cast<std::size_t>(n));
    t.off.resize(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
        const double r = r_min + i * h;
        const double pm = p(r - 0.5 * h);
        const double pp = p(r + 0.5 * h);
        t.diag[static_cast<std::size_t>(i - 1)] = 0.5 * (pm + pp) / (h * h) + vtot(r);
        if (i < n)
            t.off[static_cast<std::size_t>(i - 1)] = -0.5 * pp / (h * h);
    }
    return t;
}

std::vector<double> pdm_eigenvalues(const PdmProblem& prob, int count)
{
    if (count < 1)
        fail(ErrorKind::invalid_argument, "eigenvalue count must be positive");
    const Tridiag t = pdm_hamiltonian_matrix(prob);
    std::vector<double> ev = tridiag_eigenvalues(t, 0, count - 1);
    if (ev.back() >= 0.0)
        fail(ErrorKind::numerical,
             "box resolves fewer than " + std::to_string(count) + " bound levels");
    return ev;
}

namespace {

struct TurningPoints {
    bool exists = false;
    double r1 = 0.0;
    double r2 = 0.0;
};

// p^2 = 2E + 2B/r - C/r^2 with B = alpha + E a, C = (l+1/2)^2 - 2 a alpha.
TurningPoints turning_points(double a, double alpha, int l, double energy)
{
    const double b = alpha + energy * a;
    const double c = (l + 0.5) * (l + 0.5) - 2.0 * a * alpha;
    if (c <= 0.0)
        fail(ErrorKind::numerical, "effective centrifugal coefficient is not positive");
    if (!(energy < 0.0) || b <= 0.0)
        return {};
    const double disc = b * b + 2.0 * energy * c;
    if (disc <= 0.0)
        return {};
    const double root = std::sqrt(disc);
    TurningPoints tp;
    tp.exists = true;
    tp.r1 = (b - root) / (-2.0 * energy);
    tp.r2 = (b + root) / (-2.0 * energy);
    return tp;
}

// 64-point Gauss-Legendre nodes/weights on (-1, 1), positive half; the
// rule is symmetric.
struct Gauss64 {
    std::array<double, 32> x{};
    std::array<double, 32> w{};
    Gauss64()
    {
        // Newton iteration on Legendre P_64.
        constexpr int n = 64;
        for (int i = 0; i < 32; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15)
                    break;
            }
            x[static_cast<std::size_t>(i)] = z;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

const Gauss64& gauss64()
{
    static const Gauss64 g;
    return g;
}

} // namespace

double wkb_action(double a, double alpha, int l, double energy)
{
    const TurningPoints tp = turning_points(a, alpha, l, energy);
    if (!tp.exists)
        return 0.0;
    if (a < 0.0 && tp.r1 <= -a)
        fail(ErrorKind::numerical, "inner turning point lies in the excluded m* <= 0 region");
    const double width = tp.r2 - tp.r1;
    const double amp = std::sqrt(-2.0 * energy) * width * width;
    // r = r1 + width sin^2(theta): p dr = amp * 2 sin^2 cos^2 / r dtheta.
    const Gauss64& g = gauss64();
    const double half = std::numbers::pi / 4.0; // map (-1,1) -> (0, pi/2)
    double sum = 0.0;
    for (int i = 0; i < 32; ++i) {
        for (double sign : {-1.0, 1.0}) {
            const double theta = half * (1.0 + sign * g.x[static_cast<std::size_t>(i)]);
            const double sn = std::sin(theta), cs = std::cos(theta);
            const double r = tp.r1 + width * sn * sn;
            sum += g.w[static_cast<std::size_t>(i)] * 2.0 * sn * sn * cs * cs / r;
        }
    }
    return amp * half * sum;
}

double wkb_action_closed_form(double a, double alpha, int l, double energy)
{
    const TurningPoints tp = turning_points(a, alpha, l, energy);
    if (!tp.exists)
        return 0.0;
    const double b = alpha + energy * a;
    const double c = (l + 0.5) * (l + 0.5) - 2.0 * a * alpha;
    return std::numbers::pi * (b / std::sqrt(-2.0 * energy) - std::sqrt(c));
}

std::vector<double> wkb_levels(double a, double alpha, int l, int n_r_max)
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_r_max + 1));
    for (int n_r = 0; n_r <= n_r_max; ++n_r) {
        const double target = std::numbers::pi * (n_r + 0.5);
        double hi = -1e-12; // action diverges as E -> 0^- for alpha > 0
        double lo = -0.25;
        int guard = 0;
        while (wkb_action(a, alpha, l, lo) > target) {
            lo *= 2.0;
            if (++guard > 60)
                fail(ErrorKind::numerical, "could not bracket the quantization condition");
        }
        if (wkb_action(a, alpha, l, hi) < target)
            fail(ErrorKind::numerical,
                 "no classical well supports level n_r = " + std::to_string(n_r));
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi)
                break;
            if (wkb_action(a, alpha, l, mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

double ordering_spread(double a, double alpha, int l, std::span<const OrderingSpec> orderings,
                       int n_r)
{
    if (n_r < 0)
        fail(ErrorKind::invalid_argument, "n_r must be non-negative");
    const RadialMesh mesh = default_pdm_mesh(a, alpha, l, n_r + 1);
    PdmProblem ref{a, alpha, l, symmetric_ordering(), mesh};
    const std::vector<double> sym = pdm_eigenvalues(ref, n_r + 2);
    const double spacing = std::abs(sym[static_cast<std::size_t>(n_r) + 1] -
                                    sym[static_cast<std::size_t>(n_r)]);
    double worst = 0.0;
    for (const OrderingSpec& ord : orderings) {
        PdmProblem prob{a, alpha, l, ord, mesh};
        const std::vector<double> ev = pdm_eigenvalues(prob, n_r + 1);
        worst = std::max(worst,
                         std::abs(ev[static_cast<std::size_t>(n_r)] -
                                  sym[static_cast<std::size_t>(n_r)]));
    }
    return worst / spacing;
}

} // namespace pdm
