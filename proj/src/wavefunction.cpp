#include "wavefunction.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace pdm {

double generalized_laguerre(int k, double beta, double x)
{
    if (k < 0)
        fail(ErrorKind::invalid_argument, "Laguerre degree must be non-negative");
    if (k == 0)
        return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + beta - x;
    for (int i = 2; i <= k; ++i) {
        const double next = ((2.0 * i - 1.0 + beta - x) * l - (i - 1.0 + beta) * lm1) / i;
        lm1 = l;
        l = next;
    }
    return l;
}

RadialWavefunction radial_wavefunction(const LevelResult& level, const QuantumNumbers& qn)
{
    if (!(level.e_star_sq > 0.0))
        fail(ErrorKind::invalid_argument, "wavefunction requires a bound state with e*^2 > 0");
    if (!(level.l_star > -1.0))
        fail(ErrorKind::invalid_argument, "wavefunction requires l* > -1");

    RadialWavefunction wf;
    wf.l_star = level.l_star;
    wf.n_star = level.n_star;
    wf.e_star_sq = level.e_star_sq;
    wf.scale = 1.0 / level.e_star_sq;
    wf.n_r = qn.n_r;
    // N^2 = (2 e*^2/n*)^3 Gamma(n_r+1) / (2 n* Gamma(n_r + 2l* + 2))
    const double kappa = 2.0 * level.e_star_sq / level.n_star;
    const double log_n2 = 3.0 * std::log(kappa) + std::lgamma(qn.n_r + 1.0) -
                          std::log(2.0 * level.n_star) -
                          std::lgamma(qn.n_r + 2.0 * level.l_star + 2.0);
    wf.norm_constant = std::exp(0.5 * log_n2);
    return wf;
}

double evaluate(const RadialWavefunction& wf, double r)
{
    if (!(r > 0.0))
        fail(ErrorKind::invalid_argument, "wavefunction evaluation requires r > 0");
    const double rho = 2.0 * wf.e_star_sq * r / wf.n_star;
    return wf.norm_constant * std::pow(rho, wf.l_star) * std::exp(-0.5 * rho) *
           generalized_laguerre(wf.n_r, 2.0 * wf.l_star + 1.0, rho);
}

std::vector<double> evaluate(const RadialWavefunction& wf, std::span<const double> r_values)
{
    std::vector<double> out;
    out.reserve(r_values.size());
    for (double r : r_values)
        out.push_back(evaluate(wf, r));
    return out;
}

namespace {

struct Quadrature {
    double value = 0.0;
    bool converged = true;
};

void adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth, Quadrature& q)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) {
        q.converged = false;
        q.value += left + right;
        return;
    }
    if (std::abs(delta) <= 15.0 * tol) {
        q.value += left + right + delta / 15.0;
        return;
    }
    adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, q);
    adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, q);
}

Quadrature integrate(const std::function<double(double)>& f, double a, double b, double tol)
{
    Quadrature q;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48, q);
    return q;
}

double outer_radius(const RadialWavefunction& wf)
{
    const double rho_out = 200.0 + 40.0 * wf.n_r;
    return rho_out * wf.n_star / (2.0 * wf.e_star_sq);
}

} // namespace

double normalization_check(const RadialWavefunction& wf)
{
    const double t_max = std::sqrt(outer_radius(wf));
    // r = t^2 regularizes the r^{2 l*} endpoint: the integrand becomes
    // ~ t^{4 l* + 5}, smooth for every admissible l* > -1.
    auto f = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        const double r = t * t;
        const double rr = evaluate(wf, r);
        return 2.0 * rr * rr * t * t * t * t * t;
    };
    const Quadrature q = integrate(f, 0.0, t_max, 1e-13);
    if (!q.converged)
        fail(ErrorKind::numerical, "normalization quadrature did not converge");
    return std::abs(q.value - 1.0);
}

int node_count(const RadialWavefunction& wf)
{
    // Nodes of R are the roots of the Laguerre factor; they all lie well
    // inside rho < 4(n_r + l* + 1) + O(sqrt).
    const double beta = 2.0 * wf.l_star + 1.0;
    const double rho_max = 6.0 * (wf.n_r + 1.0) + 2.0 * std::abs(beta) + 20.0;
    const int samples = 8000;
    int changes = 0;
    int prev = 0;
    for (int i = 1; i <= samples; ++i) {
        const double rho = rho_max * i / samples;
        const double v = generalized_laguerre(wf.n_r, beta, rho);
        if (v == 0.0)
            continue;
        const int s = v > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

double radial_overlap(const RadialWavefunction& a, const RadialWavefunction& b)
{
    const double t_max = std::sqrt(std::max(outer_radius(a), outer_radius(b)));
    auto f = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        const double r = t * t;
        return 2.0 * evaluate(a, r) * evaluate(b, r) * t * t * t * t * t;
    };
    const Quadrature q = integrate(f, 0.0, t_max, 1e-13);
    if (!q.converged)
        fail(ErrorKind::numerical, "overlap quadrature did not converge");
    return q.value;
}

} // namespace pdm
