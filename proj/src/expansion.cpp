#include "expansion.hpp"

#include "spectrum.hpp"

#include <cmath>

namespace pdm {

ExpansionInput make_expansion_input(double alpha, double a_bar, const QuantumNumbers& qn)
{
    if (!std::isfinite(alpha) || alpha < 0.0)
        fail(ErrorKind::invalid_argument, "alpha must be finite and non-negative");
    if (!(a_bar <= 1.0))
        fail(ErrorKind::invalid_argument, "abar must not exceed 1");
    return {alpha, a_bar, qn};
}

double energy_expansion(const ExpansionInput& in)
{
    const double n = in.n();
    const double jh = in.qn.j_plus_half();
    const double ab = in.a_bar;
    const double a2 = in.alpha * in.alpha;
    const double one_minus = 1.0 - ab;
    const double bohr = a2 / (2.0 * n * n) * one_minus * one_minus;
    const double fine = a2 * a2 / (2.0 * n * n * n * n) * one_minus * one_minus * one_minus *
                        (n * (1.0 + ab) / jh - 0.75 * (1.0 + ab / 3.0));
    return 1.0 - bohr - fine;
}

double rest_energy_estimate(const ExpansionInput& in)
{
    const double n = in.n();
    return 1.0 - in.alpha * in.alpha / (2.0 * n * n) * (1.0 - 2.0 * in.a_bar);
}

namespace {

// Deficit 1 - eps of the closed form, in extended precision and with the
// sqrt(1+x)-1 cancellations rewritten: the residual against the expansion
// can sit near 1e-17, far below double rounding on eps itself.
long double exact_deficit(double alpha, double a_bar, const QuantumNumbers& qn)
{
    const long double al = alpha;
    const long double a = static_cast<long double>(a_bar) * al;
    const long double jh = qn.j_plus_half();
    const long double y = (a * a - al * al) / (jh * jh);
    const long double sqrt1y = sqrtl(1.0L + y);
    // l* + 1 for the branch shift used by make_quantum_numbers states
    const long double shift = qn.upper_branch() ? 1.0L : 0.0L;
    const long double ns = qn.n_r + jh * sqrt1y - shift + 1.0L;
    const long double x = (al * al - a * a) / (ns * ns);
    const long double sx = x / (1.0L + sqrtl(1.0L + x)); // sqrt(1+x) - 1
    const long double g = al * al / (ns * ns);
    // 1 - eps = [g - a*al/ns^2 - sx] / (1 + g)
    return (g - a * al / (ns * ns) - sx) / (1.0L + g);
}

} // namespace

std::vector<std::pair<double, double>>
residual_order_probe(double a_bar, const QuantumNumbers& qn, std::span<const double> alphas)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(alphas.size());
    for (double alpha : alphas) {
        const ExpansionInput in = make_expansion_input(alpha, a_bar, qn);
        (void)energy_exact(make_params(alpha, a_bar * alpha), qn); // shared validation
        // expansion deficit, term-by-term (1 - eps would round at 1e-16)
        const long double n = in.n();
        const long double jh = in.qn.j_plus_half();
        const long double ab = in.a_bar;
        const long double a2 = static_cast<long double>(in.alpha) * in.alpha;
        const long double om = 1.0L - ab;
        const long double bohr = a2 / (2.0L * n * n) * om * om;
        const long double fine = a2 * a2 / (2.0L * n * n * n * n) * om * om * om *
                                 (n * (1.0L + ab) / jh - 0.75L * (1.0L + ab / 3.0L));
        const long double res = exact_deficit(alpha, a_bar, qn) - (bohr + fine);
        out.emplace_back(alpha, static_cast<double>(fabsl(res)));
    }
    return out;
}

double linearization_consistency(double a_bar, const QuantumNumbers& qn, double alpha)
{
    const ExpansionInput in = make_expansion_input(alpha, a_bar, qn);
    const double n = in.n();
    const double one_minus = 1.0 - a_bar;
    const double truncated = 1.0 - alpha * alpha / (2.0 * n * n) * one_minus * one_minus;
    return std::abs(rest_energy_estimate(in) - truncated);
}

} // namespace pdm
