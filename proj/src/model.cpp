#include "model.hpp"

#include <cmath>
#include <string>

namespace pdm {

ModelParams make_params(double alpha, double a)
{
    if (!std::isfinite(alpha) || !std::isfinite(a))
        fail(ErrorKind::invalid_argument, "model parameters must be finite");
    if (alpha < 0.0)
        fail(ErrorKind::invalid_argument, "alpha must be non-negative, got " + std::to_string(alpha));
    return {alpha, a};
}

QuantumNumbers make_quantum_numbers(int n_r, int l, int two_j)
{
    if (n_r < 0)
        fail(ErrorKind::invalid_argument, "n_r must be non-negative");
    if (l < 0)
        fail(ErrorKind::invalid_argument, "l must be non-negative");
    if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
        fail(ErrorKind::invalid_argument,
             "two_j must be 2l+1 or 2l-1, got two_j=" + std::to_string(two_j) +
                 " for l=" + std::to_string(l));
    if (two_j == 2 * l - 1 && l == 0)
        fail(ErrorKind::invalid_argument, "j = l - 1/2 requires l >= 1");
    return {n_r, l, two_j};
}

double discriminant(const ModelParams& p, const QuantumNumbers& qn)
{
    const double jh = qn.j_plus_half();
    return jh * jh + p.a * p.a - p.alpha * p.alpha;
}

bool bound_state_condition(const ModelParams& p)
{
    return p.a < p.alpha;
}

} // namespace pdm
