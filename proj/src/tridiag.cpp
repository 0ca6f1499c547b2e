#include "tridiag.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pdm {

int sturm_count(const Tridiag& t, double lambda)
{
    const std::size_t n = t.diag.size();
    int count = 0;
    double d = 1.0;
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (std::size_t i = 0; i < n; ++i) {
        const double off2 = (i == 0) ? 0.0 : t.off[i - 1] * t.off[i - 1];
        d = t.diag[i] - lambda - off2 / d;
        if (d == 0.0)
            d = -tiny;
        if (d < 0.0)
            ++count;
    }
    return count;
}

namespace {

std::pair<double, double> gershgorin_bounds(const Tridiag& t)
{
    const std::size_t n = t.diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    return {lo, hi};
}

} // namespace

double tridiag_eigenvalue(const Tridiag& t, int k)
{
    const int n = static_cast<int>(t.diag.size());
    if (k < 0 || k >= n)
        fail(ErrorKind::invalid_argument, "eigenvalue index out of range");
    auto [lo, hi] = gershgorin_bounds(t);
    // Bisect to eigenvalue-relative precision: small eigenvalues of
    // badly scaled matrices (norm ~ 1/h^2) would be lost under a
    // norm-relative stopping rule.
    const double eps = std::numeric_limits<double>::epsilon();
    while (hi - lo > 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (sturm_count(t, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_eigenvalues(const Tridiag& t, int k0, int k1)
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k1 - k0 + 1));
    for (int k = k0; k <= k1; ++k)
        out.push_back(tridiag_eigenvalue(t, k));
    return out;
}

namespace {

// One pass of (T - lambda I) x = b with partial pivoting (band LU keeps
// two superdiagonals).
void shifted_solve(const Tridiag& t, double lambda, std::vector<double>& x)
{
    const std::size_t n = t.diag.size();
    std::vector<double> d(n), du(n > 0 ? n - 1 : 0), du2(n > 1 ? n - 2 : 0, 0.0),
        dl(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = t.diag[i] - lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        du[i] = t.off[i];
        dl[i] = t.off[i];
    }
    std::vector<int> piv(n, 0);
    const double tiny = 1e-300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny)
                d[i] = tiny;
            const double m = dl[i] / d[i];
            d[i + 1] -= m * du[i];
            dl[i] = m;
        } else {
            piv[i] = 1;
            const double m = d[i] / dl[i];
            d[i] = dl[i];
            const double tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - m * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -m * du[i + 1];
            }
            dl[i] = m;
        }
    }
    if (std::abs(d[n - 1]) < tiny)
        d[n - 1] = tiny;
    // forward substitution with recorded pivots
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (piv[i])
            std::swap(x[i], x[i + 1]);
        x[i + 1] -= dl[i] * x[i];
    }
    // back substitution
    x[n - 1] /= d[n - 1];
    if (n >= 2)
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t ii = n; ii >= 3; --ii) {
        const std::size_t i = ii - 3;
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
}

} // namespace

std::vector<double> tridiag_eigenvector(const Tridiag& t, double lambda)
{
    const std::size_t n = t.diag.size();
    std::vector<double> x(n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
    for (int iter = 0; iter < 4; ++iter) {
        shifted_solve(t, lambda, x);
        double norm = 0.0;
        for (double v : x)
            norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            fail(ErrorKind::numerical, "inverse iteration failed");
        for (double& v : x)
            v /= norm;
    }
    return x;
}

int count_sign_changes(const std::vector<double>& v, double negligible)
{
    double maxabs = 0.0;
    for (double x : v)
        maxabs = std::max(maxabs, std::abs(x));
    const double cut = negligible * maxabs;
    int changes = 0;
    int prev = 0;
    for (double x : v) {
        if (std::abs(x) <= cut)
            continue;
        const int s = x > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

} // namespace pdm
