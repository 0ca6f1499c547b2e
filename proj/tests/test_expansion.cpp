#include "expansion.hpp"

#include "spectrum.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace pdm;

TEST_CASE("input validation")
{
    const QuantumNumbers gs = make_quantum_numbers(0, 0, 1);
    CHECK_THROWS_AS(make_expansion_input(0.1, 1.5, gs), Error); // abar must not exceed 1
    CHECK_THROWS_AS(make_expansion_input(-0.1, 0.0, gs), Error);
    CHECK_NOTHROW(make_expansion_input(0.1, 1.0, gs)); // abar = 1 fixed point is admitted
    CHECK_NOTHROW(make_expansion_input(0.1, -3.0, gs));
}

TEST_CASE("expansion examples")
{
    const QuantumNumbers gs = make_quantum_numbers(0, 0, 1);
    const double alpha = 0.0072973525693;
    // abar = 0 is the familiar fine-structure expansion 1 - a^2/2 - a^4/8
    CHECK(energy_expansion(make_expansion_input(alpha, 0.0, gs)) ==
          doctest::Approx(1.0 - alpha * alpha / 2.0 - std::pow(alpha, 4) / 8.0)
              .epsilon(1e-16));
    // abar = 1: both correction factors vanish
    CHECK(energy_expansion(make_expansion_input(0.3, 1.0, gs)) == 1.0);
    CHECK(energy_expansion(make_expansion_input(0.3, 1.0, make_quantum_numbers(2, 1, 3))) ==
          1.0);
    // frozen by term-by-term high-precision evaluation
    CHECK(energy_expansion(make_expansion_input(0.1, 0.5, make_quantum_numbers(1, 0, 1))) ==
          doctest::Approx(0.999686669921875).epsilon(1e-15));
}

TEST_CASE("rest energy estimate examples")
{
    CHECK(rest_energy_estimate(make_expansion_input(0.1, 0.0, make_quantum_numbers(0, 0, 1))) ==
          doctest::Approx(1.0 - 0.005).epsilon(1e-16));
    CHECK(rest_energy_estimate(make_expansion_input(0.1, 0.5, make_quantum_numbers(0, 0, 1))) ==
          1.0); // the linear term cancels at abar = 1/2
    CHECK(rest_energy_estimate(make_expansion_input(0.1, 0.2, make_quantum_numbers(1, 0, 1))) ==
          doctest::Approx(0.99925).epsilon(1e-15));
}

TEST_CASE("residual order probe shows the alpha^6 truncation")
{
    const std::array<double, 2> alphas{0.02, 0.01};
    for (double abar : {0.0, 0.3})
        for (auto qn : {make_quantum_numbers(0, 0, 1), make_quantum_numbers(1, 0, 1)}) {
            const auto res = residual_order_probe(abar, qn, alphas);
            REQUIRE(res.size() == 2);
            const double ratio = res[0].second / res[1].second;
            CHECK(ratio > 64.0 * 0.8);
            CHECK(ratio < 64.0 * 1.2);
        }
    // abar = 1: exact and expansion are both 1 for every alpha
    const auto flat = residual_order_probe(1.0, make_quantum_numbers(0, 0, 1), alphas);
    for (const auto& [alpha, r] : flat)
        CHECK(r < 1e-15);
}

TEST_CASE("linearization consistency is quadratic in abar")
{
    const QuantumNumbers gs = make_quantum_numbers(0, 0, 1);
    CHECK(linearization_consistency(0.0, gs, 0.1) == 0.0);
    // closed form: difference = (alpha^2/2n^2) abar^2
    CHECK(linearization_consistency(0.01, gs, 0.1) == doctest::Approx(5e-7).epsilon(1e-10));
    CHECK(linearization_consistency(0.05, make_quantum_numbers(1, 0, 1), 0.1) ==
          doctest::Approx(3.125e-6).epsilon(1e-10));
    // bounded ratio as abar -> 0; the difference itself shrinks to ~1e-10
    // where 1-ulp cancellation noise enters, hence the relaxed tolerance
    for (double abar : {1e-2, 1e-3, 1e-4}) {
        const double d = linearization_consistency(abar, gs, 0.2);
        CHECK(d / (abar * abar) == doctest::Approx(0.02).epsilon(1e-4));
    }
}

TEST_CASE("alpha^2 term equals the Bohr term with mass m(1-abar)^2")
{
    // energy_expansion is exactly c2 alpha^2 + c4 alpha^4 below 1; the
    // two-point Richardson combination recovers c2 without truncation
    // error, so only roundoff remains.
    for (double abar : {-0.5, 0.0, 0.2, 0.5, 0.9})
        for (auto qn : {make_quantum_numbers(0, 0, 1), make_quantum_numbers(1, 1, 3)}) {
            auto deficit = [&](double alpha) {
                return 1.0 - energy_expansion(make_expansion_input(alpha, abar, qn));
            };
            const double a1 = 0.25, a2 = 0.5;
            const double g1 = deficit(a1) / (a1 * a1), g2 = deficit(a2) / (a2 * a2);
            const double c2 = (4.0 * g1 - g2) / 3.0;
            const double n = qn.principal();
            const double bohr_renorm = (1.0 - abar) * (1.0 - abar) / (2.0 * n * n);
            CHECK(std::abs(c2 - bohr_renorm) <= 1e-14 * std::max(1.0, bohr_renorm));
        }
}

TEST_CASE("expansion tracks the exact energy to O(alpha^6)")
{
    // |exact - expansion| <= C alpha^6 along a decreasing alpha sequence
    for (double abar : {0.0, 0.4}) {
        const QuantumNumbers qn = make_quantum_numbers(0, 0, 1);
        double c_prev = 0.0;
        for (double alpha : {0.04, 0.02, 0.01}) {
            const auto r = residual_order_probe(abar, qn, std::array<double, 1>{alpha});
            const double c = r[0].second / std::pow(alpha, 6);
            if (c_prev != 0.0)
                CHECK(std::abs(c - c_prev) / c_prev < 0.05); // stable constant
            c_prev = c;
        }
    }
}
