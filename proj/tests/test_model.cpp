#include "model.hpp"

#include <doctest.h>

#include <cmath>

using namespace pdm;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_params(-0.1, 0.0), Error);
    CHECK_THROWS_AS(make_params(std::nan(""), 0.0), Error);
    CHECK_NOTHROW(make_params(0.0, -5.0)); // negative a is allowed
    CHECK_NOTHROW(make_params(0.0073, 2.0));
}

TEST_CASE("quantum number construction")
{
    const QuantumNumbers up = make_quantum_numbers(0, 0, 1);
    CHECK(up.upper_branch());
    CHECK(up.j_plus_half() == 1.0);

    const QuantumNumbers lo = make_quantum_numbers(2, 1, 1);
    CHECK_FALSE(lo.upper_branch());
    CHECK(lo.j_plus_half() == 1.0);
    CHECK(lo.principal() == 4);

    CHECK_THROWS_AS(make_quantum_numbers(0, 0, -1), Error); // j = l - 1/2 needs l >= 1
    CHECK_THROWS_AS(make_quantum_numbers(0, 1, 5), Error);  // two_j must be 2l +- 1
    CHECK_THROWS_AS(make_quantum_numbers(-1, 0, 1), Error);
    CHECK_THROWS_AS(make_quantum_numbers(0, -1, -1), Error);
}

TEST_CASE("discriminant examples")
{
    CHECK(discriminant(make_params(0.0, 0.0), make_quantum_numbers(0, 0, 1)) == 1.0);
    CHECK(discriminant(make_params(0.5, 0.0), make_quantum_numbers(0, 0, 1)) == 0.75);
    CHECK(discriminant(make_params(0.1, -0.2), make_quantum_numbers(0, 1, 3)) ==
          doctest::Approx(4.03).epsilon(1e-14));
}

TEST_CASE("discriminant monotone in |a| and alpha^2")
{
    const QuantumNumbers qn = make_quantum_numbers(0, 0, 1);
    double prev = discriminant(make_params(0.3, 0.0), qn);
    for (double a : {0.1, 0.2, 0.5, 1.0, 2.0}) {
        const double up = discriminant(make_params(0.3, a), qn);
        const double dn = discriminant(make_params(0.3, -a), qn);
        CHECK(up == dn); // depends on a^2 only
        CHECK(up > prev);
        prev = up;
    }
    prev = discriminant(make_params(0.0, 0.1), qn);
    for (double alpha : {0.1, 0.3, 0.6, 0.9}) {
        const double d = discriminant(make_params(alpha, 0.1), qn);
        CHECK(d < prev + 1e-18);
        prev = d;
    }
}

TEST_CASE("bound state condition")
{
    CHECK(bound_state_condition(make_params(0.0073, -5.0)));
    CHECK_FALSE(bound_state_condition(make_params(0.0073, 0.0073))); // boundary level
    CHECK_FALSE(bound_state_condition(make_params(0.0, 0.1)));
    CHECK(bound_state_condition(make_params(0.0, -1e-12))); // a < 0 binds without Coulomb
    CHECK_FALSE(bound_state_condition(make_params(0.0, 0.0)));
}
