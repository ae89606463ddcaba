#include <cmath>

#include "doctest.h"

#include "ptdirac/errors.hpp"
#include "ptdirac/model.hpp"

using namespace ptdirac;

TEST_CASE("parameter validation rejects unphysical inputs") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());

    ModelParams bad = p;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.alpha = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.mu = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.v0 = -0.5;
    bad.s0 = 0.5; // combined well depth v0+s0 = 0: nothing to bind
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = p;
    bad.mu = std::nan("");
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("angular factor is stored exactly as an integer twice its value") {
    // (2*ell + dim - 1) / 2 in halves, so dim parity decides integer vs
    // half-integer values.
    CHECK(twice_kappa_from(0, 3) == 2);  // kappa = 1
    CHECK(twice_kappa_from(1, 3) == 4);  // kappa = 2
    CHECK(twice_kappa_from(0, 4) == 3);  // kappa = 3/2
    CHECK(twice_kappa_from(0, 5) == 4);  // kappa = 2
    CHECK(twice_kappa_from(2, 5) == 8);  // kappa = 4
    CHECK(twice_kappa_from(1, 2) == 3);  // kappa = 3/2

    CHECK(kappa_from(0, 3) == 1.0);
    CHECK(kappa_from(0, 4) == 1.5);

    CHECK_THROWS_AS(twice_kappa_from(-1, 3), DomainError);
    CHECK_THROWS_AS(twice_kappa_from(0, 1), DomainError);
}

TEST_CASE("quantum number bookkeeping") {
    const QuantumNumbers q = QuantumNumbers::of(1, 1, 3);
    CHECK(q.n() == 4);          // n = 2 n_r + ell + 1
    CHECK(q.m_index() == 11);   // M = 2 n + dim
    CHECK(q.kappa() == 2.0);
    CHECK(q.gamma() == 6.0); // kappa (kappa + 1)

    const QuantumNumbers g = QuantumNumbers::of(0, 0, 4);
    CHECK(g.m_index() == 6);
    // half-integer kappa: gamma = 1.5 * 2.5
    CHECK(g.gamma() == 3.75);

    CHECK_THROWS_AS(QuantumNumbers::of(-1, 0, 3), DomainError);
}

TEST_CASE("potential pair under the equal-well constraint") {
    ModelParams p; // mu = v0 = s0 = c1 = 1, alpha = 1e-4
    SUBCASE("at the origin the combined well is at full depth") {
        const auto [diff, sum] = delta_sigma_at(0.0, p);
        CHECK(diff == 0.0); // s0 - v0 = 0
        CHECK(sum == -2.0);  // -(v0 + s0)
    }
    SUBCASE("the well decays like sech^2") {
        const double r = 5000.0; // alpha r = 0.5
        const auto [diff, sum] = delta_sigma_at(r, p);
        const double sech2 = 1.0 / std::pow(std::cosh(0.5), 2);
        CHECK(diff == 0.0);
        CHECK(sum == doctest::Approx(-2.0 * sech2).epsilon(1e-15));
    }
    SUBCASE("unequal wells split the two combinations") {
        ModelParams u = p;
        u.v0 = 2.0;
        u.s0 = 0.5;
        const auto [diff, sum] = delta_sigma_at(0.0, u);
        CHECK(diff == -1.5);
        CHECK(sum == -2.5);
    }
    CHECK_THROWS_AS(delta_sigma_at(-1.0, p), DomainError);
}

TEST_CASE("centrifugal term and its smooth-well approximation") {
    const double alpha = 0.1;
    SUBCASE("at small alpha r the two forms agree to leading order") {
        const auto [exact, approx] = centrifugal_pair(0.01, alpha);
        CHECK(exact == doctest::Approx(1.0e4).epsilon(1e-15));
        // alpha^2 / sinh^2(alpha r) = 1/r^2 (1 - (alpha r)^2/3 + ...)
        CHECK(approx == doctest::Approx(1.0e4 * (1.0 - 1e-6 / 3.0))
                            .epsilon(1e-10));
    }
    SUBCASE("at large alpha r the approximation decays exponentially") {
        const auto [exact, approx] = centrifugal_pair(100.0, alpha);
        CHECK(exact == doctest::Approx(1e-4).epsilon(1e-15));
        CHECK(approx < 1e-7);
    }
    CHECK_THROWS_AS(centrifugal_pair(0.0, alpha), DomainError);
}

TEST_CASE("dimensionless state for the reference parameter point") {
    // mu = v0 = s0 = c1 = 1, alpha = 1e-4, at the frozen ground level.
    ModelParams p;
    const QuantumNumbers q = QuantumNumbers::of(0, 0, 3);
    const double e = 3.5999968525759527e-7;
    const DimensionlessState st = dimensionless_of(e, p, q);
    // The kernel evaluates mu + E - c1 as written, so for c1 = mu the value
    // carries the rounding of (E + 1) - 1, a relative noise of about
    // ulp(1)/E ~ 3e-10 here. Reference values are exact roots.
    CHECK(std::fabs(st.eps - 5.999996297147373) / 6.0 < 1e-9);
    CHECK(std::fabs(st.delta - 71.99993705151905) / 72.0 < 1e-9);
    CHECK(st.energy == e);
}

TEST_CASE("dimensionless map rejects energies outside the window") {
    ModelParams p; // window is (c1 - mu, mu) = (0, 1)
    const QuantumNumbers q = QuantumNumbers::of(0, 0, 3);
    CHECK_THROWS_WITH_AS(dimensionless_of(1.5, p, q),
                         doctest::Contains("above the window"), DomainError);
    CHECK_THROWS_WITH_AS(dimensionless_of(-0.5, p, q),
                         doctest::Contains("below the window"), DomainError);
    ModelParams shifted = p;
    shifted.c1 = 0.25; // window now (-0.75, 1)
    CHECK_NOTHROW(dimensionless_of(-0.5, shifted, q));
    CHECK_THROWS_AS(dimensionless_of(-0.8, shifted, q), DomainError);
}

TEST_CASE("window endpoints map to a vanishing decay rate") {
    ModelParams p;
    const QuantumNumbers q = QuantumNumbers::of(0, 0, 3);
    const DimensionlessState top = dimensionless_of(1.0, p, q);
    CHECK(top.eps == 0.0);
    const DimensionlessState bottom = dimensionless_of(0.0, p, q);
    CHECK(bottom.eps == 0.0); // c1 = mu makes both edges degenerate at eps=0
}
