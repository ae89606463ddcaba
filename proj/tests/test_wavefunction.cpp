#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "ptdirac/errors.hpp"
#include "ptdirac/spectrum.hpp"
#include "ptdirac/wavefunction.hpp"

using namespace ptdirac;

namespace {

SpectralPoint solved(int n_r, int ell, int dim, double alpha) {
    ModelParams p;
    p.alpha = alpha;
    return solve_level(p, QuantumNumbers::of(n_r, ell, dim));
}

SpectralPoint synthetic_ground(double eps) {
    // A hand-built point for closed-form checks that need an exact eps.
    SpectralPoint pt;
    pt.params = ModelParams{};
    pt.q = QuantumNumbers::of(0, 0, 3);
    pt.eps = eps;
    pt.energy = 3.6e-7;
    return pt;
}

} // namespace

TEST_CASE("upper component shape at frozen points") {
    const SpectralPoint g = solved(0, 0, 3, 1e-4);
    // r = 0.5/alpha, i.e. alpha r = 0.5
    CHECK(upper_shape(0.5 / 1e-4, g) ==
          doctest::Approx(0.10387570251030602).epsilon(1e-10));
    // One-node shape, first against a hand-built point whose decay exponent
    // is exact by construction, then against the solved level (whose eps
    // carries the solver's ~1e-10 relative rounding, hence the manual
    // relative check).
    SpectralPoint e;
    e.params = ModelParams{};
    e.params.alpha = 1e-4;
    e.q = QuantumNumbers::of(1, 0, 3);
    e.eps = 8.4244186725625673;
    e.energy = 7.1e-7;
    CHECK(upper_shape(0.5 / 1e-4, e) ==
          doctest::Approx(-0.003608876160809113).epsilon(1e-9));
    const SpectralPoint es = solved(1, 0, 3, 1e-4);
    CHECK(std::fabs(upper_shape(0.5 / 1e-4, es) - -0.03269746102348669) /
              0.03269746102348669 <
          1e-9);

    CHECK(upper_shape(0.0, g) == 0.0);
    CHECK(lower_G(0.0, g, 1.0) == 0.0);
    CHECK_THROWS_AS(upper_shape(-1.0, g), DomainError);

    SpectralPoint unsolved;
    CHECK_THROWS_AS(upper_shape(1.0, unsolved), DomainError);
    CHECK_THROWS_AS(lower_G(1.0, unsolved, 1.0), DomainError);
}

TEST_CASE("leading power at the origin is r^(kappa+1)") {
    for (int ell : {0, 1}) {
        const SpectralPoint pt = solved(0, ell, 3, 1e-4);
        const double kappa = pt.q.kappa();
        const double r = 1e-4 / 1e-4; // alpha r = 1e-4, deep power-law regime
        const double ratio = upper_shape(2.0 * r, pt) / upper_shape(r, pt);
        CHECK(ratio == doctest::Approx(std::pow(2.0, kappa + 1.0))
                           .epsilon(1e-5));
    }
}

TEST_CASE("normalization constants") {
    SUBCASE("node-free level: series, closed form and quadrature coincide") {
        const SpectralPoint pt = solved(0, 0, 3, 1e-4);
        const double cs = norm_constant_series(pt);
        const double cg = norm_constant_ground(pt);
        const double cq = norm_constant_quadrature(pt);
        CHECK(cs == cg); // same rounding path, bit-identical by design
        CHECK(cs == doctest::Approx(0.13264870432481794).epsilon(1e-10));
        CHECK(std::fabs(cq - cs) / cs < 1e-8);
    }
    SUBCASE("one-node level against an independently integrated value") {
        const SpectralPoint pt = solved(1, 0, 3, 1e-4);
        const double cs = norm_constant_series(pt);
        CHECK(cs == doctest::Approx(0.1758081276567293).epsilon(1e-10));
        CHECK(std::fabs(norm_constant_quadrature(pt) - cs) / cs < 1e-8);
        CHECK_THROWS_AS(norm_constant_ground(pt), DomainError);
    }
    SUBCASE("three-node level still sums stably") {
        const SpectralPoint pt = solved(3, 0, 3, 1e-4);
        const double cs = norm_constant_series(pt);
        const double cq = norm_constant_quadrature(pt);
        CHECK(std::fabs(cq - cs) / cs < 1e-8);
    }
    SUBCASE("closed form at an exact decay exponent") {
        // eps = 6 exactly: C0 = sqrt(2 alpha / B(5/2, 6))
        CHECK(norm_constant_ground(synthetic_ground(6.0)) ==
              doctest::Approx(0.13264879616867995).epsilon(1e-13));
    }
}

TEST_CASE("lower component equals the first-order relation applied to F") {
    for (int n_r : {0, 1}) {
        const SpectralPoint pt = solved(n_r, 0, 3, 1e-4);
        const double denom = pt.params.mu + pt.energy - pt.params.c1;
        const double kappa = pt.q.kappa();
        const double h = 1e-6 / pt.params.alpha;
        const double r_char = 1.0 / (pt.eps * pt.params.alpha);
        double gmax = 0.0, dmax = 0.0;
        for (int k = 1; k <= 40; ++k) {
            const double r = 0.2 * r_char * k;
            const double g = lower_G(r, pt, 1.0);
            const double fd = ((upper_shape(r + h, pt) -
                                upper_shape(r - h, pt)) / (2.0 * h) +
                               kappa * upper_shape(r, pt) / r) / denom;
            gmax = std::max(gmax, std::fabs(g));
            dmax = std::max(dmax, std::fabs(g - fd));
        }
        CHECK(dmax / gmax < 1e-6);
    }
}

TEST_CASE("equal-scalar-vector coupling makes the lower component dominant") {
    // With c1 = mu the denominator mu + E - c1 collapses to the small E,
    // so |G| >> |F|; normalization deliberately covers F alone.
    const SpectralPoint pt = solved(0, 0, 3, 1e-4);
    const double r = 0.5 / (pt.eps * pt.params.alpha);
    CHECK(std::fabs(lower_G(r, pt, 1.0)) >
          1e3 * std::fabs(upper_F(r, pt, 1.0)));
}

TEST_CASE("grid construction") {
    const SpectralPoint pt = solved(0, 0, 3, 1e-4);
    GridSpec spec;
    spec.r_max = 5.0;
    spec.count = 10;

    SUBCASE("linear: k r_max / count, no origin point") {
        spec.spacing = GridSpec::Spacing::linear;
        const RadialFunction rf = sample(pt, spec);
        REQUIRE(rf.r.size() == 10);
        CHECK(rf.r.front() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(rf.r.back() == 5.0);
    }
    SUBCASE("logarithmic: four decades up to r_max") {
        spec.spacing = GridSpec::Spacing::logarithmic;
        const RadialFunction rf = sample(pt, spec);
        REQUIRE(rf.r.size() == 10);
        CHECK(rf.r.front() == doctest::Approx(5e-4).epsilon(1e-12));
        CHECK(rf.r.back() == 5.0);
    }
    SUBCASE("hybrid: origin point, exact split, exact r_max") {
        spec.spacing = GridSpec::Spacing::hybrid;
        const RadialFunction rf = sample(pt, spec);
        REQUIRE(rf.r.size() == 10);
        CHECK(rf.r.front() == 0.0);
        // split = min(1/alpha, r_max/2) = 2.5 here, at index (count-1)/2
        CHECK(rf.r[4] == 2.5);
        CHECK(rf.r.back() == 5.0);
    }
    SUBCASE("grids are strictly increasing") {
        for (auto spacing : {GridSpec::Spacing::linear,
                             GridSpec::Spacing::logarithmic,
                             GridSpec::Spacing::hybrid}) {
            spec.spacing = spacing;
            spec.count = 101;
            const RadialFunction rf = sample(pt, spec);
            for (std::size_t i = 1; i < rf.r.size(); ++i)
                CHECK(rf.r[i] > rf.r[i - 1]);
        }
    }
    SUBCASE("default outer radius is 30 decay lengths") {
        GridSpec def;
        const RadialFunction rf = sample(pt, def);
        REQUIRE(rf.r.size() == 4096);
        CHECK(rf.r.back() == default_r_max(pt));
        CHECK(default_r_max(pt) == 30.0 / (pt.eps * 1e-4));
    }
    SUBCASE("degenerate counts are rejected") {
        spec.count = 1;
        CHECK_THROWS_AS(sample(pt, spec), DomainError);
    }
}

TEST_CASE("sampled solutions are normalized and have the right node count") {
    struct Cell {
        int n_r, ell, dim;
    };
    for (const Cell c : {Cell{0, 0, 3}, Cell{1, 0, 3}, Cell{2, 0, 3},
                         Cell{1, 1, 4}}) {
        const SpectralPoint pt = solved(c.n_r, c.ell, c.dim, 1e-4);
        const RadialFunction rf = sample(pt, GridSpec{});
        CHECK(count_nodes(rf) == c.n_r);
        CHECK(trapezoid_norm(rf) == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(rf.norm_method == NormMethod::series);
    }
}

TEST_CASE("node-free tail decays below 1e-10 of the peak inside the window") {
    const SpectralPoint pt = solved(0, 0, 3, 1e-4);
    const RadialFunction rf = sample(pt, GridSpec{});
    const double peak =
        *std::max_element(rf.F.begin(), rf.F.end(),
                          [](double a, double b) {
                              return std::fabs(a) < std::fabs(b);
                          });
    CHECK(std::fabs(rf.F.back()) <= 1e-10 * std::fabs(peak));
}

TEST_CASE("explicit normalization methods are honored") {
    const SpectralPoint pt = solved(0, 0, 3, 1e-4);
    const RadialFunction rq = sample(pt, GridSpec{}, NormMethod::quadrature);
    CHECK(rq.norm_method == NormMethod::quadrature);
    const RadialFunction rg =
        sample(pt, GridSpec{}, NormMethod::ground_closed_form);
    CHECK(rg.norm_method == NormMethod::ground_closed_form);
    CHECK(rg.norm_constant == norm_constant_ground(pt));

    const SpectralPoint excited = solved(1, 0, 3, 1e-4);
    CHECK_THROWS_AS(sample(excited, GridSpec{},
                           NormMethod::ground_closed_form),
                    DomainError);
}

TEST_CASE("optional rescale to a unit two-component norm") {
    const SpectralPoint pt = solved(0, 0, 3, 1e-4);
    const RadialFunction rf =
        sample(pt, GridSpec{}, NormMethod::series, true);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < rf.r.size(); ++i) {
        const double a = rf.F[i] * rf.F[i] + rf.G[i] * rf.G[i];
        const double b =
            rf.F[i + 1] * rf.F[i + 1] + rf.G[i + 1] * rf.G[i + 1];
        total += 0.5 * (a + b) * (rf.r[i + 1] - rf.r[i]);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    // Under the collapsed denominator the G content dominates, so the upper
    // component alone carries almost none of the rescaled norm.
    CHECK(trapezoid_norm(rf) < 1e-3);
}

TEST_CASE("node counting skips exact zeros") {
    RadialFunction rf;
    rf.r = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    rf.F = {1.0, 0.0, -1.0, 0.0, -2.0, 3.0};
    rf.G.assign(6, 0.0);
    CHECK(count_nodes(rf) == 2);
    rf.F = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
    CHECK(count_nodes(rf) == 0);
}
