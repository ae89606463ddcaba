#include "ptdirac/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ptdirac/errors.hpp"

namespace ptdirac {

namespace {

constexpr int kOrder = 15;

struct GaussRule {
    std::array<double, kOrder> node;
    std::array<double, kOrder> weight;
};

// Legendre P_n(x) and its derivative by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double pm1 = 1.0;
    double pc = x;
    for (int k = 1; k < n; ++k) {
        const double pn = ((2.0 * k + 1.0) * x * pc - k * pm1) / (k + 1.0);
        pm1 = pc;
        pc = pn;
    }
    p = pc;
    dp = n * (x * pc - pm1) / (x * x - 1.0);
}

// Nodes are the roots of P_15 found by Newton from the Chebyshev-like
// initial guesses; weights are 2/((1-x^2) P'^2). Computed once at first use
// rather than pasted in as literals.
const GaussRule& rule() {
    static const GaussRule r = [] {
        GaussRule g{};
        for (int i = 1; i <= kOrder; ++i) {
            double x = std::cos(std::numbers::pi * (i - 0.25) / (kOrder + 0.5));
            double p = 0.0, dp = 1.0;
            for (int it = 0; it < 100; ++it) {
                legendre(kOrder, x, p, dp);
                const double dx = p / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-15)
                    break;
            }
            legendre(kOrder, x, p, dp);
            g.node[i - 1] = x;
            g.weight[i - 1] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return g;
    }();
    return r;
}

double gauss15(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& g = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i)
        sum += g.weight[i] * f(mid + half * g.node[i]);
    return half * sum;
}

struct AdaptState {
    const std::function<double(double)>& f;
    double rel_tol;
    int max_depth;
    double err_sum = 0.0;
    int intervals = 0;
    bool converged = true;
};

double adapt(AdaptState& st, double a, double b, double whole, double tol,
             int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss15(st.f, a, mid);
    const double right = gauss15(st.f, mid, b);
    const double refined = left + right;
    const double delta = std::fabs(refined - whole);
    if (delta <= tol || delta <= st.rel_tol * std::fabs(refined)) {
        st.err_sum += delta;
        ++st.intervals;
        return refined;
    }
    if (depth >= st.max_depth) {
        st.err_sum += delta;
        ++st.intervals;
        st.converged = false;
        return refined;
    }
    return adapt(st, a, mid, left, 0.5 * tol, depth + 1) +
           adapt(st, mid, b, right, 0.5 * tol, depth + 1);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol, int max_depth) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integration bounds must be finite");
    if (!(rel_tol > 0.0) && !(abs_tol > 0.0))
        throw DomainError("at least one of rel_tol, abs_tol must be positive");
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    AdaptState st{f, rel_tol, max_depth};
    const double whole = gauss15(f, a, b);
    const double tol0 = std::max(abs_tol, rel_tol * std::fabs(whole));
    res.value = adapt(st, a, b, whole, tol0, 0);
    res.error_estimate = st.err_sum;
    res.intervals = st.intervals;
    res.converged = st.converged;
    return res;
}

} // namespace ptdirac
