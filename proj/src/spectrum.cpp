#include "ptdirac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ptdirac/errors.hpp"
#include "ptdirac/kernels.hpp"

namespace ptdirac {

namespace {

// All level-condition evaluations go through the batched kernel, including
// single energies, so scan, refinement and API calls are bit-identical.
double h_of(double E, const ModelParams& p, const QuantumNumbers& q) {
    double out = 0.0;
    kernels::residual_batch(&E, 1, p.mu, p.c1, p.v0 + p.s0, p.alpha,
                            q.m_index(), &out);
    return out;
}

void check_unsquared_domain(double E, const ModelParams& p) {
    const double t1 = p.mu - E;
    const double t2 = (E + p.mu) - p.c1;
    if (t1 * t2 < 0.0)
        throw DomainError("energy outside the bound-state window");
    const double w = p.v0 + p.s0;
    if (1.0 + 4.0 * w * t2 / (p.alpha * p.alpha) < 0.0)
        throw DomainError("negative square-root argument in the level "
                          "condition");
}

} // namespace

double residual_squared(double E, const ModelParams& p,
                        const QuantumNumbers& q) {
    p.validate();
    const double a = p.alpha;
    const double w = p.v0 + p.s0;
    const double t2 = (E + p.mu) - p.c1;
    const double arg = a * a + 4.0 * w * t2;
    if (arg < 0.0)
        throw DomainError("negative square-root argument in the squared "
                          "level condition");
    const double bracket = double(q.m_index()) - std::sqrt(arg) / a;
    return (p.mu - E) * t2 - (a * a / 4.0) * bracket * bracket;
}

double residual_unsquared(double E, const ModelParams& p,
                          const QuantumNumbers& q) {
    p.validate();
    check_unsquared_domain(E, p);
    return h_of(E, p, q);
}

ExistenceReport existence(const ModelParams& p, const QuantumNumbers& q) {
    p.validate();
    if (!(p.c1 - p.mu < p.mu))
        throw DomainError("empty energy window: c1 - mu >= mu");
    const double w = p.v0 + p.s0;
    const double delta_top = w * (2.0 * p.mu - p.c1) / (p.alpha * p.alpha);
    ExistenceReport rep;
    rep.margin = std::sqrt(1.0 + 4.0 * delta_top) - double(q.m_index());
    rep.exists = rep.margin > 0.0;
    std::ostringstream os;
    if (rep.exists)
        os << "bound state admitted: sqrt(1+4 delta(mu)) exceeds M=" << q.m_index()
           << " by " << rep.margin;
    else
        os << "well too shallow for M=" << q.m_index()
           << ": sqrt(1+4 delta(mu)) - M = " << rep.margin;
    rep.reason = os.str();
    return rep;
}

SpectralPoint solve_level(const ModelParams& p, const QuantumNumbers& q,
                          double tol) {
    p.validate();
    if (!(tol > 0.0))
        throw DomainError("solver tolerance must be positive");
    const double lo = p.c1 - p.mu;
    const double hi = p.mu;
    if (!(lo < hi))
        throw DomainError("empty energy window: c1 - mu >= mu");

    // Fixed 4096-subinterval sign scan of the window.
    constexpr int kScan = 4096;
    std::vector<double> e(kScan + 1), h(kScan + 1);
    for (int k = 0; k <= kScan; ++k)
        e[k] = lo + (hi - lo) * (double(k) / kScan);
    e[kScan] = hi;
    kernels::residual_batch(e.data(), kScan + 1, p.mu, p.c1, p.v0 + p.s0,
                            p.alpha, q.m_index(), h.data());

    int first = -1;
    int sign_changes = 0;
    for (int k = 0; k < kScan; ++k) {
        if ((h[k] > 0.0 && h[k + 1] <= 0.0) || (h[k] < 0.0 && h[k + 1] >= 0.0) ||
            (h[k] == 0.0 && h[k + 1] != 0.0)) {
            ++sign_changes;
            if (first < 0)
                first = k;
        }
    }
    if (first < 0) {
        ExistenceReport rep = existence(p, q);
        throw NoBoundState("no sign change of the level condition in the "
                           "energy window; " + rep.reason, rep);
    }

    // Safeguarded refinement: secant proposals, falling back to bisection
    // whenever the proposal leaves the central 98% of the bracket, and a
    // forced bisection every other step so the bracket provably shrinks.
    double a = e[first], b = e[first + 1];
    double fa = h[first], fb = h[first + 1];
    int iters = 0;
    for (; iters < 256; ++iters) {
        if (fa == 0.0) { // grid point hit the root exactly
            b = a;
            fb = 0.0;
            break;
        }
        const double width = b - a;
        if (width <= tol * std::max(std::fabs(a), std::fabs(b)) ||
            width < 1e-300)
            break;
        double x;
        if (iters % 2 == 0 && fb != fa) {
            x = (a * fb - b * fa) / (fb - fa);
            const double guard = 0.01 * width;
            if (!(x > a + guard && x < b - guard))
                x = a + 0.5 * width;
        } else {
            x = a + 0.5 * width;
        }
        const double fx = h_of(x, p, q);
        if (fx == 0.0) {
            a = b = x;
            fa = fb = 0.0;
            break;
        }
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    const double root = (std::fabs(fa) <= std::fabs(fb)) ? a : b;

    SpectralPoint pt;
    pt.params = p;
    pt.q = q;
    pt.energy = root;
    const DimensionlessState st = dimensionless_of(root, p, q);
    pt.eps = st.eps;
    pt.delta = st.delta;
    pt.bracket_lo = a;
    pt.bracket_hi = b;
    pt.residual_at_root = h_of(root, p, q);
    pt.iterations = iters;
    pt.extra_sign_changes = sign_changes - 1;
    return pt;
}

double limiting_energy(int m_index, const ModelParams& p) {
    p.validate();
    if (p.c1 != p.mu)
        throw DomainError("limiting closed form requires c1 = mu");
    if (m_index < 1)
        throw DomainError("m_index must be >= 1");
    const double w = p.v0 + p.s0;
    const double qa = 4.0 * (p.mu - w);
    const double qb = 4.0 * m_index * std::sqrt(p.mu);
    const double qc = double(m_index) * m_index - 1.0;

    auto no_root = [&](const char* why) {
        ExistenceReport rep;
        rep.exists = false;
        rep.margin = 0.0;
        rep.reason = std::string("limiting quadratic has no nonnegative root: ") + why;
        return NoBoundState(rep.reason, rep);
    };

    double x; // sqrt(u)
    if (qa == 0.0) {
        x = -qc / qb;
        if (x < 0.0)
            throw no_root("linear case with negative solution");
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0)
            throw no_root("negative discriminant");
        const double sq = std::sqrt(disc);
        const double x1 = (-qb + sq) / (2.0 * qa);
        const double x2 = (-qb - sq) / (2.0 * qa);
        x = std::max(x1, x2);
        if (x < 0.0)
            throw no_root("both roots negative");
    }
    const double u = x * x;
    return u * p.alpha * p.alpha;
}

std::vector<GridRow> spectrum_grid(const ModelParams& base,
                                   const std::vector<int>& dims,
                                   const std::vector<int>& n_values,
                                   const std::vector<double>& alphas) {
    base.validate();
    if (dims.empty() || n_values.empty() || alphas.empty())
        throw DomainError("spectrum grid ranges must be nonempty");
    std::vector<GridRow> rows;
    rows.reserve(dims.size() * n_values.size() * alphas.size());
    for (int d : dims) {
        for (int n : n_values) {
            if (n < 1)
                throw DomainError("principal quantum number must be >= 1");
            const int ell = (n - 1) % 2;
            const int n_r = (n - 1 - ell) / 2;
            const QuantumNumbers q = QuantumNumbers::of(n_r, ell, d);
            for (double alpha : alphas) {
                ModelParams p = base;
                p.alpha = alpha;
                GridRow row;
                row.dim = d;
                row.n = n;
                row.alpha = alpha;
                try {
                    row.point = solve_level(p, q);
                } catch (const NoBoundState& nb) {
                    row.failure = nb.report;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace ptdirac
