#include "ptdirac/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>
#include <vector>

#include "ptdirac/errors.hpp"
#include "ptdirac/kernels.hpp"

namespace ptdirac {

namespace {

void check_config(const OracleConfig& cfg) {
    if (!(cfg.x_min > 0.0))
        throw DomainError("oracle x_min must be positive");
    if (cfg.x_max > 0.0 && !(cfg.x_max > cfg.x_min))
        throw DomainError("oracle x_max must exceed x_min");
    if (cfg.points < 100)
        throw DomainError("oracle needs at least 100 interior points");
    if (cfg.refine_levels < 0)
        throw DomainError("refine_levels must be >= 0");
    if (!(cfg.tol_energy > 0.0))
        throw DomainError("tol_energy must be positive");
}

// Energy-independent parts of the discretized operator: base diagonal
// (kinetic + centrifugal) and the well profile it is scaled against.
struct PotentialTables {
    std::vector<double> base;
    std::vector<double> sech2;
    double off = 0.0;    // off-diagonal value, -1/h^2
    double off_sq = 0.0;
    double h = 0.0;
    double pivmin = 0.0;
};

PotentialTables make_tables(double gamma, CentrifugalKind kind, double x_min,
                            double x_max, int points) {
    PotentialTables t;
    t.h = (x_max - x_min) / (points + 1);
    const double inv_h2 = 1.0 / (t.h * t.h);
    t.off = -inv_h2;
    t.off_sq = inv_h2 * inv_h2;
    t.pivmin = DBL_MIN * std::max(1.0, t.off_sq);
    t.base.resize(points);
    t.sech2.resize(points);
    for (int i = 0; i < points; ++i) {
        const double x = x_min + (i + 1) * t.h;
        double centrifugal;
        if (kind == CentrifugalKind::sinh_approx) {
            const double sh = std::sinh(x);
            centrifugal = gamma / (sh * sh);
        } else {
            centrifugal = gamma / (x * x);
        }
        t.base[i] = 2.0 * inv_h2 + centrifugal;
        const double ch = std::cosh(x);
        t.sech2[i] = 1.0 / (ch * ch);
    }
    return t;
}

double eps2_of(double E, const ModelParams& p) {
    return ((p.mu - E) * ((E + p.mu) - p.c1)) / (p.alpha * p.alpha);
}

double delta_of(double E, const ModelParams& p) {
    return (p.v0 + p.s0) * ((E + p.mu) - p.c1) / (p.alpha * p.alpha);
}

// One fixed-grid solve of the self-consistency condition
// lambda_{n_r}(E) = -eps^2(E). The sign of the mismatch at a trial energy is
// one exact Sturm count at shift -eps^2(E): count >= n_r+1 iff the (n_r+1)-th
// eigenvalue already lies below the required value.
double solve_once(const ModelParams& p, const QuantumNumbers& q, double gamma,
                  CentrifugalKind kind, double x_min, double x_max, int points,
                  double tol_rel) {
    const double lo = p.c1 - p.mu;
    const double hi = p.mu;
    if (!(lo < hi))
        throw DomainError("empty energy window: c1 - mu >= mu");
    const PotentialTables t = make_tables(gamma, kind, x_min, x_max, points);
    const int want = q.n_r + 1;

    constexpr int kScan = 512;
    const double span = hi - lo;
    const double a0 = lo + 1e-9 * span;
    const double b0 = hi - 1e-9 * span;
    std::vector<double> delta(kScan + 1), sigma(kScan + 1);
    std::vector<int> counts(kScan + 1);
    std::vector<double> energies(kScan + 1);
    for (int k = 0; k <= kScan; ++k) {
        const double e = a0 + (b0 - a0) * (double(k) / kScan);
        energies[k] = e;
        delta[k] = delta_of(e, p);
        sigma[k] = -eps2_of(e, p);
    }
    kernels::sturm_count_batch(t.base.data(), t.sech2.data(), points, t.off_sq,
                               delta.data(), sigma.data(), kScan + 1, t.pivmin,
                               counts.data());

    int first = -1;
    for (int k = 0; k < kScan; ++k) {
        if (counts[k] < want && counts[k + 1] >= want) {
            first = k;
            break;
        }
    }
    if (first < 0) {
        ExistenceReport rep = existence(p, q);
        throw NoBoundState("discretized level condition has no solution in "
                           "the energy window; " + rep.reason, rep);
    }

    auto deep_enough = [&](double e) {
        const double dl = delta_of(e, p);
        const double sg = -eps2_of(e, p);
        int cnt = 0;
        kernels::sturm_count_batch(t.base.data(), t.sech2.data(), points,
                                   t.off_sq, &dl, &sg, 1, t.pivmin, &cnt);
        return cnt >= want;
    };

    double a = energies[first], b = energies[first + 1];
    for (int it = 0; it < 200; ++it) {
        const double width = b - a;
        if (width <= tol_rel * std::max(std::fabs(a), std::fabs(b)) ||
            width < 1e-300)
            break;
        const double mid = a + 0.5 * width;
        if (deep_enough(mid))
            b = mid;
        else
            a = mid;
    }
    return 0.5 * (a + b);
}

OracleResult run_pipeline(const ModelParams& p, const QuantumNumbers& q,
                          CentrifugalKind kind, const OracleConfig& cfg) {
    p.validate();
    check_config(cfg);
    const double gamma = q.gamma();

    double x_max = cfg.x_max;
    if (x_max <= 0.0) {
        // Coarse pre-pass in a generous fixed box to estimate the decay
        // exponent, then size the production box to 30 decay lengths.
        const double e_pre = solve_once(p, q, gamma, kind, cfg.x_min, 60.0,
                                        2000, 1e-6);
        const double eps_pre = std::sqrt(std::max(eps2_of(e_pre, p), 1e-8));
        x_max = std::max(40.0, 30.0 / eps_pre);
    }

    OracleResult res;
    res.x_max = x_max;
    res.points = cfg.points;
    int n = cfg.points;
    for (int level = 0; level <= cfg.refine_levels; ++level) {
        res.level_energies.push_back(
            solve_once(p, q, gamma, kind, cfg.x_min, x_max, n, cfg.tol_energy));
        n = 2 * n + 1; // exact halving of h
    }

    // Richardson tableau for the O(h^2) discretization error family.
    std::vector<double> t = res.level_energies;
    const int levels = int(t.size()) - 1;
    double pow4 = 1.0;
    for (int j = 1; j <= levels; ++j) {
        pow4 *= 4.0;
        for (int i = levels; i >= j; --i)
            t[i] = (pow4 * t[i] - t[i - 1]) / (pow4 - 1.0);
    }
    res.energy = t[levels];
    return res;
}

} // namespace

TridiagonalOperator build_operator(double gamma, double delta, double x_min,
                                   double x_max, int points) {
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw DomainError("operator needs 0 < x_min < x_max");
    if (points < 1)
        throw DomainError("operator needs at least one interior point");
    const PotentialTables t =
        make_tables(gamma, CentrifugalKind::sinh_approx, x_min, x_max, points);
    TridiagonalOperator op;
    op.h = t.h;
    op.x_min = x_min;
    op.off = t.off;
    op.diag.resize(points);
    for (int i = 0; i < points; ++i)
        op.diag[i] = t.base[i] - delta * t.sech2[i];
    return op;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op,
                                       int count) {
    const int n = int(op.diag.size());
    if (count < 1)
        throw DomainError("eigenvalue count must be >= 1");
    if (count > n)
        throw DomainError("eigenvalue count exceeds matrix dimension");
    const double off_sq = op.off * op.off;
    const double pivmin = DBL_MIN * std::max(1.0, off_sq);
    const double radius = 2.0 * std::fabs(op.off);
    double lo = op.diag[0], hi = op.diag[0];
    for (double d : op.diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= radius;
    hi += radius;

    std::vector<double> out(count);
    for (int j = 0; j < count; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double width = b - a;
            if (width <= 2.0 * DBL_EPSILON * std::max(std::fabs(a), std::fabs(b)) ||
                width < 1e-300)
                break;
            const double mid = a + 0.5 * width;
            if (kernels::sturm_count(op.diag.data(), n, off_sq, mid, pivmin) >=
                j + 1)
                b = mid;
            else
                a = mid;
        }
        out[j] = 0.5 * (a + b);
    }
    return out;
}

std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda) {
    const int n = int(op.diag.size());
    if (n < 2)
        throw DomainError("eigenvector needs dimension >= 2");
    const double off = op.off;
    const double pivmin = DBL_MIN * std::max(1.0, off * off);

    std::vector<double> v(n, 1.0 / std::sqrt(double(n)));
    std::vector<double> d(n), rhs(n);
    for (int iter = 0; iter < 3; ++iter) {
        // Thomas solve of (T - lambda I) u = v with tiny pivots clamped.
        rhs = v;
        d[0] = op.diag[0] - lambda;
        if (std::fabs(d[0]) < pivmin)
            d[0] = (d[0] < 0.0) ? -pivmin : pivmin;
        for (int i = 1; i < n; ++i) {
            const double m = off / d[i - 1];
            d[i] = (op.diag[i] - lambda) - m * off;
            if (std::fabs(d[i]) < pivmin)
                d[i] = (d[i] < 0.0) ? -pivmin : pivmin;
            rhs[i] -= m * rhs[i - 1];
        }
        v[n - 1] = rhs[n - 1] / d[n - 1];
        for (int i = n - 2; i >= 0; --i)
            v[i] = (rhs[i] - off * v[i + 1]) / d[i];
        double norm = 0.0;
        for (double u : v)
            norm += u * u;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NumericalError("inverse iteration collapsed");
        for (double& u : v)
            u /= norm;
    }
    // Fix the overall sign so results are deterministic: first sizable
    // component positive.
    for (double u : v) {
        if (std::fabs(u) > 1e-12) {
            if (u < 0.0)
                for (double& w : v)
                    w = -w;
            break;
        }
    }
    return v;
}

double self_consistent_energy(const ModelParams& p, const QuantumNumbers& q,
                              const OracleConfig& cfg) {
    return run_pipeline(p, q, CentrifugalKind::sinh_approx, cfg).energy;
}

OracleResult self_consistent_energy_details(const ModelParams& p,
                                            const QuantumNumbers& q,
                                            const OracleConfig& cfg) {
    return run_pipeline(p, q, CentrifugalKind::sinh_approx, cfg);
}

double ode_residual(const RadialFunction& rf) {
    const int n = int(rf.r.size());
    if (n < 100)
        throw DomainError("ode_residual needs at least 100 samples");
    if (!(rf.r[0] > 0.0))
        throw DomainError("ode_residual needs a grid starting at r > 0");
    const double alpha = rf.point.params.alpha;
    const double h_r = (rf.r[n - 1] - rf.r[0]) / (n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        const double step = rf.r[i + 1] - rf.r[i];
        if (std::fabs(step - h_r) > 1e-9 * h_r)
            throw DomainError("ode_residual needs a uniform grid");
    }
    double fmax = 0.0;
    for (double f : rf.F)
        fmax = std::max(fmax, std::fabs(f));
    if (fmax == 0.0)
        throw DomainError("ode_residual rejects the zero function");

    const double gamma = rf.point.q.gamma();
    const double delta = rf.point.delta;
    const double eps2 = rf.point.eps * rf.point.eps;
    const double h = alpha * h_r; // uniform step in x = alpha r
    double res_sq = 0.0, scale_sq = 0.0;
    for (int i = 1; i + 1 < n; ++i) {
        const double x = alpha * rf.r[i];
        const double sh = std::sinh(x);
        const double ch = std::cosh(x);
        const double second =
            (rf.F[i + 1] - 2.0 * rf.F[i] + rf.F[i - 1]) / (h * h);
        const double pot = (gamma / (sh * sh) - delta / (ch * ch)) * rf.F[i];
        const double shift = eps2 * rf.F[i];
        const double res = -second + pot + shift;
        const double scale =
            std::fabs(second) + std::fabs(pot) + std::fabs(shift);
        res_sq += res * res;
        scale_sq += scale * scale;
    }
    if (!(scale_sq > 0.0))
        throw NumericalError("ode_residual scale vanished");
    return std::sqrt(res_sq / scale_sq);
}

ApproximationGap approximation_gap(const ModelParams& p,
                                   const QuantumNumbers& q,
                                   const OracleConfig& cfg) {
    ApproximationGap g;
    g.energy_approx =
        run_pipeline(p, q, CentrifugalKind::sinh_approx, cfg).energy;
    g.energy_exact =
        run_pipeline(p, q, CentrifugalKind::exact_inverse_r2, cfg).energy;
    g.gap = g.energy_approx - g.energy_exact;
    return g;
}

} // namespace ptdirac
