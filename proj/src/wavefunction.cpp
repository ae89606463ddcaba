#include "ptdirac/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ptdirac/errors.hpp"
#include "ptdirac/quadrature.hpp"
#include "ptdirac/specfun.hpp"

namespace ptdirac {

const char* norm_method_name(NormMethod m) {
    switch (m) {
    case NormMethod::series: return "series";
    case NormMethod::quadrature: return "quadrature";
    case NormMethod::ground_closed_form: return "ground_closed_form";
    }
    return "unknown";
}

namespace {

// The attached Jacobi polynomial of a level: degree n_r, parameters
// (kappa + 1/2, eps) in the variable y = 1 - 2s. The first parameter is
// fixed by the indicial exponent of the s^{(kappa+1)/2} prefactor.
JacobiParams level_polynomial(const SpectralPoint& pt) {
    return {pt.q.n_r, pt.q.kappa() + 0.5, pt.eps};
}

void check_solved(const SpectralPoint& pt) {
    if (!(pt.eps > 0.0))
        throw DomainError("spectral point is not a bound state (eps <= 0)");
}

// 0! and 1! are exactly 1; returning an exact 0.0 log keeps the n_r = 0
// normalization series bit-identical to the ground-state closed form.
double ln_factorial(int k) {
    if (k <= 1)
        return 0.0;
    return log_gamma(double(k) + 1.0);
}

} // namespace

double upper_shape(double r, const SpectralPoint& pt) {
    check_solved(pt);
    if (!(r >= 0.0))
        throw DomainError("radius must be >= 0");
    if (r == 0.0)
        return 0.0;
    const double kappa = pt.q.kappa();
    const double x = pt.params.alpha * r;
    const double t = std::tanh(x);
    const double ch = std::cosh(x);
    const double s = t * t;
    const double oms = 1.0 / (ch * ch); // 1 - s without cancellation
    const double base = std::pow(s, 0.5 * (kappa + 1.0)) *
                        std::pow(oms, 0.5 * pt.eps);
    return base * jacobi_eval(level_polynomial(pt), 1.0 - 2.0 * s);
}

double upper_F(double r, const SpectralPoint& pt, double norm_constant) {
    return norm_constant * upper_shape(r, pt);
}

double lower_G(double r, const SpectralPoint& pt, double norm_constant) {
    check_solved(pt);
    const double denom = pt.params.mu + pt.energy - pt.params.c1;
    if (denom == 0.0)
        throw DomainError("lower component undefined: mu + E - c1 = 0");
    if (!(r >= 0.0))
        throw DomainError("radius must be >= 0");
    if (r == 0.0)
        return 0.0; // leading power r^kappa with kappa > 0
    const double kappa = pt.q.kappa();
    const double eps = pt.eps;
    const double alpha = pt.params.alpha;
    const double x = alpha * r;
    const double t = std::tanh(x);
    const double ch = std::cosh(x);
    const double s = t * t;
    const double oms = 1.0 / (ch * ch);
    const double base = std::pow(s, 0.5 * (kappa + 1.0)) *
                        std::pow(oms, 0.5 * eps);
    const JacobiParams jp = level_polynomial(pt);
    const double y = 1.0 - 2.0 * s;
    const double poly = jacobi_eval(jp, y);
    const double dpoly = jacobi_derivative(jp, y);
    // dF/dx through s = tanh^2 x: ds/dx = 2 sqrt(s)(1-s), sqrt(s) = tanh x.
    const double dshape_dx =
        base * (((kappa + 1.0) * oms / t - eps * t) * poly -
                4.0 * t * oms * dpoly);
    const double f = base * poly;
    return norm_constant * (alpha * dshape_dx + kappa * f / r) / denom;
}

double norm_constant_series(const SpectralPoint& pt) {
    check_solved(pt);
    const double kappa = pt.q.kappa();
    const double eps = pt.eps;
    const int n_r = pt.q.n_r;
    const double alpha = pt.params.alpha;

    // ln |T_i| and sign for the terminating hypergeometric coefficients
    //   T_i = (-n_r)_i (kappa+eps+n_r+3/2)_i / ((kappa+3/2)_i i!).
    const double big = kappa + eps + n_r + 1.5;
    const double low = kappa + 1.5;
    std::vector<double> ln_t(n_r + 1);
    std::vector<double> sign_t(n_r + 1);
    for (int i = 0; i <= n_r; ++i) {
        ln_t[i] = (ln_factorial(n_r) - ln_factorial(n_r - i)) +
                  (log_gamma(big + i) - log_gamma(big)) -
                  (log_gamma(low + i) - log_gamma(low)) - ln_factorial(i);
        sign_t[i] = (i % 2 == 0) ? 1.0 : -1.0;
    }

    // Kahan-compensated double sum of T_i T_j B(kappa+i+j+3/2, eps).
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i <= n_r; ++i) {
        for (int j = 0; j <= n_r; ++j) {
            const double term =
                sign_t[i] * sign_t[j] *
                std::exp(ln_t[i] + ln_t[j] +
                         log_beta(kappa + double(i + j) + 1.5, eps));
            const double yk = term - comp;
            const double tt = sum + yk;
            comp = (tt - sum) - yk;
            sum = tt;
        }
    }
    if (!(sum > 0.0)) {
        std::ostringstream os;
        os << "normalization series summed to a nonpositive value (" << sum
           << ") for n_r=" << n_r
           << "; fall back to the quadrature normalization";
        throw NumericalError(os.str());
    }
    const double n_front =
        0.5 * std::exp(2.0 * (log_gamma(double(n_r) + kappa + 1.5) -
                              ln_factorial(n_r) - log_gamma(kappa + 1.5)));
    return std::sqrt(alpha / (n_front * sum));
}

double norm_constant_ground(const SpectralPoint& pt) {
    check_solved(pt);
    if (pt.q.n_r != 0)
        throw DomainError("ground-state closed form requires n_r = 0");
    const double kappa = pt.q.kappa();
    return std::sqrt((2.0 * pt.params.alpha) / beta(kappa + 1.5, pt.eps));
}

double norm_constant_quadrature(const SpectralPoint& pt) {
    check_solved(pt);
    const double kappa = pt.q.kappa();
    const double eps = pt.eps;
    const JacobiParams jp = level_polynomial(pt);
    // After s = sin^2 t the norm integral int_0^inf F_hat^2 dr becomes
    // (1/alpha) int_0^{pi/2} sin^{2k+2} t cos^{2e-1} t P(cos 2t)^2 dt.
    auto integrand = [&](double t) {
        const double st = std::sin(t);
        const double ct = std::cos(t);
        if (ct <= 0.0)
            return 0.0; // endpoint guard; the weight is integrable
        const double poly = jacobi_eval(jp, std::cos(2.0 * t));
        return std::pow(st, 2.0 * kappa + 2.0) *
               std::pow(ct, 2.0 * eps - 1.0) * poly * poly;
    };
    const QuadratureResult qr =
        integrate_adaptive(integrand, 0.0, std::numbers::pi / 2.0, 1e-12);
    if (!qr.converged) {
        std::ostringstream os;
        os << "norm quadrature did not converge; error estimate "
           << qr.error_estimate << " after " << qr.intervals << " intervals";
        throw NumericalError(os.str());
    }
    if (!(qr.value > 0.0))
        throw NumericalError("norm quadrature returned a nonpositive integral");
    return std::sqrt(pt.params.alpha / qr.value);
}

double default_r_max(const SpectralPoint& pt) {
    check_solved(pt);
    return 30.0 / (pt.eps * pt.params.alpha);
}

namespace {

std::vector<double> make_grid(const SpectralPoint& pt, const GridSpec& spec) {
    if (spec.count < 2)
        throw DomainError("grid needs at least 2 points");
    const double r_max = spec.r_max > 0.0 ? spec.r_max : default_r_max(pt);
    if (!(r_max > 0.0) || !std::isfinite(r_max))
        throw DomainError("grid r_max must be positive and finite");
    const int count = spec.count;
    std::vector<double> r;
    r.reserve(count + 1);
    switch (spec.spacing) {
    case GridSpec::Spacing::linear:
        for (int k = 1; k <= count; ++k)
            r.push_back(r_max * (double(k) / count));
        break;
    case GridSpec::Spacing::logarithmic: {
        const double r0 = r_max * 1e-4;
        const double step = std::log(1e4) / (count - 1);
        for (int k = 0; k < count; ++k)
            r.push_back(r0 * std::exp(k * step));
        r.back() = r_max;
        break;
    }
    case GridSpec::Spacing::hybrid: {
        // Log spacing resolves the r^{kappa+1} power rise near the origin;
        // linear spacing covers the oscillatory body and exponential tail.
        const double split = std::min(1.0 / pt.params.alpha, 0.5 * r_max);
        const int g = (count - 1) / 2;
        const int m = count - 1 - g;
        r.push_back(0.0);
        if (g == 1) {
            r.push_back(split);
        } else if (g > 1) {
            const double r0 = split * 1e-4;
            const double step = std::log(1e4) / (g - 1);
            for (int k = 0; k < g; ++k)
                r.push_back(r0 * std::exp(k * step));
            r[g] = split; // exact upper end of the log section
        }
        for (int k = 1; k <= m; ++k)
            r.push_back(split + (r_max - split) * (double(k) / m));
        r.back() = r_max;
        break;
    }
    }
    return r;
}

} // namespace

RadialFunction sample(const SpectralPoint& pt, const GridSpec& spec,
                      NormMethod method, bool normalize_total) {
    check_solved(pt);
    RadialFunction rf;
    rf.point = pt;
    rf.norm_method = method;
    switch (method) {
    case NormMethod::series:
        try {
            rf.norm_constant = norm_constant_series(pt);
        } catch (const NumericalError&) {
            rf.norm_constant = norm_constant_quadrature(pt);
            rf.norm_method = NormMethod::quadrature;
        }
        break;
    case NormMethod::quadrature:
        rf.norm_constant = norm_constant_quadrature(pt);
        break;
    case NormMethod::ground_closed_form:
        rf.norm_constant = norm_constant_ground(pt);
        break;
    }
    rf.r = make_grid(pt, spec);
    rf.F.resize(rf.r.size());
    rf.G.resize(rf.r.size());
    for (std::size_t i = 0; i < rf.r.size(); ++i) {
        rf.F[i] = upper_F(rf.r[i], pt, rf.norm_constant);
        rf.G[i] = lower_G(rf.r[i], pt, rf.norm_constant);
    }
    if (normalize_total) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < rf.r.size(); ++i) {
            const double a = rf.F[i] * rf.F[i] + rf.G[i] * rf.G[i];
            const double b = rf.F[i + 1] * rf.F[i + 1] + rf.G[i + 1] * rf.G[i + 1];
            total += 0.5 * (a + b) * (rf.r[i + 1] - rf.r[i]);
        }
        if (!(total > 0.0))
            throw NumericalError("total-norm rescale: nonpositive integral");
        const double scale = 1.0 / std::sqrt(total);
        rf.norm_constant *= scale;
        for (auto& v : rf.F)
            v *= scale;
        for (auto& v : rf.G)
            v *= scale;
    }
    return rf;
}

int count_nodes(const RadialFunction& rf) {
    int nodes = 0;
    double last = 0.0;
    for (double v : rf.F) {
        if (v == 0.0)
            continue;
        if (last != 0.0 && ((v > 0.0) != (last > 0.0)))
            ++nodes;
        last = v;
    }
    return nodes;
}

double trapezoid_norm(const RadialFunction& rf) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < rf.r.size(); ++i)
        total += 0.5 * (rf.F[i] * rf.F[i] + rf.F[i + 1] * rf.F[i + 1]) *
                 (rf.r[i + 1] - rf.r[i]);
    return total;
}

} // namespace ptdirac
