#include "ptdirac/specfun.hpp"

#include <cmath>
#include <string>

#include "ptdirac/errors.hpp"

namespace ptdirac {

namespace {

// Lanczos coefficients for g = 607/128, 15 terms. Relative accuracy of the
// resulting ln Gamma is ~1e-15 over [0.5, 200].
constexpr double kLanczos[15] = {
    0.999999999999997092,     57.1562356658629235,
    -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,    0.339946499848118887e-4,
    0.465236289270485756e-4,  -0.983744753048795646e-4,
    0.158088703224912494e-3,  -0.210264441724104883e-3,
    0.217439618115212643e-3,  -0.164318106536763890e-3,
    0.844182239838527433e-4,  -0.261908384015814087e-4,
    0.368991826595316234e-5,
};

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
    double tmp = x + 5.24218750000000000; // x + g + 1/2, g = 607/128
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = kLanczos[0];
    double y = x;
    for (int j = 1; j < 15; ++j)
        ser += kLanczos[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_beta(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("log_beta requires positive arguments");
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

double pochhammer(double a, int k) {
    if (k < 0)
        throw DomainError("pochhammer requires k >= 0");
    double prod = 1.0;
    for (int i = 0; i < k; ++i)
        prod *= a + i; // hits an exact 0.0 factor for non-positive integer a
    return prod;
}

namespace {

void check_jacobi_params(const JacobiParams& p) {
    if (p.degree < 0)
        throw DomainError("jacobi degree must be >= 0");
    if (!(p.a > -1.0) || !(p.b > -1.0))
        throw DomainError("jacobi parameters must satisfy a, b > -1");
}

} // namespace

double jacobi_eval(const JacobiParams& p, double x) {
    check_jacobi_params(p);
    const double a = p.a, b = p.b;
    if (p.degree == 0)
        return 1.0;
    double pm1 = 1.0;                                  // P_0
    double pc = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0; // P_1
    for (int n = 2; n <= p.degree; ++n) {
        // 2n(n+a+b)(2n+a+b-2) P_n = (2n+a+b-1)[(2n+a+b)(2n+a+b-2)x + a^2-b^2] P_{n-1}
        //                           - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}
        const double s = 2.0 * n + a + b;
        const double c0 = 2.0 * n * (n + a + b) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
        const double pn = (c1 * pc - c2 * pm1) / c0;
        pm1 = pc;
        pc = pn;
    }
    return pc;
}

double jacobi_derivative(const JacobiParams& p, double x) {
    check_jacobi_params(p);
    if (p.degree == 0)
        return 0.0;
    JacobiParams up{p.degree - 1, p.a + 1.0, p.b + 1.0};
    return 0.5 * (p.degree + p.a + p.b + 1.0) * jacobi_eval(up, x);
}

namespace {

// Falling factorial z (z-1) ... (z-k+1).
double falling(double z, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i)
        prod *= z - i;
    return prod;
}

double binomial(int n, int k) {
    double prod = 1.0;
    for (int i = 1; i <= k; ++i)
        prod *= double(n - k + i) / double(i);
    return prod;
}

} // namespace

double jacobi_rodrigues(const JacobiParams& p, double x) {
    check_jacobi_params(p);
    if (p.degree > 6)
        throw DomainError("jacobi_rodrigues is a low-degree cross-check; "
                          "degree must be <= 6");
    const int n = p.degree;
    // Leibniz expansion of the n-th derivative in the Rodrigues formula:
    //   P_n = (-1)^n/(2^n n!) sum_k C(n,k) (-1)^k (a+n)_{(k)} (b+n)_{(n-k)}
    //         (1-x)^{n-k} (1+x)^k
    // with (z)_{(k)} the falling factorial.
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double term = binomial(n, k) * falling(p.a + n, k) *
                            falling(p.b + n, n - k) *
                            std::pow(1.0 - x, n - k) * std::pow(1.0 + x, k);
        sum += (k % 2 == 0) ? term : -term;
    }
    double fact = 1.0;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    const double scale = ((n % 2 == 0) ? 1.0 : -1.0) / (std::ldexp(1.0, n) * fact);
    return scale * sum;
}

double hyp2f1_terminating(int neg_n, double b, double c, double x) {
    if (neg_n > 0)
        throw DomainError("hyp2f1_terminating requires a non-positive first "
                          "parameter (a terminating series)");
    const int n = -neg_n;
    if (c <= 0.0 && c == std::floor(c) && c >= -(double(n) - 1.0))
        throw DomainError("hyp2f1 pole: c is a non-positive integer inside "
                          "the terminating sum");
    // Kahan-compensated sum of the n+1 terms, each from the previous by a
    // rational factor.
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int k = 0; k < n; ++k) {
        term *= (double(-n + k) * (b + k)) / ((c + k) * (k + 1.0)) * x;
        const double yk = term - comp;
        const double t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
    }
    return sum;
}

} // namespace ptdirac
