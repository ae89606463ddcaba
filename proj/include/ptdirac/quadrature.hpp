#pragma once

#include <functional>

namespace ptdirac {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int intervals = 0;
};

// Adaptive Gauss-Legendre quadrature: a 15-point rule compared against its
// two-half refinement, recursing on the halves until the local difference is
// below the tolerance share. Deterministic (fixed node set, fixed recursion
// order); suited to integrands with integrable endpoint behavior such as
// cos^{2 eps - 1}(t) near t = pi/2.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-12,
                                    double abs_tol = 0.0,
                                    int max_depth = 48);

} // namespace ptdirac
