#include "ptdirac/model.hpp"

#include <cmath>
#include <string>

#include "ptdirac/errors.hpp"

namespace ptdirac {

void ModelParams::validate() const {
    if (!(std::isfinite(mu) && std::isfinite(v0) && std::isfinite(s0) &&
          std::isfinite(alpha) && std::isfinite(c1)))
        throw DomainError("model parameters must be finite");
    if (!(alpha > 0.0))
        throw DomainError("alpha must be positive, got " + std::to_string(alpha));
    if (!(mu > 0.0))
        throw DomainError("mu must be positive, got " + std::to_string(mu));
    if (!(v0 + s0 > 0.0))
        throw DomainError("v0 + s0 must be positive (attractive well), got " +
                          std::to_string(v0 + s0));
}

int twice_kappa_from(int ell, int dim) {
    if (ell < 0)
        throw DomainError("ell must be >= 0, got " + std::to_string(ell));
    if (dim < 2)
        throw DomainError("dim must be >= 2, got " + std::to_string(dim));
    return 2 * ell + dim - 1;
}

double kappa_from(int ell, int dim) {
    return 0.5 * twice_kappa_from(ell, dim);
}

QuantumNumbers QuantumNumbers::of(int n_r, int ell, int dim) {
    if (n_r < 0)
        throw DomainError("n_r must be >= 0, got " + std::to_string(n_r));
    QuantumNumbers q;
    q.n_r = n_r;
    q.ell = ell;
    q.dim = dim;
    q.twice_kappa = twice_kappa_from(ell, dim); // validates ell, dim
    return q;
}

std::pair<double, double> delta_sigma_at(double r, const ModelParams& p) {
    if (!(r >= 0.0))
        throw DomainError("r must be >= 0");
    const double c = std::cosh(p.alpha * r);
    const double sech2 = 1.0 / (c * c); // cosh >= 1, never 0; underflows to 0
    return {(p.s0 - p.v0) * sech2, -(p.v0 + p.s0) * sech2};
}

std::pair<double, double> centrifugal_pair(double r, double alpha) {
    if (!(r > 0.0))
        throw DomainError("centrifugal terms diverge at r = 0; need r > 0");
    const double exact = 1.0 / (r * r);
    const double sh = std::sinh(alpha * r);
    const double approx = (alpha * alpha) / (sh * sh);
    return {exact, approx};
}

DimensionlessState dimensionless_of(double E, const ModelParams& p,
                                    const QuantumNumbers& q) {
    (void)q; // eps and delta depend on the parameters only
    p.validate();
    const double t1 = p.mu - E;
    const double t2 = E + p.mu - p.c1;
    if (t1 * t2 < 0.0) {
        if (t1 < 0.0)
            throw DomainError("energy above the window: mu - E < 0");
        throw DomainError("energy below the window: E + mu - c1 < 0");
    }
    DimensionlessState st;
    st.energy = E;
    st.eps = std::sqrt(t1 * t2) / p.alpha;
    st.delta = (p.v0 + p.s0) * t2 / (p.alpha * p.alpha);
    return st;
}

} // namespace ptdirac
