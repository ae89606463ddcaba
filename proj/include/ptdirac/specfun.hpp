#pragma once

namespace ptdirac {

// Self-contained special-function kernel. Everything downstream (normalization
// series, Jacobi wavefunctions) is built on these, so the accuracy targets are
// two to four orders below the downstream test tolerances.

// ln Gamma(x) for x > 0, Lanczos approximation (g = 607/128, 15 terms);
// |error| <= ~1e-15 * (1 + |ln Gamma|) on [0.5, 200]. Throws for x <= 0.
double log_gamma(double x);

// ln B(x, y) and B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0.
double log_beta(double x, double y);
double beta(double x, double y);

// Pochhammer (a)_k = a (a+1) ... (a+k-1) by direct product; (a)_0 = 1.
// Exactly zero when a is a non-positive integer with a + k > 0. k >= 0.
double pochhammer(double a, int k);

struct JacobiParams {
    int degree = 0;   // >= 0
    double a = 0.0;   // > -1
    double b = 0.0;   // > -1
};

// P_n^{(a,b)}(x) by the three-term recurrence in the degree; stable for
// a, b > -1 and |x| <= 1.
double jacobi_eval(const JacobiParams& p, double x);

// d/dx P_n^{(a,b)}(x) = ((n + a + b + 1)/2) P_{n-1}^{(a+1,b+1)}(x); 0 for n = 0.
double jacobi_derivative(const JacobiParams& p, double x);

// Reference evaluation through the Rodrigues formula expanded by the Leibniz
// rule. Exists purely as a low-degree cross-check; degree > 6 is rejected.
double jacobi_rodrigues(const JacobiParams& p, double x);

// Terminating Gauss hypergeometric sum 2F1(-n, b; c; x) with neg_n = -n <= 0:
//   sum_{k=0..n} (-n)_k (b)_k / ((c)_k k!) x^k
// evaluated with compensated summation. Throws when c is a non-positive
// integer >= -(n-1) (a pole inside the sum).
double hyp2f1_terminating(int neg_n, double b, double c, double x);

} // namespace ptdirac
