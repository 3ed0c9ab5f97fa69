#ifndef WGED_NUMERICS_HPP
#define WGED_NUMERICS_HPP

#include <functional>
#include <vector>

namespace wged::numerics {

// Natural log of the gamma function for x > 0.
// Relative error below 1e-12; throws std::domain_error for x <= 0.
double ln_gamma(double x);

// Natural log of the beta function B(p, q), p, q > 0.
double ln_beta(double p, double q);

// Regularized incomplete beta function I_x(p, q) for p, q > 0 and x in [0, 1].
// Absolute error below 1e-10.
double regularized_incomplete_beta(double p, double q, double x);

// Quantile of the standard normal distribution, p in (0, 1).
// Absolute error below 1e-9.
double std_normal_quantile(double p);

struct QuadratureResult {
    double value;
    double error_estimate;
    int subdivisions;
};

// Integral of f over (0, inf) by adaptive Gauss-Kronrod quadrature after the
// substitution x = t/(1-t). The integrand must eventually decay. Throws
// std::runtime_error when the error estimate cannot be brought below tol
// within the subdivision budget.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double tol = 1e-10);

struct OptimResult {
    std::vector<double> argmin;
    double fmin = 0.0;
    int iterations = 0;
    bool converged = false;
    int restarts_used = 0;
};

// Nelder-Mead simplex minimization. Converged means both the simplex diameter
// and the spread of function values fell below tol. The objective may return
// +inf to reject a point; it must be finite at the start.
OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                        const std::vector<double>& start,
                        double tol = 1e-10, int max_iter = 5000);

// Runs nelder_mead from every start and keeps the best converged result
// (smallest fmin, ties broken by lexicographically smallest argmin). If no
// start converges, returns the best unconverged result with converged=false.
OptimResult multistart_minimize(const std::function<double(const std::vector<double>&)>& objective,
                                const std::vector<std::vector<double>>& starts,
                                double tol = 1e-10, int max_iter = 5000);

// Root of f on [lo, hi] by Brent's method; requires a sign change.
double brent_root(const std::function<double(double)>& f,
                  double lo, double hi, double tol = 1e-12);

// Symmetric 3x3 matrix stored as the six unique entries.
class SymMatrix3 {
public:
    SymMatrix3() : e_{0, 0, 0, 0, 0, 0} {}
    static SymMatrix3 identity();
    static SymMatrix3 diagonal(double d0, double d1, double d2);

    double operator()(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, double v) { e_[index(i, j)] = v; }
    double determinant() const;

private:
    static int index(int i, int j);
    double e_[6];
};

// Inverse by adjugate over determinant. Throws std::runtime_error with the
// determinant in the message when |det| < 1e-300.
SymMatrix3 invert_sym3(const SymMatrix3& m);

}  // namespace wged::numerics

#endif
