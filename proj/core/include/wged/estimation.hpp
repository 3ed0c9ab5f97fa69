#ifndef WGED_ESTIMATION_HPP
#define WGED_ESTIMATION_HPP

#include <array>
#include <vector>

#include "wged/distribution.hpp"
#include "wged/numerics.hpp"

namespace wged::mle {

// A complete (uncensored) sample: positive, finite, sorted ascending.
struct Sample {
    std::vector<double> values;
    std::size_t n() const { return values.size(); }
    double mean() const;
};

// Validates and sorts; throws std::domain_error on empty input or on
// non-finite / non-positive values.
Sample make_sample(std::vector<double> values);

double log_likelihood(const Params& p, const Sample& s);

// Gradient of the log-likelihood in (a, b, lambda).
std::array<double, 3> score(const Params& p, const Sample& s);

// Closed-form maximizer of the likelihood in a for fixed (b, lambda):
// a = n / sum (e^{lambda x_i} - 1)^b. Throws std::overflow_error when the
// denominator overflows.
double profile_a(double b, double lambda, const Sample& s);

struct FitConfig {
    double tol = 1e-10;        // simplex diameter and value-spread tolerance
    int max_iter = 20000;      // per start
    int grid_points = 5;       // multi-start grid is grid_points x grid_points
    double b_min = 0.25;
    double b_max = 8.0;
    double lambda_min = 0.0;   // 0 means 0.1 / sample mean
    double lambda_max = 0.0;   // 0 means 4 / sample mean
    double level = 0.95;       // confidence level for the Wald intervals
    double log_box = 30.0;     // search confined to |ln b|, |ln lambda| <= log_box
};

struct FitResult {
    FitResult() : params(1.0, 1.0, 1.0) {}
    Params params;
    double loglik = 0.0;
    numerics::SymMatrix3 cov;                 // parameter order (a, b, lambda)
    std::array<double, 3> std_errors{};
    std::array<double, 3> ci_lower{};
    std::array<double, 3> ci_upper{};
    bool converged = false;
    int n_restarts = 0;
};

// Maximum-likelihood fit: 2-D Nelder-Mead over (ln b, ln lambda) with a
// profiled out, multi-started from a deterministic geometric grid; the best
// converged optimum wins, ties broken by lexicographically smallest
// (ln b, ln lambda). Throws std::domain_error for n < 4 or a degenerate
// (all-equal) sample.
FitResult fit_mle(const Sample& s, const FitConfig& config = {});

// Negated Hessian of the log-likelihood at p, order (a, b, lambda).
numerics::SymMatrix3 observed_information(const Params& p, const Sample& s);

struct Interval {
    double lower;
    double upper;
};

// Wald intervals estimate +- z_{1-delta/2} * sqrt(var); lower bounds
// truncated at 0 since all parameters are positive.
std::array<Interval, 3> wald_ci(const FitResult& fit, double delta);

enum class Axis { a, b, lambda };

struct ProfileCurve {
    Axis axis;
    std::vector<double> grid;
    std::vector<double> loglik;
};

// Log-likelihood along one parameter axis with the other two held at the
// supplied estimates.
ProfileCurve profile_loglik(const Sample& s, Axis axis, const std::vector<double>& grid,
                            const Params& at);

}  // namespace wged::mle

#endif
