#ifndef WGED_DISTRIBUTION_HPP
#define WGED_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

namespace wged {

// Parameters of the Weibull generalized exponential distribution
//   F(x) = 1 - exp(-a (e^{lambda x} - 1)^b),  x >= 0.
// a and b are shape parameters, lambda is the baseline rate.
struct Params {
    Params(double a_, double b_, double lambda_);
    double a;
    double b;
    double lambda;
};

double pdf(const Params& p, double x);
double log_pdf(const Params& p, double x);
double cdf(const Params& p, double x);
double survival(const Params& p, double x);
double hazard(const Params& p, double x);
double reversed_hazard(const Params& p, double x);
double cumulative_hazard(const Params& p, double x);

// Inverse cdf; q in [0, 1).
double quantile(const Params& p, double q);
double median(const Params& p);

// Location of the interior density maximum. Throws std::domain_error when the
// density is monotone decreasing (no sign change in the log-density slope).
double mode(const Params& p);

struct QuantileMeasures {
    double bowley_skewness;
    double moors_kurtosis;
};
QuantileMeasures quantile_measures(const Params& p);

// r-th raw moment by adaptive quadrature (the form of record).
double raw_moment(const Params& p, int r, double tol = 1e-10);

// Truncated triple-series evaluation of the r-th raw moment. The expansion
// behind it is divergent (the inner binomial series has radius 1 while the
// integral extends to the boundary), so this is an experimental cross-check
// only; callers should inspect the shell diagnostics. Throws
// std::overflow_error when a term leaves the representable range.
struct SeriesMoment {
    double value;
    std::vector<double> shells;  // partial sum contribution of each i-shell
    double last_shell_magnitude() const;
};
SeriesMoment raw_moment_series(const Params& p, int r, int i_max, int j_max, int k_max);

// Moment generating function by quadrature. Throws std::runtime_error when
// the integrand fails the numeric decay check.
double mgf(const Params& p, double t, double tol = 1e-10);

// Density of the r-th order statistic of a sample of size n, beta form
// (the form of record).
double order_stat_pdf(const Params& p, int r, int n, double x);

// Same density as a finite mixture of rescaled wged densities; cross-check
// for order_stat_pdf.
double order_stat_pdf_mixture(const Params& p, int r, int n, double x);

// Inverse-transform sampling; deterministic for a given seed.
std::vector<double> sample(const Params& p, std::size_t n, std::uint64_t seed);

}  // namespace wged

#endif
