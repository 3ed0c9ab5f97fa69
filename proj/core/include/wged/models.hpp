#ifndef WGED_MODELS_HPP
#define WGED_MODELS_HPP

#include <string>
#include <vector>

#include "wged/estimation.hpp"

namespace wged::models {

// The five lifetime models of the comparison study. Parameter vector layout:
//   ED   (lambda)
//   GED  (alpha, lambda)
//   BED  (a, b, lambda)
//   BGED (a, b, alpha, lambda)
//   WGED (a, b, lambda)
enum class Kind { ED, GED, BED, BGED, WGED };

int param_count(Kind kind);
std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);

struct ModelSpec {
    Kind kind;
    std::vector<double> params;
};

// Validates length and positivity.
ModelSpec make_spec(Kind kind, std::vector<double> params);

struct GenericFit {
    ModelSpec spec;
    double loglik = 0.0;
    bool converged = false;
};

// Options shared by the Nelder-Mead based fitters (GED/BED/BGED and, through
// estimation, WGED).
struct HarnessConfig {
    double tol = 1e-10;
    int max_iter = 20000;
    int grid_points = 5;   // GED multi-start grid is grid_points x grid_points
    double log_box = 30.0;
};

// Exponential distribution, rate lambda.
double ed_logpdf(double lambda, double x);
double ed_cdf(double lambda, double x);
GenericFit ed_fit(const mle::Sample& s);

// Generalized exponential (exponentiated exponential), shape alpha.
double ged_logpdf(double alpha, double lambda, double x);
double ged_cdf(double alpha, double lambda, double x);
GenericFit ged_fit(const mle::Sample& s, const HarnessConfig& config = {});

// Beta exponential: f = lambda/B(a,b) e^{-b lambda x} (1 - e^{-lambda x})^{a-1}.
double bed_logpdf(double a, double b, double lambda, double x);
double bed_cdf(double a, double b, double lambda, double x);
GenericFit bed_fit(const mle::Sample& s, const HarnessConfig& config = {});

// Beta generalized exponential:
// f = alpha lambda / B(a,b) e^{-lambda x} u^{a alpha - 1} (1 - u^alpha)^{b-1},
// u = 1 - e^{-lambda x}.
double bged_logpdf(double a, double b, double alpha, double lambda, double x);
double bged_cdf(double a, double b, double alpha, double lambda, double x);
GenericFit bged_fit(const mle::Sample& s, const HarnessConfig& config = {});

// Log-likelihood of any model at the given parameters.
double loglik(const ModelSpec& spec, const mle::Sample& s);

// cdf of any model at x.
double model_cdf(const ModelSpec& spec, double x);

// Dispatcher; WGED delegates to mle::fit_mle.
GenericFit fit(Kind kind, const mle::Sample& s, const HarnessConfig& config = {});

}  // namespace wged::models

#endif
