#include "wged/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wged/numerics.hpp"

namespace wged::models {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_x_positive(double x, const char* op) {
    if (!(x > 0.0)) {
        throw std::domain_error(std::string(op) + ": x must be positive");
    }
}

void check_x_nonneg(double x, const char* op) {
    if (x < 0.0) {
        throw std::domain_error(std::string(op) + ": x must be nonnegative");
    }
}

// Shared multi-start harness: minimizes the negative log-likelihood over
// log-parameters confined to |v_i| <= log_box.
GenericFit fit_generic(Kind kind, const mle::Sample& s,
                       const std::vector<std::vector<double>>& log_starts,
                       const HarnessConfig& config = {}) {
    auto objective = [&](const std::vector<double>& v) {
        std::vector<double> params(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (std::fabs(v[i]) > config.log_box) {
                return kInf;
            }
            params[i] = std::exp(v[i]);
        }
        double total = 0.0;
        for (double x : s.values) {
            double lp;
            switch (kind) {
                case Kind::GED: lp = ged_logpdf(params[0], params[1], x); break;
                case Kind::BED: lp = bed_logpdf(params[0], params[1], params[2], x); break;
                case Kind::BGED: lp = bged_logpdf(params[0], params[1], params[2], params[3], x); break;
                default: throw std::logic_error("fit_generic: unsupported kind");
            }
            if (!std::isfinite(lp)) {
                return kInf;
            }
            total += lp;
        }
        return -total;
    };
    const numerics::OptimResult opt =
        numerics::multistart_minimize(objective, log_starts, config.tol, config.max_iter);
    std::vector<double> params(opt.argmin.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        params[i] = std::exp(opt.argmin[i]);
    }
    GenericFit fit;
    fit.spec = make_spec(kind, std::move(params));
    fit.loglik = -opt.fmin;
    fit.converged = opt.converged;
    return fit;
}

}  // namespace

int param_count(Kind kind) {
    switch (kind) {
        case Kind::ED: return 1;
        case Kind::GED: return 2;
        case Kind::BED: return 3;
        case Kind::BGED: return 4;
        case Kind::WGED: return 3;
    }
    throw std::logic_error("param_count: unknown kind");
}

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::ED: return "ed";
        case Kind::GED: return "ged";
        case Kind::BED: return "bed";
        case Kind::BGED: return "bged";
        case Kind::WGED: return "wged";
    }
    throw std::logic_error("kind_name: unknown kind");
}

Kind kind_from_name(const std::string& name) {
    if (name == "ed") return Kind::ED;
    if (name == "ged") return Kind::GED;
    if (name == "bed") return Kind::BED;
    if (name == "bged") return Kind::BGED;
    if (name == "wged") return Kind::WGED;
    throw std::invalid_argument("unknown model name: " + name);
}

ModelSpec make_spec(Kind kind, std::vector<double> params) {
    if (static_cast<int>(params.size()) != param_count(kind)) {
        throw std::invalid_argument("make_spec: wrong parameter count for " + kind_name(kind));
    }
    for (double p : params) {
        if (!std::isfinite(p) || p <= 0.0) {
            throw std::domain_error("make_spec: parameters must be positive and finite");
        }
    }
    return ModelSpec{kind, std::move(params)};
}

double ed_logpdf(double lambda, double x) {
    check_x_nonneg(x, "ed_logpdf");
    return std::log(lambda) - lambda * x;
}

double ed_cdf(double lambda, double x) {
    check_x_nonneg(x, "ed_cdf");
    return -std::expm1(-lambda * x);
}

GenericFit ed_fit(const mle::Sample& s) {
    double sum = 0.0;
    for (double x : s.values) {
        sum += x;
    }
    if (sum <= 0.0) {
        throw std::domain_error("ed_fit: degenerate sample (sum of values is zero)");
    }
    const double n = static_cast<double>(s.n());
    const double lambda = n / sum;
    GenericFit fit;
    fit.spec = make_spec(Kind::ED, {lambda});
    fit.loglik = n * std::log(lambda) - lambda * sum;
    fit.converged = true;
    return fit;
}

double ged_logpdf(double alpha, double lambda, double x) {
    check_x_positive(x, "ged_logpdf");
    const double ln_u = std::log(-std::expm1(-lambda * x));
    return std::log(alpha * lambda) - lambda * x + (alpha - 1.0) * ln_u;
}

double ged_cdf(double alpha, double lambda, double x) {
    check_x_nonneg(x, "ged_cdf");
    if (x == 0.0) {
        return 0.0;
    }
    return std::exp(alpha * std::log(-std::expm1(-lambda * x)));
}

GenericFit ged_fit(const mle::Sample& s, const HarnessConfig& config) {
    const double mean = s.mean();
    const int g = std::max(config.grid_points, 2);
    std::vector<std::vector<double>> starts;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double la = std::log(0.25) + i * (std::log(64.0) - std::log(0.25)) / (g - 1);
            const double ll = std::log(0.1 / mean) +
                              j * (std::log(4.0 / mean) - std::log(0.1 / mean)) / (g - 1);
            starts.push_back({la, ll});
        }
    }
    return fit_generic(Kind::GED, s, starts, config);
}

double bed_logpdf(double a, double b, double lambda, double x) {
    check_x_positive(x, "bed_logpdf");
    const double ln_u = std::log(-std::expm1(-lambda * x));
    return std::log(lambda) - b * lambda * x + (a - 1.0) * ln_u - numerics::ln_beta(a, b);
}

double bed_cdf(double a, double b, double lambda, double x) {
    check_x_nonneg(x, "bed_cdf");
    if (x == 0.0) {
        return 0.0;
    }
    return numerics::regularized_incomplete_beta(a, b, -std::expm1(-lambda * x));
}

GenericFit bed_fit(const mle::Sample& s, const HarnessConfig& config) {
    const double mean = s.mean();
    std::vector<std::vector<double>> starts;
    const double shapes[3] = {0.5, 4.0, 32.0};
    const double rates[3] = {0.1 / mean, 0.7 / mean, 4.0 / mean};
    for (double a0 : shapes) {
        for (double b0 : shapes) {
            for (double l0 : rates) {
                starts.push_back({std::log(a0), std::log(b0), std::log(l0)});
            }
        }
    }
    return fit_generic(Kind::BED, s, starts, config);
}

double bged_logpdf(double a, double b, double alpha, double lambda, double x) {
    check_x_positive(x, "bged_logpdf");
    const double ln_u = std::log(-std::expm1(-lambda * x));
    const double w = alpha * ln_u;                       // ln u^alpha, always < 0
    const double ln_one_minus_ua = std::log(-std::expm1(w));
    return std::log(alpha * lambda) - lambda * x + (a * alpha - 1.0) * ln_u +
           (b - 1.0) * ln_one_minus_ua - numerics::ln_beta(a, b);
}

double bged_cdf(double a, double b, double alpha, double lambda, double x) {
    check_x_nonneg(x, "bged_cdf");
    if (x == 0.0) {
        return 0.0;
    }
    const double ua = std::exp(alpha * std::log(-std::expm1(-lambda * x)));
    return numerics::regularized_incomplete_beta(a, b, ua);
}

GenericFit bged_fit(const mle::Sample& s, const HarnessConfig& config) {
    // Seed from the GED fit (BGED collapses to GED(a alpha, lambda) at b=1).
    const GenericFit ged = ged_fit(s, config);
    const double alpha_g = ged.spec.params[0];
    const double lambda_g = ged.spec.params[1];
    std::vector<std::vector<double>> starts;
    const double units[3] = {0.5, 1.0, 2.0};
    const double alpha_scale[3] = {1.0, 0.5, 2.0};
    for (double a0 : units) {
        for (double b0 : units) {
            for (double sc : alpha_scale) {
                starts.push_back({std::log(a0), std::log(b0), std::log(sc * alpha_g),
                                  std::log(lambda_g)});
            }
        }
    }
    return fit_generic(Kind::BGED, s, starts, config);
}

double loglik(const ModelSpec& spec, const mle::Sample& s) {
    double total = 0.0;
    const std::vector<double>& q = spec.params;
    for (double x : s.values) {
        double lp;
        switch (spec.kind) {
            case Kind::ED: lp = ed_logpdf(q[0], x); break;
            case Kind::GED: lp = ged_logpdf(q[0], q[1], x); break;
            case Kind::BED: lp = bed_logpdf(q[0], q[1], q[2], x); break;
            case Kind::BGED: lp = bged_logpdf(q[0], q[1], q[2], q[3], x); break;
            case Kind::WGED: lp = log_pdf(Params(q[0], q[1], q[2]), x); break;
        }
        total += lp;
    }
    return total;
}

double model_cdf(const ModelSpec& spec, double x) {
    const std::vector<double>& q = spec.params;
    switch (spec.kind) {
        case Kind::ED: return ed_cdf(q[0], x);
        case Kind::GED: return ged_cdf(q[0], q[1], x);
        case Kind::BED: return bed_cdf(q[0], q[1], q[2], x);
        case Kind::BGED: return bged_cdf(q[0], q[1], q[2], q[3], x);
        case Kind::WGED: return cdf(Params(q[0], q[1], q[2]), x);
    }
    throw std::logic_error("model_cdf: unknown kind");
}

GenericFit fit(Kind kind, const mle::Sample& s, const HarnessConfig& config) {
    switch (kind) {
        case Kind::ED: return ed_fit(s);
        case Kind::GED: return ged_fit(s, config);
        case Kind::BED: return bed_fit(s, config);
        case Kind::BGED: return bged_fit(s, config);
        case Kind::WGED: {
            mle::FitConfig fc;
            fc.tol = config.tol;
            fc.max_iter = config.max_iter;
            fc.grid_points = config.grid_points;
            fc.log_box = config.log_box;
            const mle::FitResult r = mle::fit_mle(s, fc);
            GenericFit g;
            g.spec = make_spec(Kind::WGED, {r.params.a, r.params.b, r.params.lambda});
            g.loglik = r.loglik;
            g.converged = r.converged;
            return g;
        }
    }
    throw std::logic_error("fit: unknown kind");
}

}  // namespace wged::models
