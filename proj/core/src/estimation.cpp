#include "wged/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wged::mle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_expm1(double y) {
    if (y > 36.0) {
        return y + std::log1p(-std::exp(-y));
    }
    return std::log(std::expm1(y));
}

}  // namespace

double Sample::mean() const {
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n());
}

Sample make_sample(std::vector<double> values) {
    if (values.empty()) {
        throw std::domain_error("make_sample: sample is empty");
    }
    for (double v : values) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw std::domain_error("make_sample: values must be positive and finite");
        }
    }
    std::sort(values.begin(), values.end());
    return Sample{std::move(values)};
}

double log_likelihood(const Params& p, const Sample& s) {
    const double n = static_cast<double>(s.n());
    double sum_x = 0.0, sum_lt = 0.0, sum_tb = 0.0;
    for (double x : s.values) {
        const double lt = log_expm1(p.lambda * x);
        const double blt = p.b * lt;
        if (blt > 700.0) {
            return -kInf;
        }
        sum_x += x;
        sum_lt += lt;
        sum_tb += std::exp(blt);
    }
    return n * std::log(p.a * p.b * p.lambda) + p.lambda * sum_x + (p.b - 1.0) * sum_lt -
           p.a * sum_tb;
}

std::array<double, 3> score(const Params& p, const Sample& s) {
    const double n = static_cast<double>(s.n());
    double sum_x = 0.0, sum_lt = 0.0, sum_tb = 0.0, sum_tb_lt = 0.0;
    double sum_xet = 0.0, sum_xetb = 0.0;
    for (double x : s.values) {
        const double y = p.lambda * x;
        const double lt = log_expm1(y);
        const double tb = std::exp(p.b * lt);
        sum_x += x;
        sum_lt += lt;
        sum_tb += tb;
        sum_tb_lt += tb * lt;
        sum_xet += x * std::exp(y - lt);                   // x E / T
        sum_xetb += x * std::exp(y + (p.b - 1.0) * lt);    // x E T^{b-1}
    }
    return {
        n / p.a - sum_tb,
        n / p.b + sum_lt - p.a * sum_tb_lt,
        n / p.lambda + sum_x + (p.b - 1.0) * sum_xet - p.a * p.b * sum_xetb,
    };
}

double profile_a(double b, double lambda, const Sample& s) {
    if (!(b > 0.0) || !(lambda > 0.0)) {
        throw std::domain_error("profile_a: b and lambda must be positive");
    }
    double sum_tb = 0.0;
    for (double x : s.values) {
        sum_tb += std::exp(b * log_expm1(lambda * x));
    }
    if (!std::isfinite(sum_tb)) {
        throw std::overflow_error("profile_a: sum of (e^{lambda x} - 1)^b overflows");
    }
    return static_cast<double>(s.n()) / sum_tb;
}

numerics::SymMatrix3 observed_information(const Params& p, const Sample& s) {
    const double n = static_cast<double>(s.n());
    const double a = p.a, b = p.b, lam = p.lambda;
    double s_tb_lt = 0.0, s_xetb = 0.0, s_tb_lt2 = 0.0, s_xet = 0.0;
    double s_xetb_cross = 0.0, s_x2et2 = 0.0, s_x2e_tb2 = 0.0;
    for (double x : s.values) {
        const double y = lam * x;
        const double lt = log_expm1(y);
        const double tb = std::exp(b * lt);
        const double e_over_t = std::exp(y - lt);
        const double e_tbm1 = std::exp(y + (b - 1.0) * lt);
        const double e = std::exp(y);
        s_tb_lt += tb * lt;
        s_tb_lt2 += tb * lt * lt;
        s_xetb += x * e_tbm1;
        s_xet += x * e_over_t;
        s_xetb_cross += x * e_tbm1 * (b * lt + 1.0);
        s_x2et2 += x * x * std::exp(y - 2.0 * lt);         // x^2 E / T^2
        s_x2e_tb2 += x * x * e * (b * e - 1.0) * std::exp((b - 2.0) * lt);
    }
    numerics::SymMatrix3 info;
    info.set(0, 0, n / (a * a));
    info.set(0, 1, s_tb_lt);
    info.set(0, 2, b * s_xetb);
    info.set(1, 1, n / (b * b) + a * s_tb_lt2);
    info.set(1, 2, -s_xet + a * s_xetb_cross);
    info.set(2, 2, n / (lam * lam) + (b - 1.0) * s_x2et2 + a * b * s_x2e_tb2);
    return info;
}

std::array<Interval, 3> wald_ci(const FitResult& fit, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("wald_ci: delta must lie in (0, 1)");
    }
    const double z = numerics::std_normal_quantile(1.0 - delta / 2.0);
    const double est[3] = {fit.params.a, fit.params.b, fit.params.lambda};
    std::array<Interval, 3> out;
    for (int i = 0; i < 3; ++i) {
        const double half = z * fit.std_errors[i];
        out[i] = {std::max(0.0, est[i] - half), est[i] + half};
    }
    return out;
}

FitResult fit_mle(const Sample& s, const FitConfig& config) {
    if (s.n() < 4) {
        throw std::domain_error("fit_mle: at least 4 observations required");
    }
    if (s.values.front() == s.values.back()) {
        throw std::domain_error("fit_mle: degenerate sample (all values equal)");
    }
    const double mean = s.mean();
    const double lam_lo = config.lambda_min > 0.0 ? config.lambda_min : 0.1 / mean;
    const double lam_hi = config.lambda_max > 0.0 ? config.lambda_max : 4.0 / mean;

    auto objective = [&s, &config](const std::vector<double>& v) {
        if (std::fabs(v[0]) > config.log_box || std::fabs(v[1]) > config.log_box) {
            return kInf;
        }
        const double b = std::exp(v[0]);
        const double lam = std::exp(v[1]);
        double a;
        try {
            a = profile_a(b, lam, s);
        } catch (const std::overflow_error&) {
            return kInf;
        }
        if (!std::isfinite(a) || a <= 0.0) {
            return kInf;
        }
        const double ll = log_likelihood(Params(a, b, lam), s);
        return std::isfinite(ll) ? -ll : kInf;
    };

    std::vector<std::vector<double>> starts;
    const int g = std::max(1, config.grid_points);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double fb = g == 1 ? 0.5 : static_cast<double>(i) / (g - 1);
            const double fl = g == 1 ? 0.5 : static_cast<double>(j) / (g - 1);
            const double lb = std::log(config.b_min) + fb * (std::log(config.b_max) - std::log(config.b_min));
            const double ll = std::log(lam_lo) + fl * (std::log(lam_hi) - std::log(lam_lo));
            starts.push_back({lb, ll});
        }
    }

    const numerics::OptimResult opt =
        numerics::multistart_minimize(objective, starts, config.tol, config.max_iter);

    const double b_hat = std::exp(opt.argmin[0]);
    const double lam_hat = std::exp(opt.argmin[1]);
    const double a_hat = profile_a(b_hat, lam_hat, s);

    FitResult fit;
    fit.params = Params(a_hat, b_hat, lam_hat);
    fit.loglik = log_likelihood(fit.params, s);
    fit.converged = opt.converged;
    fit.n_restarts = opt.restarts_used;
    fit.cov = numerics::invert_sym3(observed_information(fit.params, s));
    for (int i = 0; i < 3; ++i) {
        const double v = fit.cov(i, i);
        fit.std_errors[i] = v >= 0.0 ? std::sqrt(v) : std::numeric_limits<double>::quiet_NaN();
    }
    const auto ci = wald_ci(fit, 1.0 - config.level);
    for (int i = 0; i < 3; ++i) {
        fit.ci_lower[i] = ci[i].lower;
        fit.ci_upper[i] = ci[i].upper;
    }
    return fit;
}

ProfileCurve profile_loglik(const Sample& s, Axis axis, const std::vector<double>& grid,
                            const Params& at) {
    ProfileCurve curve;
    curve.axis = axis;
    curve.grid = grid;
    curve.loglik.reserve(grid.size());
    for (double g : grid) {
        if (!(g > 0.0)) {
            throw std::domain_error("profile_loglik: grid values must be positive");
        }
        Params p = at;
        switch (axis) {
            case Axis::a: p.a = g; break;
            case Axis::b: p.b = g; break;
            case Axis::lambda: p.lambda = g; break;
        }
        curve.loglik.push_back(log_likelihood(p, s));
    }
    return curve;
}

}  // namespace wged::mle
