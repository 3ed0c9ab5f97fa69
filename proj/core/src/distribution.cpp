#include "wged/distribution.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "wged/numerics.hpp"

namespace wged {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ln(e^y - 1) without overflow for large y.
double log_expm1(double y) {
    if (y > 36.0) {
        return y + std::log1p(-std::exp(-y));
    }
    return std::log(std::expm1(y));
}

void check_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::domain_error(std::string("wged::Params: ") + name + " must be positive and finite");
    }
}

}  // namespace

Params::Params(double a_, double b_, double lambda_) : a(a_), b(b_), lambda(lambda_) {
    check_positive(a, "a");
    check_positive(b, "b");
    check_positive(lambda, "lambda");
}

double log_pdf(const Params& p, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_pdf: x must be positive");
    }
    const double lt = log_expm1(p.lambda * x);
    const double blt = p.b * lt;
    if (blt > 700.0) {
        return -kInf;
    }
    return std::log(p.a * p.b * p.lambda) + p.lambda * x + (p.b - 1.0) * lt -
           p.a * std::exp(blt);
}

double pdf(const Params& p, double x) {
    if (x < 0.0) {
        throw std::domain_error("pdf: x must be nonnegative");
    }
    if (x == 0.0) {
        if (p.b < 1.0) {
            throw std::domain_error("pdf: diverges at x=0 for b < 1");
        }
        return p.b == 1.0 ? p.a * p.lambda : 0.0;
    }
    return std::exp(log_pdf(p, x));
}

double cumulative_hazard(const Params& p, double x) {
    if (x < 0.0) {
        throw std::domain_error("cumulative_hazard: x must be nonnegative");
    }
    if (x == 0.0) {
        return 0.0;
    }
    return std::exp(std::log(p.a) + p.b * log_expm1(p.lambda * x));
}

double cdf(const Params& p, double x) {
    if (x == 0.0) {
        return 0.0;
    }
    return -std::expm1(-cumulative_hazard(p, x));
}

double survival(const Params& p, double x) {
    if (x == 0.0) {
        return 1.0;
    }
    return std::exp(-cumulative_hazard(p, x));
}

double hazard(const Params& p, double x) {
    if (x < 0.0) {
        throw std::domain_error("hazard: x must be nonnegative");
    }
    if (x == 0.0) {
        if (p.b < 1.0) {
            throw std::domain_error("hazard: diverges at x=0 for b < 1");
        }
        return p.b == 1.0 ? p.a * p.lambda : 0.0;
    }
    const double lt = log_expm1(p.lambda * x);
    return std::exp(std::log(p.a * p.b * p.lambda) + p.lambda * x + (p.b - 1.0) * lt);
}

double reversed_hazard(const Params& p, double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("reversed_hazard: x must be positive");
    }
    return pdf(p, x) / cdf(p, x);
}

double quantile(const Params& p, double q) {
    if (!(q >= 0.0 && q < 1.0)) {
        throw std::domain_error("quantile: q must lie in [0, 1)");
    }
    const double t = std::pow(-std::log1p(-q) / p.a, 1.0 / p.b);
    return std::log1p(t) / p.lambda;
}

double median(const Params& p) {
    return quantile(p, 0.5);
}

namespace {

// Slope of the log-density: lambda + (b-1) lambda E/T - a b lambda E T^{b-1},
// with E = e^{lambda x}, T = E - 1.
double log_pdf_slope(const Params& p, double x) {
    const double y = p.lambda * x;
    const double lt = log_expm1(y);
    const double e_over_t = std::exp(y - lt);
    const double e_tbm1 = std::exp(y + (p.b - 1.0) * lt);
    return p.lambda * (1.0 + (p.b - 1.0) * e_over_t - p.a * p.b * e_tbm1);
}

}  // namespace

double mode(const Params& p) {
    const double lo = 1e-9 / p.lambda;
    if (!(log_pdf_slope(p, lo) > 0.0)) {
        throw std::domain_error("mode: density has no interior maximum for these parameters");
    }
    double hi = 1.0 / p.lambda;
    int doublings = 0;
    while (log_pdf_slope(p, hi) > 0.0) {
        hi *= 2.0;
        if (++doublings > 64) {
            throw std::domain_error("mode: log-density slope never changes sign");
        }
    }
    return numerics::brent_root([&p](double x) { return log_pdf_slope(p, x); }, lo, hi, 1e-12);
}

QuantileMeasures quantile_measures(const Params& p) {
    const double q1 = quantile(p, 0.25);
    const double q2 = quantile(p, 0.5);
    const double q3 = quantile(p, 0.75);
    const double iqr = q3 - q1;
    QuantileMeasures m;
    m.bowley_skewness = (q3 - 2.0 * q2 + q1) / iqr;
    m.moors_kurtosis =
        (quantile(p, 0.875) - quantile(p, 0.625) - quantile(p, 0.375) + quantile(p, 0.125)) / iqr;
    return m;
}

double raw_moment(const Params& p, int r, double tol) {
    if (r < 1) {
        throw std::domain_error("raw_moment: r must be a positive integer");
    }
    auto integrand = [&p, r](double x) {
        if (x <= 0.0) {
            return 0.0;
        }
        const double lp = log_pdf(p, x);
        if (lp == -kInf) {
            return 0.0;
        }
        return std::exp(r * std::log(x) + lp);
    };
    return numerics::integrate_semi_infinite(integrand, tol).value;
}

double SeriesMoment::last_shell_magnitude() const {
    return shells.empty() ? 0.0 : std::fabs(shells.back());
}

SeriesMoment raw_moment_series(const Params& p, int r, int i_max, int j_max, int k_max) {
    if (r < 1 || i_max < 0 || j_max < 1 || k_max < 1) {
        throw std::domain_error("raw_moment_series: r >= 1 and truncation bounds >= 1 required");
    }
    using numerics::ln_gamma;
    SeriesMoment out;
    out.value = 0.0;
    const double ln_a = std::log(p.a);
    const double ln_b = std::log(p.b);
    const double ln_lam = std::log(p.lambda);
    for (int i = 0; i <= i_max; ++i) {
        const double bi1 = p.b * (i + 1);
        double shell = 0.0;
        for (int j = 0; j <= j_max; ++j) {
            const double beta = bi1 + j - 1.0;
            const bool beta_integral = std::fabs(beta - std::round(beta)) < 1e-12;
            const double base = (i + 1) * ln_a + ln_b + ln_gamma(bi1 + j + 1.0) +
                                ln_gamma(r + 1.0) - ln_gamma(i + 1.0) - ln_gamma(j + 1.0) -
                                ln_gamma(bi1 + 1.0) - r * ln_lam;
            // Generalized binomial C(beta, k) accumulated in log magnitude
            // plus sign; for integral beta the k-sum terminates at k = beta.
            double ln_binom = 0.0;
            double sign = 1.0;
            for (int k = 0; k <= k_max; ++k) {
                if (beta_integral && beta >= 0.0 && k > std::llround(beta)) {
                    break;
                }
                if (k > 0) {
                    const double factor = beta - (k - 1);
                    if (factor == 0.0) {
                        break;
                    }
                    ln_binom += std::log(std::fabs(factor));
                    sign *= factor > 0.0 ? 1.0 : -1.0;
                }
                const double ln_term =
                    base + ln_binom - ln_gamma(k + 1.0) - (r + 1.0) * std::log(k + 1.0);
                if (ln_term > 709.0) {
                    throw std::overflow_error("raw_moment_series: term exceeds representable range");
                }
                const double parity = ((i + k) % 2 == 0) ? 1.0 : -1.0;
                shell += parity * sign * std::exp(ln_term);
            }
        }
        out.shells.push_back(shell);
        out.value += shell;
    }
    return out;
}

double mgf(const Params& p, double t, double tol) {
    auto integrand = [&p, t](double x) {
        if (x <= 0.0) {
            return 0.0;
        }
        const double lp = log_pdf(p, x);
        if (lp == -kInf) {
            return 0.0;
        }
        return std::exp(t * x + lp);
    };
    // The exponential tilt must not outrun the tail; probe three far points.
    const double x0 = quantile(p, 1.0 - 1e-12);
    const double v0 = integrand(x0);
    const double v1 = integrand(x0 + 5.0 / p.lambda);
    const double v2 = integrand(x0 + 10.0 / p.lambda);
    if (v2 > v1 || (v1 > v0 && v1 > 1.0)) {
        throw std::runtime_error("mgf: integrand fails to decay for this t");
    }
    return numerics::integrate_semi_infinite(integrand, tol).value;
}

namespace {

void check_order_indices(int r, int n) {
    if (r < 1 || n < 1 || r > n) {
        throw std::out_of_range("order statistic index r must lie in [1, n]");
    }
}

}  // namespace

double order_stat_pdf(const Params& p, int r, int n, double x) {
    check_order_indices(r, n);
    if (!(x > 0.0)) {
        throw std::domain_error("order_stat_pdf: x must be positive");
    }
    const double f = pdf(p, x);
    const double big_f = cdf(p, x);
    const double s = survival(p, x);
    const double ln_b = numerics::ln_beta(static_cast<double>(r), static_cast<double>(n - r + 1));
    return std::exp(-ln_b) * std::pow(big_f, r - 1) * std::pow(s, n - r) * f;
}

double order_stat_pdf_mixture(const Params& p, int r, int n, double x) {
    check_order_indices(r, n);
    if (!(x > 0.0)) {
        throw std::domain_error("order_stat_pdf_mixture: x must be positive");
    }
    using numerics::ln_gamma;
    double total = 0.0;
    for (int i = 0; i <= n - r; ++i) {
        for (int j = 0; j <= i + r - 1; ++j) {
            const double ln_coef = ln_gamma(n + 1.0) - ln_gamma(static_cast<double>(r)) -
                                   ln_gamma(i + 1.0) - ln_gamma(n - r - i + 1.0) +
                                   ln_gamma(static_cast<double>(i + r)) - ln_gamma(j + 1.0) -
                                   ln_gamma(static_cast<double>(i + r - j)) -
                                   std::log(j + 1.0);
            const double parity = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            const Params scaled((j + 1.0) * p.a, p.b, p.lambda);
            total += parity * std::exp(ln_coef) * pdf(scaled, x);
        }
    }
    return total;
}

std::vector<double> sample(const Params& p, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // 53-bit uniform in (0, 1); avoids std::uniform_real_distribution so
        // streams are identical across standard library implementations.
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        out.push_back(quantile(p, u));
    }
    return out;
}

}  // namespace wged
