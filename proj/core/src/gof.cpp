#include "wged/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wged/numerics.hpp"

namespace wged::gof {

double ks_statistic(const mle::Sample& s, const std::function<double(double)>& cdf) {
    const std::size_t n = s.n();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(s.values[i]);
        const double upper = static_cast<double>(i + 1) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(upper, lower));
    }
    return d;
}

namespace {

// Marsaglia-Tsang-Wang evaluation of P(D_n < d).
double ks_cdf_exact(double d, int n) {
    if (d <= 0.0) return 0.0;
    if (d >= 1.0) return 1.0;
    const double nd = n * d;
    const int k = static_cast<int>(std::ceil(nd));
    const int m = 2 * k - 1;
    const double h = k - nd;

    std::vector<double> big_h(m * m, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i - j + 1 >= 0) {
                big_h[i * m + j] = 1.0;
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        big_h[i * m] -= std::pow(h, i + 1);
        big_h[(m - 1) * m + i] -= std::pow(h, m - i);
    }
    big_h[(m - 1) * m] += (2.0 * h - 1.0 > 0.0) ? std::pow(2.0 * h - 1.0, m) : 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i - j + 1 > 0) {
                for (int g = 1; g <= i - j + 1; ++g) {
                    big_h[i * m + j] /= g;
                }
            }
        }
    }

    // H^n with power-of-ten rescaling to dodge overflow.
    int exponent = 0;
    std::vector<double> q(big_h);
    std::vector<double> scratch(m * m);
    auto matmul = [m, &scratch](std::vector<double>& a, const std::vector<double>& b) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double sum = 0.0;
                for (int l = 0; l < m; ++l) {
                    sum += a[i * m + l] * b[l * m + j];
                }
                scratch[i * m + j] = sum;
            }
        }
        a.swap(scratch);
    };
    int remaining = n - 1;
    std::vector<double> base(big_h);
    int base_exponent = 0;
    while (remaining > 0) {
        if (remaining & 1) {
            matmul(q, base);
            exponent += base_exponent;
            if (q[(k - 1) * m + (k - 1)] > 1e140) {
                for (double& v : q) v *= 1e-140;
                exponent += 140;
            }
        }
        remaining >>= 1;
        if (remaining > 0) {
            matmul(base, base);
            base_exponent *= 2;
            if (base[(k - 1) * m + (k - 1)] > 1e140) {
                for (double& v : base) v *= 1e-140;
                base_exponent += 140;
            }
        }
    }

    double s = q[(k - 1) * m + (k - 1)];
    for (int i = 1; i <= n; ++i) {
        s *= static_cast<double>(i) / n;
        if (s < 1e-140) {
            s *= 1e140;
            exponent -= 140;
        }
    }
    return s * std::pow(10.0, exponent);
}

double ks_sf_asymptotic(double d, std::size_t n) {
    if (d <= 0.0) return 1.0;
    const double t = 2.0 * d * d * static_cast<double>(n);
    double sum = 0.0;
    for (int k = 1; k <= 100000; ++k) {
        const double term = std::exp(-t * k * k);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-12) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_pvalue(double d, std::size_t n, PvalueMethod method) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::domain_error("ks_pvalue: d must lie in [0, 1]");
    }
    if (n == 0) {
        throw std::domain_error("ks_pvalue: n must be positive");
    }
    if (method == PvalueMethod::exact) {
        return std::clamp(1.0 - ks_cdf_exact(d, static_cast<int>(n)), 0.0, 1.0);
    }
    return ks_sf_asymptotic(d, n);
}

Criteria information_criteria(double loglik, int k, std::size_t n) {
    if (k < 0) {
        throw std::domain_error("information_criteria: k must be nonnegative");
    }
    if (n <= static_cast<std::size_t>(k) + 1) {
        throw std::domain_error("information_criteria: need n > k + 1 for AICc");
    }
    const double nn = static_cast<double>(n);
    Criteria c;
    c.aic = 2.0 * k - 2.0 * loglik;
    c.aicc = c.aic + 2.0 * k * (k + 1.0) / (nn - k - 1.0);
    c.bic = k * std::log(nn) - 2.0 * loglik;
    c.hqic = 2.0 * k * std::log(std::log(nn)) - 2.0 * loglik;
    return c;
}

GofReport make_report(const mle::Sample& s, const std::function<double(double)>& cdf,
                      double loglik, int k, PvalueMethod method) {
    GofReport r;
    r.ks_stat = ks_statistic(s, cdf);
    r.ks_pvalue = ks_pvalue(r.ks_stat, s.n(), method);
    const Criteria c = information_criteria(loglik, k, s.n());
    r.aic = c.aic;
    r.aicc = c.aicc;
    r.bic = c.bic;
    r.hqic = c.hqic;
    r.loglik = loglik;
    r.k = k;
    r.n = s.n();
    return r;
}

KmCurve kaplan_meier(const mle::Sample& s) {
    KmCurve curve;
    const int n = static_cast<int>(s.n());
    int i = 0;
    int remaining = n;
    while (i < n) {
        int ties = 1;
        while (i + ties < n && s.values[i + ties] == s.values[i]) {
            ++ties;
        }
        curve.times.push_back(s.values[i]);
        curve.at_risk.push_back(remaining);
        curve.events.push_back(ties);
        remaining -= ties;
        curve.survival.push_back(static_cast<double>(remaining) / n);
        i += ties;
    }
    return curve;
}

}  // namespace wged::gof
