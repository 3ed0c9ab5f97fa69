#ifndef WGED_GOF_HPP
#define WGED_GOF_HPP

#include <functional>
#include <vector>

#include "wged/estimation.hpp"

namespace wged::gof {

// Two-sided Kolmogorov-Smirnov statistic
//   D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n)
// over the sorted sample; ties are left in place.
double ks_statistic(const mle::Sample& s, const std::function<double(double)>& cdf);

enum class PvalueMethod { exact, asymptotic };

// P(D_n >= d). The exact method uses the Marsaglia-Tsang-Wang matrix power
// for P(D_n < d); the asymptotic method sums 2 sum_k (-1)^{k-1} e^{-2 k^2 n d^2}.
double ks_pvalue(double d, std::size_t n, PvalueMethod method);

struct Criteria {
    double aic;
    double aicc;
    double bic;
    double hqic;
};

// AIC = 2k - 2L, AICc = AIC + 2k(k+1)/(n-k-1), BIC = k ln n - 2L,
// HQIC = 2k ln ln n - 2L. Throws std::domain_error when n <= k + 1.
Criteria information_criteria(double loglik, int k, std::size_t n);

struct GofReport {
    double ks_stat;
    double ks_pvalue;
    double aic, aicc, bic, hqic;
    double loglik;
    int k;
    std::size_t n;
};

GofReport make_report(const mle::Sample& s, const std::function<double(double)>& cdf,
                      double loglik, int k, PvalueMethod method = PvalueMethod::exact);

struct KmCurve {
    std::vector<double> times;     // distinct observed values, ascending
    std::vector<double> survival;  // value of the estimate just after each time
    std::vector<int> at_risk;
    std::vector<int> events;
};

// Kaplan-Meier estimator for a complete sample; equals 1 - ecdf with tied
// observations aggregated into single steps.
KmCurve kaplan_meier(const mle::Sample& s);

}  // namespace wged::gof

#endif
