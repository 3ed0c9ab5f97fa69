#include "wged/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wged::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive");
    }
    if (x < 0.5) {
        // Reflection keeps the series argument away from small x.
        return std::log(kPi / std::sin(kPi * x)) - ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        series += kLanczos[i] / (z + i);
    }
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

double ln_beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw std::domain_error("ln_beta: arguments must be positive");
    }
    if (p > q) {
        std::swap(p, q);
    }
    if (q >= 1e8 && p <= 1e3) {
        // ln Gamma(q) - ln Gamma(p+q) evaluated directly loses all precision
        // to cancellation for huge q; use the Stirling difference instead.
        return ln_gamma(p) - p * std::log(q) - p * (p - 1.0) / (2.0 * q);
    }
    return ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cont_frac(double a, double b, double x) {
    const int max_iter = 1000;
    const double fpmin = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) {
            return h;
        }
    }
    throw std::runtime_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double p, double q, double x) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw std::domain_error("regularized_incomplete_beta: shape parameters must be positive");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("regularized_incomplete_beta: x must lie in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = p * std::log(x) + q * std::log1p(-x) - ln_beta(p, q);
    if (x < (p + 1.0) / (p + q + 2.0)) {
        return std::exp(ln_front) * beta_cont_frac(p, q, x) / p;
    }
    return 1.0 - std::exp(ln_front) * beta_cont_frac(q, p, 1.0 - x) / q;
}

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("std_normal_quantile: p must lie strictly in (0, 1)");
    }
    // Acklam's rational approximation, then one Halley refinement via erfc.
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double u = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    } else if (p <= 1.0 - plow) {
        const double u = p - 0.5;
        const double r = u * u;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double u = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * kPi) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kGkNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double lo, hi, value, error;
};

// One G7-K15 panel on [lo, hi] of the transformed integrand.
Interval gk15(const std::function<double(double)>& g, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = g(center - half * kGkNodes[i]);
        fv[14 - i] = g(center + half * kGkNodes[i]);
    }
    fv[7] = g(center);
    double kronrod = 0.0;
    for (int i = 0; i < 7; ++i) {
        kronrod += kKronrodW[i] * (fv[i] + fv[14 - i]);
    }
    kronrod += kKronrodW[7] * fv[7];
    double gauss = kGaussW[3] * fv[7];
    for (int i = 0; i < 3; ++i) {
        gauss += kGaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    }
    const double value = kronrod * half;
    const double error = std::fabs((kronrod - gauss) * half);
    if (!std::isfinite(value)) {
        throw std::runtime_error("integrate_semi_infinite: integrand returned a non-finite value");
    }
    return {lo, hi, value, error};
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("integrate_semi_infinite: tol must be positive");
    }
    // x = t/(1-t) maps (0,1) onto (0,inf) with Jacobian 1/(1-t)^2.
    auto g = [&f](double t) {
        const double om = 1.0 - t;
        return f(t / om) / (om * om);
    };
    const int max_subdivisions = 2000;
    std::vector<Interval> work;
    work.push_back(gk15(g, 0.0, 0.5));
    work.push_back(gk15(g, 0.5, 1.0));
    int splits = 0;
    while (true) {
        double total = 0.0, err = 0.0;
        for (const Interval& iv : work) {
            total += iv.value;
            err += iv.error;
        }
        if (err <= tol) {
            return {total, err, splits};
        }
        if (splits >= max_subdivisions) {
            throw std::runtime_error("integrate_semi_infinite: failed to reach tolerance");
        }
        auto worst = std::max_element(work.begin(), work.end(),
                                      [](const Interval& a, const Interval& b) {
                                          return a.error < b.error;
                                      });
        const Interval split = *worst;
        const double mid = 0.5 * (split.lo + split.hi);
        *worst = gk15(g, split.lo, mid);
        work.push_back(gk15(g, mid, split.hi));
        ++splits;
    }
}

namespace {

double simplex_diameter(const std::vector<std::vector<double>>& verts) {
    double diam = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < verts[i].size(); ++k) {
                const double d = verts[i][k] - verts[j][k];
                d2 += d * d;
            }
            diam = std::max(diam, std::sqrt(d2));
        }
    }
    return diam;
}

}  // namespace

OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                        const std::vector<double>& start, double tol, int max_iter) {
    const std::size_t n = start.size();
    if (n == 0) {
        throw std::invalid_argument("nelder_mead: empty start vector");
    }
    const double f0 = objective(start);
    if (!std::isfinite(f0)) {
        throw std::invalid_argument("nelder_mead: objective not finite at start");
    }
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> verts(n + 1, start);
    std::vector<double> fvals(n + 1, f0);
    for (std::size_t i = 0; i < n; ++i) {
        double step = 0.05 * std::fabs(start[i]);
        if (step == 0.0) step = 0.00025;
        verts[i + 1][i] += step;
        fvals[i + 1] = objective(verts[i + 1]);
    }

    auto order = [&]() {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (fvals[a] != fvals[b]) return fvals[a] < fvals[b];
            return verts[a] < verts[b];
        });
        std::vector<std::vector<double>> v2(n + 1);
        std::vector<double> f2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            v2[i] = verts[idx[i]];
            f2[i] = fvals[idx[i]];
        }
        verts.swap(v2);
        fvals.swap(f2);
    };

    OptimResult result;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        const double spread = fvals[n] - fvals[0];
        if (std::isfinite(spread) && spread < tol && simplex_diameter(verts) < tol) {
            result.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += verts[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k) {
                p[k] = centroid[k] + coeff * (verts[n][k] - centroid[k]);
            }
            return p;
        };

        std::vector<double> xr = blend(-alpha);
        const double fr = objective(xr);
        if (fr < fvals[0]) {
            std::vector<double> xe = blend(-gamma);
            const double fe = objective(xe);
            if (fe < fr) {
                verts[n] = std::move(xe);
                fvals[n] = fe;
            } else {
                verts[n] = std::move(xr);
                fvals[n] = fr;
            }
        } else if (fr < fvals[n - 1]) {
            verts[n] = std::move(xr);
            fvals[n] = fr;
        } else {
            const bool outside = fr < fvals[n];
            std::vector<double> xc = blend(outside ? -rho : rho);
            const double fc = objective(xc);
            if (fc < (outside ? fr : fvals[n])) {
                verts[n] = std::move(xc);
                fvals[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t k = 0; k < n; ++k) {
                        verts[i][k] = verts[0][k] + sigma * (verts[i][k] - verts[0][k]);
                    }
                    fvals[i] = objective(verts[i]);
                }
            }
        }
    }
    order();
    result.argmin = verts[0];
    result.fmin = fvals[0];
    result.iterations = iter;
    result.restarts_used = 1;
    return result;
}

OptimResult multistart_minimize(const std::function<double(const std::vector<double>&)>& objective,
                                const std::vector<std::vector<double>>& starts,
                                double tol, int max_iter) {
    if (starts.empty()) {
        throw std::invalid_argument("multistart_minimize: no starts given");
    }
    OptimResult best;
    bool have_best = false;
    auto better = [](const OptimResult& a, const OptimResult& b) {
        if (a.converged != b.converged) return a.converged;
        if (a.fmin != b.fmin) return a.fmin < b.fmin;
        return a.argmin < b.argmin;
    };
    for (const std::vector<double>& s : starts) {
        OptimResult r = nelder_mead(objective, s, tol, max_iter);
        if (!have_best || better(r, best)) {
            best = std::move(r);
            have_best = true;
        }
    }
    best.restarts_used = static_cast<int>(starts.size());
    return best;
}

double brent_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0)) {
        throw std::invalid_argument("brent_root: root not bracketed");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) {
            return b;
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0.0 ? tol1 : -tol1);
        }
        fb = f(b);
    }
    return b;
}

int SymMatrix3::index(int i, int j) {
    if (i > j) std::swap(i, j);
    // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
    static const int map[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
    return map[i][j];
}

SymMatrix3 SymMatrix3::identity() {
    return diagonal(1.0, 1.0, 1.0);
}

SymMatrix3 SymMatrix3::diagonal(double d0, double d1, double d2) {
    SymMatrix3 m;
    m.set(0, 0, d0);
    m.set(1, 1, d1);
    m.set(2, 2, d2);
    return m;
}

double SymMatrix3::determinant() const {
    const SymMatrix3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) -
           m(0, 1) * (m(0, 1) * m(2, 2) - m(1, 2) * m(0, 2)) +
           m(0, 2) * (m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2));
}

SymMatrix3 invert_sym3(const SymMatrix3& m) {
    const double det = m.determinant();
    if (std::fabs(det) < 1e-300) {
        std::ostringstream msg;
        msg << "invert_sym3: matrix is singular (determinant " << det << ")";
        throw std::runtime_error(msg.str());
    }
    SymMatrix3 inv;
    inv.set(0, 0, (m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) / det);
    inv.set(0, 1, (m(0, 2) * m(1, 2) - m(0, 1) * m(2, 2)) / det);
    inv.set(0, 2, (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / det);
    inv.set(1, 1, (m(0, 0) * m(2, 2) - m(0, 2) * m(0, 2)) / det);
    inv.set(1, 2, (m(0, 1) * m(0, 2) - m(0, 0) * m(1, 2)) / det);
    inv.set(2, 2, (m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1)) / det);
    return inv;
}

}  // namespace wged::numerics
