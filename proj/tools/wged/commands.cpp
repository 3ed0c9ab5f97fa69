#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ingest.hpp"
#include "report.hpp"
#include "wged/distribution.hpp"
#include "wged/estimation.hpp"
#include "wged/models.hpp"
#include "wged/numerics.hpp"

namespace wged::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void usage_error(const std::string& msg) { throw std::runtime_error(msg); }

models::Kind single_model(const Options& opt) {
    if (!opt.model_given) {
        return models::Kind::WGED;
    }
    if (opt.models.size() != 1) {
        usage_error("expected exactly one model name in --model");
    }
    return models::kind_from_name(opt.models[0]);
}

std::vector<models::Kind> model_list(const Options& opt, std::vector<models::Kind> fallback) {
    if (!opt.model_given) {
        return fallback;
    }
    if (opt.models.empty()) {
        usage_error("empty model list in --model");
    }
    std::vector<models::Kind> kinds;
    kinds.reserve(opt.models.size());
    for (const std::string& name : opt.models) {
        kinds.push_back(models::kind_from_name(name));
    }
    return kinds;
}

mle::FitConfig fit_config(const Options& opt) {
    mle::FitConfig fc;
    fc.tol = opt.tol;
    fc.grid_points = opt.starts;
    fc.max_iter = opt.max_iter;
    fc.level = opt.level;
    return fc;
}

models::HarnessConfig harness_config(const Options& opt) {
    models::HarnessConfig hc;
    hc.tol = opt.tol;
    hc.grid_points = opt.starts;
    hc.max_iter = opt.max_iter;
    return hc;
}

ModelBlock fit_block(models::Kind kind, const mle::Sample& s, const Options& opt) {
    ModelBlock block;
    if (kind == models::Kind::WGED) {
        const mle::FitResult r = mle::fit_mle(s, fit_config(opt));
        block.spec = models::make_spec(kind, {r.params.a, r.params.b, r.params.lambda});
        block.converged = r.converged;
        block.loglik = r.loglik;
        IntervalBlock iv;
        iv.std_errors = r.std_errors;
        iv.lower = r.ci_lower;
        iv.upper = r.ci_upper;
        block.intervals = iv;
    } else {
        const models::GenericFit r = models::fit(kind, s, harness_config(opt));
        block.spec = r.spec;
        block.converged = r.converged;
        block.loglik = r.loglik;
    }
    const models::ModelSpec spec = block.spec;
    block.gof = gof::make_report(
        s, [spec](double x) { return models::model_cdf(spec, x); }, block.loglik,
        models::param_count(kind), opt.pvalue);
    return block;
}

ReportDocument base_document(const char* command, const Dataset& data, const Options& opt) {
    ReportDocument doc;
    doc.command = command;
    doc.source = data.source;
    doc.n = data.sample.n();
    doc.seed = opt.seed;
    doc.tol = opt.tol;
    doc.starts = opt.starts;
    doc.level = opt.level;
    doc.pvalue_method = opt.pvalue == gof::PvalueMethod::exact ? "exact" : "asymptotic";
    return doc;
}

int emit_report(const ReportDocument& doc, const Options& opt, std::ostream& out) {
    if (opt.json) {
        out << to_json(doc).dump(2) << "\n";
    } else {
        write_human(doc, out);
    }
    const bool ok = std::all_of(doc.blocks.begin(), doc.blocks.end(),
                                [](const ModelBlock& b) { return b.converged; });
    return ok ? exit_ok : exit_no_convergence;
}

void emit_table(const CurveTable& table, const Options& opt, std::ostream& out) {
    if (opt.csv) {
        write_csv(table, out);
    } else {
        write_human(table, out);
    }
}

double model_logpdf(const models::ModelSpec& spec, double x) {
    const std::vector<double>& q = spec.params;
    switch (spec.kind) {
        case models::Kind::ED: return models::ed_logpdf(q[0], x);
        case models::Kind::GED: return models::ged_logpdf(q[0], q[1], x);
        case models::Kind::BED: return models::bed_logpdf(q[0], q[1], q[2], x);
        case models::Kind::BGED: return models::bged_logpdf(q[0], q[1], q[2], q[3], x);
        case models::Kind::WGED: return log_pdf(Params(q[0], q[1], q[2]), x);
    }
    throw std::logic_error("model_logpdf: unknown kind");
}

double model_survival(const models::ModelSpec& spec, double x) {
    if (spec.kind == models::Kind::WGED) {
        return survival(Params(spec.params[0], spec.params[1], spec.params[2]), x);
    }
    return 1.0 - models::model_cdf(spec, x);
}

const std::vector<std::string>& curve_names() {
    static const std::vector<std::string> names{"pdf",    "cdf",       "sf",
                                                "hazard", "revhazard", "cumhazard"};
    return names;
}

double eval_curve(const models::ModelSpec& spec, const std::string& which, double x) {
    if (spec.kind == models::Kind::WGED) {
        const Params p(spec.params[0], spec.params[1], spec.params[2]);
        if (which == "pdf") return pdf(p, x);
        if (which == "cdf") return cdf(p, x);
        if (which == "sf") return survival(p, x);
        if (which == "hazard") return hazard(p, x);
        if (which == "revhazard") return reversed_hazard(p, x);
        if (which == "cumhazard") return cumulative_hazard(p, x);
    } else {
        if (which == "pdf") return std::exp(model_logpdf(spec, x));
        if (which == "cdf") return models::model_cdf(spec, x);
        if (which == "sf") return model_survival(spec, x);
        if (which == "hazard") return std::exp(model_logpdf(spec, x)) / model_survival(spec, x);
        if (which == "revhazard") {
            return std::exp(model_logpdf(spec, x)) / models::model_cdf(spec, x);
        }
        if (which == "cumhazard") return -std::log(model_survival(spec, x));
    }
    usage_error("unknown curve name: " + which);
}

double competitor_quantile(const models::ModelSpec& spec, double u) {
    const std::vector<double>& q = spec.params;
    switch (spec.kind) {
        case models::Kind::ED: return -std::log1p(-u) / q[0];
        case models::Kind::GED: return -std::log1p(-std::pow(u, 1.0 / q[0])) / q[1];
        default: break;
    }
    auto gap = [&](double x) { return models::model_cdf(spec, x) - u; };
    double hi = 1.0;
    while (gap(hi) < 0.0 && hi < 1e300) {
        hi *= 2.0;
    }
    return numerics::brent_root(gap, 0.0, hi, 1e-14);
}

// Competitor draws share the wged sampler's uniform stream construction so a
// seed means the same thing for every model.
std::vector<double> competitor_sample(const models::ModelSpec& spec, std::uint64_t n,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> draws;
    draws.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        draws.push_back(competitor_quantile(spec, u));
    }
    return draws;
}

}  // namespace

int cmd_fit(const Options& opt, std::ostream& out) {
    const Dataset data = ingest(opt.data);
    const models::Kind kind = single_model(opt);
    ReportDocument doc = base_document("fit", data, opt);
    doc.blocks.push_back(fit_block(kind, data.sample, opt));
    return emit_report(doc, opt, out);
}

int cmd_compare(const Options& opt, std::ostream& out) {
    const Dataset data = ingest(opt.data);
    const std::vector<models::Kind> kinds =
        model_list(opt, {models::Kind::ED, models::Kind::GED, models::Kind::BED,
                         models::Kind::BGED, models::Kind::WGED});
    ReportDocument doc = base_document("compare", data, opt);
    for (models::Kind kind : kinds) {
        doc.blocks.push_back(fit_block(kind, data.sample, opt));
    }
    std::stable_sort(doc.blocks.begin(), doc.blocks.end(),
                     [](const ModelBlock& x, const ModelBlock& y) { return x.gof.aic < y.gof.aic; });
    return emit_report(doc, opt, out);
}

int cmd_curves(const Options& opt, std::ostream& out) {
    const models::Kind kind = single_model(opt);
    if (!opt.params_given) {
        usage_error("curves requires --params");
    }
    const models::ModelSpec spec = models::make_spec(kind, opt.params);
    if (!opt.grid_given) {
        usage_error("curves requires --grid MIN:MAX:N");
    }
    if (!(opt.grid_min >= 0.0) || !(opt.grid_max > opt.grid_min) || opt.grid_points < 2) {
        usage_error("curves grid needs 0 <= MIN < MAX and N >= 2");
    }
    if (opt.which.empty()) {
        usage_error("empty curve list in --which");
    }
    for (const std::string& w : opt.which) {
        const auto& names = curve_names();
        if (std::find(names.begin(), names.end(), w) == names.end()) {
            usage_error("unknown curve name in --which: " + w);
        }
    }

    CurveTable table;
    table.columns.push_back("x");
    for (const std::string& w : opt.which) {
        table.columns.push_back(w);
    }
    for (int i = 0; i < opt.grid_points; ++i) {
        const double x =
            opt.grid_min + i * (opt.grid_max - opt.grid_min) / (opt.grid_points - 1);
        std::vector<double> row{x};
        for (const std::string& w : opt.which) {
            double v = kNaN;
            try {
                v = eval_curve(spec, w, x);
            } catch (const std::exception&) {
                v = kNaN;
            }
            row.push_back(std::isfinite(v) ? v : kNaN);
        }
        table.rows.push_back(std::move(row));
    }
    emit_table(table, opt, out);
    return exit_ok;
}

int cmd_overlay(const Options& opt, std::ostream& out) {
    const Dataset data = ingest(opt.data);
    const std::vector<models::Kind> kinds = model_list(opt, {models::Kind::WGED});
    const gof::KmCurve km = gof::kaplan_meier(data.sample);

    CurveTable table;
    table.columns = {"x", "km"};
    std::vector<models::ModelSpec> specs;
    bool all_converged = true;
    for (models::Kind kind : kinds) {
        const ModelBlock block = fit_block(kind, data.sample, opt);
        all_converged = all_converged && block.converged;
        specs.push_back(block.spec);
        table.columns.push_back(models::kind_name(kind));
    }
    for (std::size_t i = 0; i < km.times.size(); ++i) {
        std::vector<double> row{km.times[i], km.survival[i]};
        for (const models::ModelSpec& spec : specs) {
            row.push_back(model_survival(spec, km.times[i]));
        }
        table.rows.push_back(std::move(row));
    }
    emit_table(table, opt, out);
    return all_converged ? exit_ok : exit_no_convergence;
}

int cmd_profile(const Options& opt, std::ostream& out) {
    const Dataset data = ingest(opt.data);
    mle::Axis axis;
    if (opt.axis == "a") {
        axis = mle::Axis::a;
    } else if (opt.axis == "b") {
        axis = mle::Axis::b;
    } else if (opt.axis == "lambda") {
        axis = mle::Axis::lambda;
    } else {
        usage_error("unknown axis: " + opt.axis + " (expected a, b, or lambda)");
    }

    const mle::FitResult fit = mle::fit_mle(data.sample, fit_config(opt));
    const double center = axis == mle::Axis::a   ? fit.params.a
                          : axis == mle::Axis::b ? fit.params.b
                                                 : fit.params.lambda;
    double lo = 0.5 * center;
    double hi = 1.5 * center;
    int n = 41;
    if (opt.grid_given) {
        lo = opt.grid_min;
        hi = opt.grid_max;
        n = opt.grid_points;
        if (!(lo > 0.0) || !(hi > lo) || n < 2) {
            usage_error("profile grid needs 0 < MIN < MAX and N >= 2");
        }
    }
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = lo + i * (hi - lo) / (n - 1);
    }
    const mle::ProfileCurve curve = mle::profile_loglik(data.sample, axis, grid, fit.params);

    CurveTable table;
    table.columns = {opt.axis, "loglik"};
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        table.rows.push_back({curve.grid[i], curve.loglik[i]});
    }
    emit_table(table, opt, out);
    return fit.converged ? exit_ok : exit_no_convergence;
}

int cmd_sample(const Options& opt, std::ostream& out) {
    const models::Kind kind = single_model(opt);
    if (!opt.params_given) {
        usage_error("sample requires --params");
    }
    const models::ModelSpec spec = models::make_spec(kind, opt.params);
    if (opt.n_draws == 0) {
        usage_error("sample requires --n >= 1");
    }

    std::vector<double> draws;
    if (kind == models::Kind::WGED) {
        draws = sample(Params(spec.params[0], spec.params[1], spec.params[2]), opt.n_draws,
                       opt.seed);
    } else {
        draws = competitor_sample(spec, opt.n_draws, opt.seed);
    }
    for (double v : draws) {
        out << fmt17(v) << "\n";
    }
    return exit_ok;
}

}  // namespace wged::cli
