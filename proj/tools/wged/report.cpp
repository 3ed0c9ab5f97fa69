#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wged::cli {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string cell6(double v) { return std::isnan(v) ? std::string() : fmt("%.6g", v); }
std::string cell17(double v) { return std::isnan(v) ? std::string() : fmt("%.17g", v); }

nlohmann::ordered_json json_number(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    return v;
}

// Left-aligned fixed-width rendering of a list of string rows.
void write_aligned(const std::vector<std::vector<std::string>>& rows, std::ostream& out,
                   const std::string& indent) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) {
            width.resize(row.size(), 0);
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        std::string line = indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line.append(width[c] - row[c].size() + 2, ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << "\n";
    }
}

}  // namespace

const std::vector<std::string>& param_names(models::Kind kind) {
    static const std::vector<std::string> ed{"lambda"};
    static const std::vector<std::string> ged{"alpha", "lambda"};
    static const std::vector<std::string> bed{"a", "b", "lambda"};
    static const std::vector<std::string> bged{"a", "b", "alpha", "lambda"};
    static const std::vector<std::string> wged{"a", "b", "lambda"};
    switch (kind) {
        case models::Kind::ED: return ed;
        case models::Kind::GED: return ged;
        case models::Kind::BED: return bed;
        case models::Kind::BGED: return bged;
        case models::Kind::WGED: return wged;
    }
    throw std::logic_error("param_names: unknown kind");
}

std::string fmt6(double v) { return fmt("%.6g", v); }
std::string fmt17(double v) { return fmt("%.17g", v); }

nlohmann::ordered_json to_json(const ReportDocument& doc) {
    nlohmann::ordered_json root;
    root["schema"] = 1;
    root["version"] = WGED_VERSION_STRING;
    root["command"] = doc.command;
    root["dataset"] = {{"source", doc.source}, {"n", doc.n}};
    root["config"] = {{"seed", doc.seed},
                      {"tol", doc.tol},
                      {"starts", doc.starts},
                      {"level", doc.level},
                      {"pvalue", doc.pvalue_method}};
    root["models"] = nlohmann::ordered_json::array();
    for (const ModelBlock& block : doc.blocks) {
        const auto& names = param_names(block.spec.kind);
        nlohmann::ordered_json m;
        m["model"] = models::kind_name(block.spec.kind);
        m["converged"] = block.converged;
        nlohmann::ordered_json params;
        for (std::size_t i = 0; i < names.size(); ++i) {
            params[names[i]] = json_number(block.spec.params[i]);
        }
        m["params"] = params;
        if (block.intervals) {
            nlohmann::ordered_json se, lo, hi;
            for (std::size_t i = 0; i < names.size(); ++i) {
                se[names[i]] = json_number(block.intervals->std_errors[i]);
                lo[names[i]] = json_number(block.intervals->lower[i]);
                hi[names[i]] = json_number(block.intervals->upper[i]);
            }
            m["std_errors"] = se;
            m["ci_lower"] = lo;
            m["ci_upper"] = hi;
        }
        m["loglik"] = json_number(block.loglik);
        m["gof"] = {{"ks", json_number(block.gof.ks_stat)},
                    {"ks_pvalue", json_number(block.gof.ks_pvalue)},
                    {"aic", json_number(block.gof.aic)},
                    {"aicc", json_number(block.gof.aicc)},
                    {"bic", json_number(block.gof.bic)},
                    {"hqic", json_number(block.gof.hqic)}};
        root["models"].push_back(m);
    }
    return root;
}

void write_human(const ReportDocument& doc, std::ostream& out) {
    out << "data: " << doc.source << "    n: " << doc.n;
    if (doc.blocks.size() > 1) {
        out << "    ranked by AIC";
    }
    out << "\n\n";

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"model", "loglik", "K-S", "p-value", "AIC", "AICc", "BIC", "HQIC", "converged"});
    for (const ModelBlock& block : doc.blocks) {
        rows.push_back({models::kind_name(block.spec.kind), cell6(block.loglik),
                        cell6(block.gof.ks_stat), cell6(block.gof.ks_pvalue), cell6(block.gof.aic),
                        cell6(block.gof.aicc), cell6(block.gof.bic), cell6(block.gof.hqic),
                        block.converged ? "yes" : "no"});
    }
    write_aligned(rows, out, "  ");
    out << "\n";

    for (const ModelBlock& block : doc.blocks) {
        const auto& names = param_names(block.spec.kind);
        out << "  " << models::kind_name(block.spec.kind) << " parameters\n";
        std::vector<std::vector<std::string>> prows;
        if (block.intervals) {
            prows.push_back({"", "estimate", "std.error", "ci.lower", "ci.upper"});
            for (std::size_t i = 0; i < names.size(); ++i) {
                prows.push_back({names[i], cell6(block.spec.params[i]),
                                 cell6(block.intervals->std_errors[i]),
                                 cell6(block.intervals->lower[i]),
                                 cell6(block.intervals->upper[i])});
            }
        } else {
            prows.push_back({"", "estimate"});
            for (std::size_t i = 0; i < names.size(); ++i) {
                prows.push_back({names[i], cell6(block.spec.params[i])});
            }
        }
        write_aligned(prows, out, "    ");
    }
    out << "\n  p-value method: " << doc.pvalue_method << "    level: " << fmt6(doc.level) << "\n";
}

void write_csv(const CurveTable& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << cell17(row[c]) << (c + 1 < row.size() ? "," : "\n");
        }
    }
}

void write_human(const CurveTable& table, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(table.columns);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (double v : row) {
            cells.push_back(cell6(v));
        }
        rows.push_back(std::move(cells));
    }
    write_aligned(rows, out, "");
}

}  // namespace wged::cli
