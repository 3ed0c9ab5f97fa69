#ifndef WGED_CLI_REPORT_HPP
#define WGED_CLI_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wged/gof.hpp"
#include "wged/models.hpp"

namespace wged::cli {

struct IntervalBlock {
    std::array<double, 3> std_errors;
    std::array<double, 3> lower;
    std::array<double, 3> upper;
};

struct ModelBlock {
    models::ModelSpec spec;
    bool converged = false;
    double loglik = 0.0;
    gof::GofReport gof;
    std::optional<IntervalBlock> intervals;  // attached for wged fits only
};

struct ReportDocument {
    std::string command;
    std::string source;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    int starts = 5;
    double level = 0.95;
    std::string pvalue_method;
    std::vector<ModelBlock> blocks;
};

// Parameter names in serialization order for each model kind.
const std::vector<std::string>& param_names(models::Kind kind);

// Fixed significant-digit formatting; the human tables use 6, csv uses 17
// (which round-trips doubles exactly).
std::string fmt6(double v);
std::string fmt17(double v);

nlohmann::ordered_json to_json(const ReportDocument& doc);
void write_human(const ReportDocument& doc, std::ostream& out);

struct CurveTable {
    std::vector<std::string> columns;       // first column is the abscissa
    std::vector<std::vector<double>> rows;  // NaN renders as a blank cell
};

void write_csv(const CurveTable& table, std::ostream& out);
void write_human(const CurveTable& table, std::ostream& out);

}  // namespace wged::cli

#endif
