#ifndef WGED_CLI_COMMANDS_HPP
#define WGED_CLI_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wged/gof.hpp"

namespace wged::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_no_convergence = 2;

struct Options {
    std::string data = "glassfibre";
    bool model_given = false;
    std::vector<std::string> models;
    bool params_given = false;
    std::vector<double> params;
    std::vector<std::string> which = {"cdf"};
    std::string axis = "lambda";
    bool grid_given = false;
    double grid_min = 0.0;
    double grid_max = 0.0;
    int grid_points = 0;
    std::uint64_t seed = 0;
    std::uint64_t n_draws = 0;
    double level = 0.95;
    double tol = 1e-10;
    int starts = 5;
    int max_iter = 20000;
    bool json = false;
    bool csv = false;
    gof::PvalueMethod pvalue = gof::PvalueMethod::exact;
};

// Each command writes its report or table to `out` and returns the process
// exit code: 0 on success, 2 when a fit failed to converge. Usage and IO
// problems are thrown and mapped to exit code 1 by the caller.
int cmd_fit(const Options& opt, std::ostream& out);
int cmd_compare(const Options& opt, std::ostream& out);
int cmd_curves(const Options& opt, std::ostream& out);
int cmd_overlay(const Options& opt, std::ostream& out);
int cmd_profile(const Options& opt, std::ostream& out);
int cmd_sample(const Options& opt, std::ostream& out);

}  // namespace wged::cli

#endif
