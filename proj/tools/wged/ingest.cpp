#include "ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wged/datasets.hpp"

namespace wged::cli {

Dataset ingest(const std::string& path_or_tag) {
    if (path_or_tag == "glassfibre") {
        return {mle::make_sample(datasets::glass_fibre()), "glassfibre"};
    }
    std::ifstream in(path_or_tag);
    if (!in) {
        throw std::runtime_error("cannot open data file: " + path_or_tag);
    }
    std::vector<double> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        for (char& c : line) {
            if (c == ',') {
                c = ' ';
            }
        }
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            double v = 0.0;
            std::size_t used = 0;
            try {
                v = std::stod(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw std::runtime_error(path_or_tag + ":" + std::to_string(lineno) +
                                         ": not a number: '" + token + "'");
            }
            if (!std::isfinite(v) || v <= 0.0) {
                throw std::runtime_error(path_or_tag + ":" + std::to_string(lineno) +
                                         ": values must be positive, got '" + token + "'");
            }
            values.push_back(v);
        }
    }
    if (values.empty()) {
        throw std::runtime_error(path_or_tag + ": no data values found");
    }
    return {mle::make_sample(std::move(values)), path_or_tag};
}

}  // namespace wged::cli
