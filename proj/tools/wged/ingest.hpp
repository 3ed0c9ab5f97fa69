#ifndef WGED_CLI_INGEST_HPP
#define WGED_CLI_INGEST_HPP

#include <string>

#include "wged/estimation.hpp"

namespace wged::cli {

struct Dataset {
    mle::Sample sample;
    std::string source;  // file path, or the embedded-dataset tag
};

// Reads whitespace/comma-separated positive decimals from a UTF-8 text file;
// everything after '#' on a line is a comment. The tag "glassfibre" loads the
// embedded 63-point dataset instead of touching the filesystem. Parse and
// positivity errors name the offending line.
Dataset ingest(const std::string& path_or_tag);

}  // namespace wged::cli

#endif
