#ifndef WGED_DATASETS_HPP
#define WGED_DATASETS_HPP

#include <vector>

namespace wged::datasets {

// Breaking strengths of 63 glass fibres of length 1.5 cm (measurement units
// unknown); the case-study dataset behind the "glassfibre" tag.
const std::vector<double>& glass_fibre();

}  // namespace wged::datasets

#endif
