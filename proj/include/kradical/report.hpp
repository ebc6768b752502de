#pragma once

#include <string>

#include "kradical/classifier.hpp"

namespace kradical {

inline constexpr int kReportVersion = 1;

// JSON report for one analysis run. Keys: version, input, precision_bits,
// factors:[{degree, coeffs, passport, group:{name, order, primitive},
// k_factor}], overall_k, and answer_for_k when answer_k >= 1. Factors are
// listed outermost first, coefficients ascending as exact strings, group
// order as a decimal string. precision_bits is the largest working precision
// any factor needed (0 when no ball arithmetic ran). The output contains no
// timing or environment data and is byte-identical across runs.
std::string report_json(const std::string& input, const KCertificate& cert,
                        int answer_k = 0);

// Human rendering of the same data; elapsed seconds are shown here (when
// nonnegative) and never enter the JSON.
std::string report_text(const std::string& input, const KCertificate& cert,
                        int answer_k = 0, double elapsed = -1.0);

}  // namespace kradical
