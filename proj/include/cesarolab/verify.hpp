#pragma once

#include <string>
#include <vector>

#include "cesarolab/fourier.hpp"

namespace cesarolab {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string ref;    // which identity this exercises (serialized as paper_ref)
    std::string error;  // non-empty when the check itself failed to run
};

// Suites: specfun, weyl, cesaro, spectra, fourier. "all" concatenates them.
std::vector<std::string> verify_suites();

std::vector<CheckResult> run_suite(const std::string& suite, const QuadSpec& q);

std::string report_to_json(const std::string& suite, const std::vector<CheckResult>& checks);

}  // namespace cesarolab
