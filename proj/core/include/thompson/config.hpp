#pragma once

// Runtime configuration: tolerances and bounds, loadable from a JSON file.

#include <cstddef>
#include <string>

namespace thompson {

struct Config {
    double construction_tol = 1e-10;   // isometry / Pythagorean checks
    double coeff_tol = 1e-9;           // coefficient comparisons
    double psd_slack = 1e-8;           // Gram minimum-eigenvalue slack
    int max_state_sum_crossings = 24;  // bracket state-sum refusal bound
    std::size_t max_sparse_support = 1'000'000;
    bool shading_inner = false;        // orientability shading (calibrated)

    static Config load(const std::string& path);
    // Reads the path from THOMPSON_CONFIG when set; defaults otherwise.
    static Config from_environment();
};

}  // namespace thompson
