#include "thompson/config.hpp"

#include "thompson/exact.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace thompson {

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw domain_error("bad config JSON: " + std::string(e.what()));
    }
    Config c;
    if (j.contains("construction_tol")) c.construction_tol = j["construction_tol"].get<double>();
    if (j.contains("coeff_tol")) c.coeff_tol = j["coeff_tol"].get<double>();
    if (j.contains("psd_slack")) c.psd_slack = j["psd_slack"].get<double>();
    if (j.contains("max_state_sum_crossings"))
        c.max_state_sum_crossings = j["max_state_sum_crossings"].get<int>();
    if (j.contains("max_sparse_support"))
        c.max_sparse_support = j["max_sparse_support"].get<std::size_t>();
    if (j.contains("shading_inner")) c.shading_inner = j["shading_inner"].get<bool>();
    return c;
}

Config Config::from_environment() {
    const char* path = std::getenv("THOMPSON_CONFIG");
    if (path && *path) return load(path);
    return Config{};
}

}  // namespace thompson
