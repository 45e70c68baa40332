#include "hpd/property.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "hpd/errors.hpp"
#include "json.hpp"

namespace hpd {

void validate_property_spec(const PropertySpec& spec) {
    if (spec.family.empty()) throw std::invalid_argument("property spec: empty forbidden family");
    for (const Graph& f : spec.family)
        if (f.n() < 1) throw std::invalid_argument("property spec: forbidden patterns must be nonempty");
    if (spec.removal) {
        const auto& r = *spec.removal;
        if (!(r.delta > 0.0 && r.delta <= 1.0))
            throw std::invalid_argument("property spec: delta must be in (0, 1]");
        if (r.M < 1) throw std::invalid_argument("property spec: M must be at least 1");
        if (r.n0 < 1) throw std::invalid_argument("property spec: n0 must be at least 1");
    }
}

PropertySpec load_property_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("family") || !j["family"].is_array())
        throw ParseError(path, 0, "expected object with a \"family\" array");

    PropertySpec spec;
    auto base = std::filesystem::path(path).parent_path();
    for (const auto& entry : j["family"]) {
        if (!entry.is_string()) throw ParseError(path, 0, "\"family\" entries must be edge-list paths");
        auto p = std::filesystem::path(entry.get<std::string>());
        if (p.is_relative()) p = base / p;
        spec.family.push_back(load_edge_list_file(p.string()));
    }
    if (j.contains("removal")) {
        const auto& r = j["removal"];
        if (!r.is_object() || !r.contains("delta") || !r.contains("M") || !r.contains("n0"))
            throw ParseError(path, 0, "\"removal\" needs \"delta\", \"M\" and \"n0\"");
        spec.removal = RemovalConstants{r["delta"].get<double>(), r["M"].get<int>(), r["n0"].get<long long>()};
    }
    try {
        validate_property_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, 0, e.what());
    }
    return spec;
}

}  // namespace hpd
