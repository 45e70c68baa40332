#ifndef HPD_PROPERTY_HPP
#define HPD_PROPERTY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hpd/graph.hpp"

namespace hpd {

// Constants attached to a hereditary property for the attestation pipeline.
struct RemovalConstants {
    double delta = 0.0;   // density threshold in (0, 1]
    int M = 0;            // pattern-size bound, >= 1
    long long n0 = 0;     // minimum host size, >= 1
};

// A hereditary property given by its finite family of forbidden induced
// subgraphs, optionally with removal constants.
struct PropertySpec {
    std::vector<Graph> family;
    std::optional<RemovalConstants> removal;
};

// Validates family nonempty, every pattern nonempty, and removal constants in
// range when present.
void validate_property_spec(const PropertySpec& spec);

// JSON format: {"family": ["k3.el", ...], "removal": {"delta": .., "M": ..,
// "n0": ..}}; family entries are edge-list paths resolved relative to the
// spec file's directory.
PropertySpec load_property_spec_file(const std::string& path);

}  // namespace hpd

#endif
