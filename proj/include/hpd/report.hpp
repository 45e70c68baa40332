#ifndef HPD_REPORT_HPP
#define HPD_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hpd {

// Machine-readable run record: configuration echo, content hashes of every
// input file, the result payload, and wall time. Two runs with identical
// arguments and input bytes serialize identically except for wall_time_ms.
struct ReportEnvelope {
    std::string subcommand;
    std::uint64_t seed = 0;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, content hash hex)
    nlohmann::json result = nlohmann::json::object();
    double wall_time_ms = 0.0;

    // Hashes the file's bytes and records it under `path`.
    void add_input(const std::string& path);
    nlohmann::json to_json() const;
    std::string to_string() const;
};

// Writes the serialized envelope to the path, or to standard output when the
// path is "-".
void write_report(const ReportEnvelope& env, const std::string& out_path);

}  // namespace hpd

#endif
