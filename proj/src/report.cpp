#include "hpd/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hpd/errors.hpp"
#include "hpd/hash.hpp"

namespace hpd {

std::string fnv1a64_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string fnv1a64_hex_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    return fnv1a64_hex(fnv1a64(bytes.data(), bytes.size()));
}

void ReportEnvelope::add_input(const std::string& path) {
    inputs.emplace_back(path, fnv1a64_hex_of_file(path));
}

nlohmann::json ReportEnvelope::to_json() const {
    nlohmann::json in_list = nlohmann::json::array();
    for (const auto& [path, hash] : inputs)
        in_list.push_back(nlohmann::json{{"path", path}, {"fnv1a64", hash}});
    return nlohmann::json{{"tool", "hpdist"},   {"subcommand", subcommand},
                          {"seed", seed},       {"config", config},
                          {"inputs", in_list},  {"result", result},
                          {"wall_time_ms", wall_time_ms}};
}

std::string ReportEnvelope::to_string() const { return to_json().dump(2) + "\n"; }

void write_report(const ReportEnvelope& env, const std::string& out_path) {
    const std::string text = env.to_string();
    if (out_path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError(out_path, 0, "cannot open file for writing");
    out << text;
}

}  // namespace hpd
