#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include "json.hpp"

#include "hpd/errors.hpp"
#include "hpd/hash.hpp"
#include "hpd/report.hpp"

using namespace hpd;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "hpd_report_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string in_dir(const std::string& name) { return (work_dir() / name).string(); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

// Runs the installed binary through the shell and returns its exit status.
int run_cli(const std::string& args) {
    std::string cmd = std::string(HPDIST_BIN) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return false;
}

// Minimal checker for the subset of schema keywords the report schema uses.
void check_against(const nlohmann::json& schema, const nlohmann::json& value) {
    if (schema.contains("const")) CHECK(value == schema["const"]);
    if (schema.contains("type")) {
        INFO("expected type " << schema["type"].get<std::string>() << ", got " << value.dump());
        CHECK(type_matches(value, schema["type"].get<std::string>()));
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& opt : schema["enum"]) found = found || value == opt;
        CHECK(found);
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        CHECK(std::regex_search(value.get<std::string>(), re));
    }
    if (schema.contains("minimum") && value.is_number())
        CHECK(value.get<double>() >= schema["minimum"].get<double>());
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            INFO("required key " << key.get<std::string>());
            CHECK(value.contains(key.get<std::string>()));
        }
    if (value.is_object() && schema.contains("properties")) {
        if (schema.value("additionalProperties", nlohmann::json(true)) == false)
            for (const auto& [key, sub] : value.items()) {
                INFO("unexpected key " << key);
                CHECK(schema["properties"].contains(key));
            }
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) check_against(sub, value.at(key));
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value) check_against(schema["items"], item);
}

}  // namespace

TEST_CASE("content hash matches published test vectors") {
    CHECK(fnv1a64("", 0) == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a", 1) == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar", 6) == 0x85944171f73967e8ULL);
    CHECK(fnv1a64_hex(0) == "0000000000000000");
    CHECK(fnv1a64_hex(0xaf63dc4c8601ec8cULL) == "af63dc4c8601ec8c");

    std::string path = in_dir("hash_probe.txt");
    write_file(path, "a");
    CHECK(fnv1a64_hex_of_file(path) == "af63dc4c8601ec8c");
    CHECK_THROWS_AS(fnv1a64_hex_of_file(in_dir("no_such_file.txt")), ParseError);
}

TEST_CASE("report envelope serializes every field") {
    std::string input = in_dir("envelope_input.txt");
    write_file(input, "a");

    ReportEnvelope env;
    env.subcommand = "hom";
    env.seed = 7;
    env.config = {{"pattern", "k3.el"}};
    env.add_input(input);
    env.result = {{"value", 0.5}};
    env.wall_time_ms = 1.25;

    nlohmann::json j = env.to_json();
    CHECK(j["tool"] == "hpdist");
    CHECK(j["subcommand"] == "hom");
    CHECK(j["seed"] == 7);
    CHECK(j["config"]["pattern"] == "k3.el");
    REQUIRE(j["inputs"].size() == 1);
    CHECK(j["inputs"][0]["path"] == input);
    CHECK(j["inputs"][0]["fnv1a64"] == "af63dc4c8601ec8c");
    CHECK(j["result"]["value"] == 0.5);
    CHECK(j["wall_time_ms"] == 1.25);

    std::string text = env.to_string();
    CHECK(text.back() == '\n');
    CHECK(nlohmann::json::parse(text) == j);

    std::string out = in_dir("envelope_out.json");
    write_report(env, out);
    CHECK(read_json(out) == j);
}

TEST_CASE("cli exit codes follow the contract") {
    REQUIRE(run_cli("gen --type complete --n 6 --out " + in_dir("k6.el") + " --output " +
                    in_dir("gen6.json")) == 0);
    REQUIRE(run_cli("gen --type complete --n 3 --out " + in_dir("k3.el")) == 0);
    REQUIRE(run_cli("gen --type random --n 10 --p 0.5 --seed 3 --out " + in_dir("r10.el")) == 0);

    // Success carries a result payload.
    CHECK(run_cli("dist --kind edit " + in_dir("k6.el") + " " + in_dir("k6.el") + " --output " +
                  in_dir("dist0.json")) == 0);
    CHECK(read_json(in_dir("dist0.json"))["result"]["value"] == 0.0);

    // Unknown or missing subcommand: usage, exit 1.
    CHECK(run_cli("frobnicate") == 1);
    CHECK(run_cli("") == 1);

    // Bad inputs: exit 2.
    CHECK(run_cli("dist --kind edit " + in_dir("missing.el") + " " + in_dir("k6.el")) == 2);
    CHECK(run_cli("gen --type complete --n -3 --out " + in_dir("bad.el")) == 2);

    // Work beyond the exact-oracle cap: exit 3.
    write_file(in_dir("k3_spec.json"), R"({"family": ["k3.el"]})");
    CHECK(run_cli("dist --kind property " + in_dir("r10.el") + " " + in_dir("k3_spec.json")) == 3);

    // The exit-code contract also surfaces suite verdicts.
    CHECK(run_cli("verify --suite lemmas --max-n 5 --output " + in_dir("verify.json")) == 0);
    nlohmann::json ver = read_json(in_dir("verify.json"));
    CHECK(ver["result"]["all_passed"] == true);
    CHECK(ver["result"]["checks"].size() == 7);
}

TEST_CASE("every report validates against the published schema") {
    nlohmann::json schema = read_json(std::string(HPD_DOCS_DIR) + "/report.schema.json");
    REQUIRE(run_cli("gen --type cycle --n 8 --out " + in_dir("c8.el") + " --output " +
                    in_dir("gen_c8.json")) == 0);
    REQUIRE(run_cli("hom --pattern " + in_dir("k3.el") + " --host " + in_dir("k6.el") +
                    " --output " + in_dir("hom_schema.json")) == 0);
    REQUIRE(run_cli("fk " + in_dir("r10.el") + " --gamma 0.2 --output " + in_dir("fk_schema.json")) ==
            0);
    for (const char* name : {"gen_c8.json", "hom_schema.json", "fk_schema.json"}) {
        INFO("report " << name);
        nlohmann::json report = read_json(in_dir(name));
        check_against(schema, report);
    }

    // Input hashes recorded in the report match the file bytes on disk.
    nlohmann::json hom_report = read_json(in_dir("hom_schema.json"));
    REQUIRE(hom_report["inputs"].size() == 2);
    for (const auto& entry : hom_report["inputs"])
        CHECK(entry["fnv1a64"] == fnv1a64_hex_of_file(entry["path"].get<std::string>()));
}

TEST_CASE("identical runs serialize identically except wall time") {
    std::string cmd = "hom --pattern " + in_dir("k3.el") + " --host " + in_dir("k6.el") +
                      " --output " + in_dir("rep.json");
    REQUIRE(run_cli(cmd) == 0);
    nlohmann::json a = read_json(in_dir("rep.json"));
    REQUIRE(run_cli(cmd) == 0);
    nlohmann::json b = read_json(in_dir("rep.json"));
    CHECK(a["wall_time_ms"].is_number());
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());
}
