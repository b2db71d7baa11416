#include <catch2/catch.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

using Json = nlohmann::json;

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(CBSERIES_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

// Minimal JSON Schema checker covering the subset used by the shipped schema:
// type / required / properties / items / enum / minItems / maxItems.
bool type_matches(const Json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
}

bool validate(const Json& value, const Json& schema, std::string& err, std::string path) {
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = type_matches(value, t.get<std::string>());
        else
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) {
            err = path + ": type mismatch";
            return false;
        }
    }
    if (schema.contains("enum") && !value.is_null()) {
        bool ok = false;
        for (const auto& e : schema["enum"]) ok = ok || e == value;
        if (!ok) {
            err = path + ": not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    err = path + ": missing " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    if (!validate(value[it.key()], it.value(), err, path + "." + it.key()))
                        return false;
    }
    if (value.is_array() && schema.contains("items") && schema["items"].is_object()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
            err = path + ": too few items";
            return false;
        }
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) {
            err = path + ": too many items";
            return false;
        }
        std::size_t i = 0;
        for (const auto& item : value) {
            if (!validate(item, schema["items"], err, path + "[" + std::to_string(i) + "]"))
                return false;
            ++i;
        }
    }
    return true;
}

std::string strip_timings(std::string s) {
    s = std::regex_replace(s, std::regex("\"elapsed\": [0-9.e+-]+"), "\"elapsed\": 0");
    s = std::regex_replace(s, std::regex("\"wall_time\": [0-9.e+-]+"), "\"wall_time\": 0");
    return s;
}

}  // namespace

TEST_CASE("exit codes follow the contract", "[cli]") {
    CHECK(run_cli("verify --id T3 --digits 8").exit_code == 0);
    CHECK(run_cli("verify --id T2p --digits 6").exit_code == 0);  // erratum fails as expected
    CHECK(run_cli("verify --id NOPE --digits 8").exit_code == 2);
    CHECK(run_cli("verify --digits 3 --id T3").exit_code == 2);
    CHECK(run_cli("mine --k-min 0 --k-max 2").exit_code == 2);
    CHECK(run_cli("mine --k-min 3 --k-max 2").exit_code == 2);
    CHECK(run_cli("constant G --digits 2000").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("x values are accepted only as exact rationals", "[cli]") {
    CHECK(run_cli("sum --id L1 --x 1/2 --digits 10").exit_code == 0);
    CmdResult dec = run_cli("sum --id L1 --x 0.5 --digits 10");
    CHECK(dec.exit_code == 2);
    CHECK(run_cli("sum --id L1 --x 2e-1 --digits 10").exit_code == 2);
}

TEST_CASE("constant command output", "[cli]") {
    CmdResult pi = run_cli("constant pi --digits 20");
    CHECK(pi.exit_code == 0);
    CHECK(pi.output.find("3.1415926535897932385") != std::string::npos);
    CmdResult g = run_cli("constant G --digits 8");
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("0.91596559") != std::string::npos);
}

TEST_CASE("verify JSON validates against the shipped schema", "[cli]") {
    CmdResult r = run_cli("verify --id T2p --id T3 --id LS1 --id I1 --digits 8");
    REQUIRE(r.exit_code == 0);
    Json report = Json::parse(r.output);
    std::ifstream schema_file(std::string(CBSERIES_SOURCE_DIR) +
                              "/share/cbseries/report.schema.json");
    REQUIRE(schema_file.good());
    Json schema = Json::parse(schema_file);
    std::string err;
    bool ok = validate(report, schema, err, "$");
    INFO(err);
    CHECK(ok);
    // summary counts match the per-item tallies
    unsigned passed = 0, failed = 0, errata = 0;
    for (const auto& item : report["items"]) {
        bool as_expected = item["as_expected"].get<bool>();
        if (item["status"] == "erratum") {
            if (as_expected) ++errata; else ++failed;
        } else {
            if (item["pass"].get<bool>()) ++passed; else ++failed;
        }
    }
    CHECK(report["summary"]["passed"] == passed);
    CHECK(report["summary"]["failed"] == failed);
    CHECK(report["summary"]["errata_confirmed"] == errata);
}

TEST_CASE("catalog JSON round-trips through a structural check", "[cli]") {
    CmdResult r = run_cli("catalog --format json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.output);
    REQUIRE(j.contains("series"));
    REQUIRE(j.contains("integrals"));
    CHECK(j["series"].size() == 25);
    CHECK(j["integrals"].size() == 30);
    int errata = 0;
    for (const auto& e : j["series"]) {
        REQUIRE(e.contains("id"));
        REQUIRE(e.contains("decay"));
        REQUIRE(e.contains("strategies"));
        REQUIRE(e.contains("status"));
        REQUIRE(e.contains("rhs"));
        if (e["status"] == "erratum") ++errata;
    }
    CHECK(errata == 2);
    // markdown listing has one row per identity
    CmdResult md = run_cli("catalog --format md");
    CHECK(md.exit_code == 0);
    std::size_t rows = 0;
    for (char c : md.output)
        if (c == '\n') ++rows;
    CHECK(rows >= 55u);  // 25 series + 30 integrals + header
}

TEST_CASE("identical invocations produce byte-identical JSON", "[cli]") {
    const char* args = "verify --id LS1 --id LS4 --id T2p --digits 10";
    CmdResult a = run_cli(args);
    CmdResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_timings(a.output) == strip_timings(b.output));
}

TEST_CASE("mine table output", "[cli]") {
    CmdResult r = run_cli("mine --k-min 1 --k-max 3 --digits 60 --format json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.output);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["a"] == "6860/3");
    CHECK(j["rows"][0]["s"] == "-2520");
    CHECK(j["rows"][1]["a"] == "61040/3");
    CHECK(j["rows"][1]["s"] == "-21280");
    CHECK(j["rows"][2]["a"] == "70980");
    CHECK(j["rows"][2]["s"] == "-73080");
    for (const auto& row : j["rows"]) CHECK(row["confirmed"] == true);
    CHECK(j.contains("degeneracy_note"));
}

TEST_CASE("environment variable overrides default digits", "[cli]") {
    CmdResult r = run_cli("hyp --k 2 --digits 12");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1.1237760601") != std::string::npos);
    // via env var, no --digits flag
    std::string cmd = std::string("CBSERIES_DIGITS=12 ") + CBSERIES_BIN + " hyp --k 2 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    pclose(p);
    CHECK(out.find("1.1237760601") != std::string::npos);
}
