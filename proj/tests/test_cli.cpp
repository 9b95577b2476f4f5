#include "stratavol/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace stratavol;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("stratavol-cli-" + name);
    std::filesystem::remove_all(p);
    return p;
}

std::filesystem::path write_config(const std::string& name, const std::string& body) {
    const auto p = temp_path(name + ".json");
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("integer lists") {
    CHECK(parse_int_list("3,1") == std::vector<int>{3, 1});
    CHECK(parse_int_list("12") == std::vector<int>{12});
    CHECK_THROWS_AS(parse_int_list("3,,1"), DomainError);
    CHECK_THROWS_AS(parse_int_list("3;1"), DomainError);
    CHECK_THROWS_AS(parse_int_list(""), DomainError);
    CHECK_THROWS_AS(parse_int_list("a"), DomainError);
}

TEST_CASE("config files") {
    const auto good = write_config("good", R"({"cache_dir":"/tmp/x","output":"csv","caps":{"set_partition_n":5}})");
    const Config cfg = load_config(good);
    CHECK(cfg.output == OutputFormat::csv);
    CHECK(cfg.caps.set_partition_n == 5);
    CHECK(cfg.caps.brute_force_d == Limits{}.brute_force_d);
    REQUIRE(cfg.cache_dir.has_value());
    CHECK(*cfg.cache_dir == std::filesystem::path("/tmp/x"));
    CHECK_THROWS_AS(load_config(write_config("unknown", R"({"colour":"red"})")), DomainError);
    CHECK_THROWS_AS(load_config(write_config("unknowncap", R"({"caps":{"speed":3}})")), DomainError);
    CHECK_THROWS_AS(load_config(write_config("negative", R"({"caps":{"brute_force_d":0}})")), DomainError);
    CHECK_THROWS_AS(load_config(write_config("broken", "{")), DomainError);
    CHECK_THROWS_AS(load_config(temp_path("missing.json")), DomainError);
}

TEST_CASE("volume command") {
    const Run r = run({"--no-cache", "volume", "3,1"});
    REQUIRE(r.code == exit_code::ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["genus"] == 3);
    CHECK(j["dim"] == 7);
    CHECK(j["volume"]["num"] == "8");
    CHECK(j["volume"]["den"] == "297675");
    CHECK(j["volume"]["pi_pow"] == 6);

    const Run again = run({"--no-cache", "volume", "3,1"});
    CHECK(again.out == r.out);

    const Run odd = run({"--no-cache", "volume", "3"});
    CHECK(odd.code == exit_code::domain_error);
    CHECK(odd.err.find("|μ| must be even") != std::string::npos);

    const Run cross = run({"--no-cache", "volume", "1,1", "--cross-check"});
    CHECK(cross.code == exit_code::ok);
    CHECK(nlohmann::json::parse(cross.out)["cross_checked"] == true);

    const Run csv = run({"--no-cache", "--output", "csv", "volume", "2"});
    CHECK(csv.out.rfind("mu;genus;dim;c;volume;pi_pow;route\n", 0) == 0);

    const Run approx = run({"--no-cache", "--output", "plain", "--approx", "volume", "2"});
    CHECK(approx.out.find("decimal approximation") != std::string::npos);
}

TEST_CASE("scalar commands") {
    const Run c = run({"--no-cache", "--output", "plain", "cumulant", "4,2"});
    CHECK(c.code == exit_code::ok);
    CHECK(c.out.find("416/315") != std::string::npos);
    const Run cc = run({"--no-cache", "cconst", "4,2"});
    CHECK(cc.code == exit_code::ok);
    CHECK(cc.out.find("42525") != std::string::npos);
    CHECK(run({"--no-cache", "cconst", "1,2"}).code == exit_code::domain_error);

    const Run fk = run({"--no-cache", "fk", "4"});
    CHECK(nlohmann::json::parse(fk.out)["expansion"] == "1/4 p[4] - 1 p[2,1]");
    CHECK(run({"--no-cache", "fk", "1"}).code == exit_code::domain_error);
    CHECK(run({"--no-cache", "fk-expand", "4"}).out == fk.out);
}

TEST_CASE("covers command") {
    const Run r = run({"--no-cache", "covers", "2,2", "--connected", "--dmax", "3"});
    REQUIRE(r.code == exit_code::ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "connected");
    CHECK(j["counts"].size() == 3);
    CHECK(j["counts"][1]["d"] == 2);
    CHECK(j["counts"][1]["count"] == "2");

    const Run csv = run({"--no-cache", "--output", "csv", "covers", "2,2", "--dmax", "2"});
    CHECK(csv.out == "profile;d;kind;count\n2,2;1;all;0/1\n2,2;2;all;2/1\n");
    CHECK(run({"--no-cache", "covers", "2,2", "--connected", "--no-unramified"}).code == exit_code::domain_error);
}

TEST_CASE("verify and other commands") {
    CHECK(run({"--no-cache", "verify", "parity"}).code == exit_code::ok);
    CHECK(run({"--no-cache", "verify", "nonsense"}).code == exit_code::domain_error);
    const Run table = run({"--no-cache", "--output", "csv", "simple-table", "--nmax", "2"});
    CHECK(table.out.find("2;1/270;1/540;4") != std::string::npos);
    const Run np = run({"--no-cache", "npoint-check", "--s", "3", "--order", "10"});
    CHECK(np.code == exit_code::ok);
    CHECK(nlohmann::json::parse(np.out)["holds"] == true);
    CHECK(run({"--no-cache", "npoint-check", "--s", "1"}).code == exit_code::domain_error);
}

TEST_CASE("usage errors and caps") {
    CHECK(run({}).code == exit_code::domain_error);
    CHECK(run({"--output", "xml", "volume", "2"}).code == exit_code::domain_error);
    CHECK(run({"--threads", "0", "volume", "2"}).code == exit_code::domain_error);
    CHECK(run({"volume", "2,x"}).code == exit_code::domain_error);
    CHECK(run({"--help"}).code == exit_code::ok);

    const auto unknown = write_config("cli-unknown", R"({"verbose":true})");
    CHECK(run({"--config", unknown.string(), "volume", "2"}).code == exit_code::domain_error);

    const auto tight = write_config("cli-tight", R"({"caps":{"set_partition_n":3}})");
    const Run capped = run({"--no-cache", "--config", tight.string(), "cumulant", "1,1,1,1,1"});
    CHECK(capped.code == exit_code::resource_cap);
    CHECK_FALSE(capped.err.empty());
}

TEST_CASE("character cache directory") {
    const auto dir = temp_path("cache");
    setenv("STRATAVOL_CACHE", dir.c_str(), 1);
    CHECK(run({"cconst", "3,3"}).code == exit_code::ok);
    unsetenv("STRATAVOL_CACHE");
    CHECK(std::filesystem::exists(dir));
    CHECK_FALSE(std::filesystem::is_empty(dir));

    const auto cfg_dir = temp_path("cache-config");
    const auto cfg = write_config("cli-cache", R"({"cache_dir":")" + cfg_dir.string() + R"("})");
    CHECK(run({"--config", cfg.string(), "cconst", "3,3"}).code == exit_code::ok);
    CHECK(std::filesystem::exists(cfg_dir));

    const auto none = temp_path("cache-none");
    const auto cfg_none = write_config("cli-cache-none", R"({"cache_dir":")" + none.string() + R"("})");
    CHECK(run({"--no-cache", "--config", cfg_none.string(), "cconst", "3,3"}).code == exit_code::ok);
    CHECK_FALSE(std::filesystem::exists(none));
}

TEST_CASE("installed binary") {
    const auto out = temp_path("binary-out.txt");
    const std::string cmd =
        std::string(STRATAVOL_CLI_PATH) + " --no-cache --output plain volume 3,1 > " + out.string() + " 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    std::ifstream in(out);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("8/297675") != std::string::npos);
    const std::string bad = std::string(STRATAVOL_CLI_PATH) + " volume 3 > /dev/null 2>&1";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == exit_code::domain_error);
}
