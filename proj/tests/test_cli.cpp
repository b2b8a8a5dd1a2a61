#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "relalg/catalog.hpp"
#include "relalg/model_io.hpp"

using namespace relalg;

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

}  // namespace

TEST_CASE("list-models and show") {
    const Run list = run({"list-models"});
    CHECK(list.code == kExitOk);
    CHECK(list.out.find("a7[k=2,ident=1]") != std::string::npos);

    const Run show = run({"show", "m3"});
    CHECK(show.code == kExitOk);
    CHECK(show.out.find("0' : 0 0' 1 1") != std::string::npos);

    const Run json = run({"show", "b9", "--json"});
    CHECK(json.code == kExitOk);
    CHECK(read_model_json(json.out) == build("b9"));

    CHECK(run({"show", "nope"}).code == kExitUsage);
}

TEST_CASE("model files as arguments") {
    const auto path = std::filesystem::temp_directory_path() / "relalg_cli_model.json";
    save_model_file(build("a2"), path);
    const Run r = run({"check", path.string(), "--system", "tarski"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("R2    fails at (r=1', s=1', t=1)") != std::string::npos);
    std::filesystem::remove(path);
    CHECK(run({"check", path.string()}).code == kExitUsage);
}

TEST_CASE("check") {
    const Run r = run({"check", "a9", "--system", "tarski", "--json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["failing"] == nlohmann::json::array({"R9"}));
    CHECK(j["axioms"].size() == 10);

    const Run bad = run({"check", "m3", "--system", "nonsense"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("nonsense") != std::string::npos);
}

TEST_CASE("eval") {
    const Run r = run({"eval", "z3c", "r;r", "--let", "r={1}"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "{2}\n");
    CHECK(run({"eval", "z3c", "r;s", "--let", "r=2,s=4"}).out == "{0}\n");
    CHECK(run({"eval", "m3", "1' + -1'"}).out == "1\n");
    CHECK(run({"eval", "m3", "r;", "--let", "r=1"}).code == kExitUsage);
    CHECK(run({"eval", "m3", "r;s", "--let", "r=1"}).code == kExitUsage);
    CHECK(run({"eval", "m3", "r", "--let", "r=7"}).code == kExitUsage);
}

TEST_CASE("independence") {
    const Run ok = run({"independence", "b9", "--target", "R9", "--system", "r"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("is an independence model") != std::string::npos);
    const Run no = run({"independence", "a9", "--target", "R9", "--system", "r"});
    CHECK(no.code == kExitClaimFailed);
    CHECK(no.out.find("failing: R8p, R9") != std::string::npos);
    CHECK(run({"independence", "a9", "--target", "R7", "--system", "r"}).code == kExitUsage);
    CHECK(run({"independence", "a9", "--target", "R99"}).code == kExitUsage);
}

TEST_CASE("search") {
    const Run r = run({"search", "--size", "3", "--hold", "R1,R3-R10", "--fail", "R2", "--iso", "--json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["iso_class_count"] == 1);
    CHECK(j["labeled_count"] == 6);
    CHECK(j["exhaustive"] == true);
    CHECK(j["models"].size() == 1);

    const Run text = run({"search", "--size", "4", "--hold", "R1-R10", "--iso", "--boolean", "--threads", "2"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("isomorphism classes: 3") != std::string::npos);

    const Run limited = run({"search", "--size", "3", "--limit", "10"});
    CHECK(limited.out.find("exhaustive: no") != std::string::npos);

    CHECK(run({"search", "--size", "2", "--hold", "R1,R77"}).code == kExitUsage);
    CHECK(run({"search", "--size", "2", "--hold", "R1", "--boolean"}).code == kExitUsage);
    CHECK(run({"search", "--size", "12"}).code == kExitUsage);
    CHECK(run({"search"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify-paper") {
    const Run r = run({"verify-paper", "--json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["overall"] == "pass");

    setenv("NO_COLOR", "1", 1);
    std::ostringstream out, err;
    CHECK(run_cli({"verify-paper"}, out, err, true) == kExitOk);
    CHECK(out.str().find("\x1b[") == std::string::npos);
    unsetenv("NO_COLOR");
}
