#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string cli = S2T_CLI_PATH;
const std::string fx = std::string(S2T_FIXTURES) + "/";

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

nlohmann::json load(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("s2t_cli_" + name)).string();
}

} // namespace

TEST_CASE("check-phi: pass, axiom failure, structural failure, parse failure") {
    RunResult ok = run("check-phi " + fx + "gf3_phi.json");
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "F1..F4 pass (n=3)"));

    CHECK(run("check-phi " + fx + "gf3_phi_bad.json").code == 1);
    CHECK(run("check-phi " + fx + "gf3_phi_range.json").code == 2);
    CHECK(run("check-phi " + fx + "malformed.json").code == 2);
    CHECK(run("check-phi " + fx + "no_such_file.json").code == 2);
    CHECK(run("check-phi " + fx + "gf3_nd.json").code == 2);  // wrong kind
}

TEST_CASE("check-nd: pass and corrupted-cell failure") {
    RunResult ok = run("check-nd " + fx + "gf5_inverse_nd.json");
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "A1..A7 pass (n=5)"));

    RunResult bad = run("check-nd " + fx + "gf3_nd_corrupt.json");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "FAIL"));
    CHECK((contains(bad.out, "A1") || contains(bad.out, "A2")));
    CHECK(contains(bad.out, "x="));  // the cell is named
}

TEST_CASE("lemma: pass and validation gate") {
    CHECK(run("lemma " + fx + "gf5_inverse_nd.json").code == 0);
    CHECK(run("lemma " + fx + "gf3_nd_corrupt.json").code == 1);
}

TEST_CASE("classify: flags and validation gate") {
    RunResult r = run("classify " + fx + "gf5_scaling2_nd.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "right-distributive: yes"));
    CHECK(contains(r.out, "left-distributive: yes"));
    CHECK(contains(r.out, "L-additive: yes"));
    CHECK(contains(r.out, "near-field candidate: no"));

    RunResult field = run("classify " + fx + "gf3_nd.json");
    CHECK(contains(field.out, "near-field candidate: yes"));
    CHECK(run("classify " + fx + "gf3_nd_corrupt.json").code == 1);
}

TEST_CASE("a-map emits the translated phi-system") {
    RunResult r = run("a-map " + fx + "gf3_nd.json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["phi"] == nlohmann::json({1, 0, 2}));
    CHECK(run("a-map " + fx + "gf3_nd_corrupt.json").code == 1);
}

TEST_CASE("f-map builds the near-domain of a given L") {
    RunResult r = run("f-map " + fx + "gf3_phi.json --L 2,1");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == load(fx + "gf3_nd.json"));

    CHECK(run("f-map " + fx + "gf3_phi.json --L 1,1").code == 2);
    CHECK(run("f-map " + fx + "gf3_phi.json --L x,y").code == 2);
    CHECK(run("f-map " + fx + "gf3_phi_bad.json --L 2,1").code == 1);
}

TEST_CASE("build-group reports the order and exports pairs") {
    RunResult r = run("build-group " + fx + "gf3_phi.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "|G|=6"));
    CHECK(contains(r.out, "sharply-2-transitive: pass"));

    const std::string out = tmp_path("pairs.json");
    CHECK(run("build-group " + fx + "gf3_phi.json --perms -o " + out).code == 0);
    nlohmann::json j = load(out);
    CHECK(j["order"] == 6);
    CHECK(j["pairs"].size() == 6);
    CHECK(j["perms"].size() == 6);
    std::filesystem::remove(out);

    CHECK(run("build-group " + fx + "gf3_phi_bad.json").code == 1);
}

TEST_CASE("from-group recovers the phi-system of the affine maps") {
    RunResult r = run("from-group " + fx + "agl13_perms.json");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["phi"] == nlohmann::json({1, 0, 2}));

    RunResult other = run("from-group " + fx + "agl13_perms.json --base 2,0");
    REQUIRE(other.code == 0);
    CHECK(nlohmann::json::parse(other.out)["phi"] == nlohmann::json({1, 0, 2}));

    CHECK(run("from-group " + fx + "agl13_truncated.json").code == 1);
    CHECK(run("from-group " + fx + "malformed.json").code == 2);
    CHECK(run("from-group " + fx + "agl15_gens.json --saturate").code == 0);
    CHECK(run("from-group " + fx + "agl15_gens.json").code == 1);  // not closed
}

TEST_CASE("roundtrip1 on both input kinds") {
    CHECK(run("roundtrip1 " + fx + "gf3_phi.json").code == 0);
    CHECK(run("roundtrip1 " + fx + "gf5_inverse_nd.json").code == 0);
    CHECK(run("roundtrip1 " + fx + "gf3_phi_bad.json").code == 1);
    CHECK(run("roundtrip1 " + fx + "agl13_perms.json").code == 2);  // wrong kind
}

TEST_CASE("roundtrip2 on both input kinds") {
    RunResult r = run("roundtrip2 " + fx + "gf5_phi.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "|G|=20, both round trips pass"));

    CHECK(run("roundtrip2 " + fx + "agl13_perms.json").code == 0);
    CHECK(run("roundtrip2 " + fx + "agl13_truncated.json").code == 1);
    CHECK(run("roundtrip2 " + fx + "gf3_phi_bad.json").code == 1);
}

TEST_CASE("example and verify-example") {
    RunResult r = run("example --q 5 --family inverse");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["n"] == 5);
    CHECK(run("example --q 6 --family inverse").code == 2);
    CHECK(run("example --q 5 --family scaling --a 0").code == 2);
    CHECK(run("example --q 5 --family other --a 1").code == 2);

    CHECK(run("verify-example --q 7 --family scaling --a 3").code == 0);
    CHECK(run("verify-example --q 7 --family inverse").code == 0);
    CHECK(run("verify-example --q 6 --family inverse").code == 2);
}

TEST_CASE("search: counts, exports, failure paths") {
    RunResult r = run("search --q 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "valid phi maps: 2"));
    CHECK(contains(r.out, "isomorphism classes: 1"));
    CHECK(contains(r.out, "near-domain flags without additive associativity: none"));

    const std::string csv = tmp_path("census.csv");
    const std::string out = tmp_path("survivors.json");
    CHECK(run("search --q 3 --csv " + csv + " -o " + out).code == 0);
    std::ifstream cin_(csv);
    std::string header;
    std::getline(cin_, header);
    CHECK(header.rfind("phi_rep,phi,L,valid", 0) == 0);
    CHECK(load(out)["survivors"].size() == 1);
    std::filesystem::remove(csv);
    std::filesystem::remove(out);

    CHECK(run("search --group " + fx + "gf3_group.json").code == 0);
    CHECK(run("search --group " + fx + "bad_group.json").code == 2);
    CHECK(run("search --group " + fx + "malformed.json").code == 2);
    CHECK(run("search --q 8").code == 2);          // cap
    CHECK(run("search --q 8 --cap 8").code == 0);  // raised cap
    CHECK(run("search --q 6").code == 2);          // not a prime power
    CHECK(run("search").code == 2);                // neither --q nor --group
    CHECK(run("search --q 5 --group " + fx + "gf3_group.json").code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    RunResult a = run("check-nd " + fx + "gf5_inverse_nd.json");
    RunResult b = run("check-nd " + fx + "gf5_inverse_nd.json");
    CHECK(a.out == b.out);
    RunResult c = run("search --q 5");
    RunResult d = run("search --q 5");
    CHECK(c.out == d.out);
}

TEST_CASE("--json emits machine-readable reports") {
    RunResult r = run("--json check-phi " + fx + "gf3_phi.json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["command"] == "check-phi");

    RunResult bad = run("--json check-nd " + fx + "gf3_nd_corrupt.json");
    CHECK(bad.code == 1);
    auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["ok"] == false);
    CHECK(jb["structural_failure"] == false);
}

TEST_CASE("--timings appends a timing line, --verbose a note") {
    RunResult plain = run("check-phi " + fx + "gf3_phi.json");
    CHECK_FALSE(contains(plain.out, "timing:"));
    RunResult timed = run("--timings check-phi " + fx + "gf3_phi.json");
    CHECK(contains(timed.out, "timing:"));
    RunResult verbose = run("--verbose check-phi " + fx + "gf3_phi.json");
    CHECK(contains(verbose.out, "note:"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("f-map " + fx + "gf3_phi.json").code == 2);  // --L missing
}
