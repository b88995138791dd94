#include "hstab/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hstab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HSTAB_DATA_DIR) + "/" + name; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("hstab-test-" + name);
    std::ofstream(p) << body;
    return p.string();
}

// the catalogue and the commands run on it
std::vector<std::vector<std::string>> catalogue_runs(const std::string& threads) {
    return {{"example", "--format", "json"},
            {"example", "--name", "bicuspidal-g2-tricanonical", "--format", "json"},
            {"example", "--name", "a2b-tail:2", "--format", "json"},
            {"example", "--name", "thickened-line:2:2", "--format", "json"},
            {"is-semistable", "--example", "bicuspidal-g2-tricanonical", "--m", "2", "--format", "json", "--threads", threads},
            {"state-polytope", "--example", "a2b-tail:2", "--m", "2", "--format", "json", "--threads", threads},
            {"is-semistable", "--ideal", "thickened-line:2:2", "--m", "4", "--format", "json", "--threads", threads},
            {"hm-index", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2", "--rho", "6,4,3,2,0", "--format", "json"},
            {"hm-index", "--ideal", "a2b-tail:2", "--m", "3", "--rho", "0,2,4,5,6", "--format", "json"},
            {"tail-index", "--b", "2", "--m", "3", "--g", "5", "--format", "json"},
            {"groebner", "--ideal", "a2b-tail:2", "--format", "json"}};
}

}  // namespace

TEST(Cli, SemistableGolden) {
    auto r = run({"is-semistable", "--example", "bicuspidal-g2-tricanonical", "--m", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "semistable\n"));
    EXPECT_TRUE(contains(r.out, "barycenter (8/5, 8/5, 8/5, 8/5, 8/5)"));
    EXPECT_TRUE(contains(r.out, "10 vertices"));
    EXPECT_TRUE(contains(r.err, "Gotzmann"));  // advisory only
}

TEST(Cli, AlphaM) {
    auto r = run({"alpha-m", "--m", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "alpha = 2/3"));
    EXPECT_TRUE(contains(run({"alpha-m", "--m", "9/4"}).out, "alpha = 17/28"));
    EXPECT_TRUE(contains(run({"alpha-m", "--alpha", "19/29"}).out, "m = 9/2"));
}

TEST(Cli, AlphaMPoleIsInputError) {
    auto r = run({"alpha-m", "--m", "3/20"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "pole"));
    EXPECT_EQ(run({"alpha-m", "--alpha", "7/10"}).code, 2);
    EXPECT_EQ(run({"alpha-m", "--m", "abc"}).code, 2);
}

TEST(Cli, HmIndexDoubleLine) {
    auto r = run({"hm-index", "--ideal", "thickened-line:2:2", "--m", "4", "--rho", "0,1,1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "index -8\n"));
    EXPECT_TRUE(contains(r.out, "verdict unstable"));
    auto j = Json::parse(run({"hm-index", "--ideal", "thickened-line:2:2", "--m", "4", "--rho", "0,1,1", "--format", "json"}).out);
    EXPECT_EQ(j["index"], "-8");
    EXPECT_EQ(j["ideal_side_index"], "-8");
    EXPECT_EQ(j["verdict"], "unstable");
    EXPECT_EQ(j["m"], "4");
    EXPECT_EQ(j["rho"], Json({0, 1, 1}));
}

TEST(Cli, HmIndexRationalDegreeRejected) {
    auto r = run({"hm-index", "--ideal", "bicuspidal-g2-tricanonical", "--m", "9/2", "--rho", "6,4,3,2,0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "closed-form"));
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"hm-index", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2"}).code, 2);  // no rho
    auto missing = run({"groebner", "--ideal", "/nonexistent/file.ideal"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_TRUE(contains(missing.err, "cannot open"));
    EXPECT_EQ(run({"hm-index", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2", "--rho", "1,2"}).code, 2);
    EXPECT_EQ(run({"groebner", "--example", "no-such-example"}).code, 2);
    EXPECT_EQ(run({"gotzmann", "--hilbert-poly", "1/2*m"}).code, 2);
    EXPECT_EQ(run({"characters", "--b", "1"}).code, 2);
    EXPECT_EQ(run({"state-polytope", "--example", "bicuspidal-g2-tricanonical", "--m", "2", "--threads", "0"}).code, 2);
    EXPECT_EQ(run({"groebner", "--ideal", "bicuspidal-g2-tricanonical", "--format", "xml"}).code, 2);
}

TEST(Cli, ParseErrorsCarryPosition) {
    auto f = temp_file("bad.ideal", "vars: x y z\npoly: x^2 - y*w\n");
    auto r = run({"groebner", "--ideal", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "line 2, column 15")) << r.err;
    EXPECT_TRUE(contains(r.err, "unknown variable 'w'"));
    auto g = temp_file("bad.chart", "coord a weight 1\ncoord b weight z\n");
    auto rc = run({"chambers", "--chart", g});
    EXPECT_EQ(rc.code, 2);
    EXPECT_TRUE(contains(rc.err, "line 2"));
    auto h = temp_file("nonhomog.ideal", "vars: x y z\npoly: x^2 - y\n");
    auto rh = run({"groebner", "--ideal", h});
    EXPECT_EQ(rh.code, 2);
    EXPECT_TRUE(contains(rh.err, "generator 0 is not homogeneous"));
}

TEST(Cli, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "is-semistable"));
}

TEST(Cli, DataFiles) {
    auto g = run({"groebner", "--ideal", data("bicuspidal.ideal")});
    EXPECT_EQ(g.code, 0) << g.err;
    EXPECT_TRUE(contains(g.out, "4 elements"));
    auto h = run({"hm-index", "--ideal", data("double-line.ideal"), "--m", "4", "--rho", "0,1,1"});
    EXPECT_TRUE(contains(h.out, "index -8\n"));
    auto l = run({"lattice-ideal", "--curve", data("rational-normal-quartic.curve"), "--format", "json"});
    EXPECT_EQ(Json::parse(l.out)["generators"].size(), 6u);
    auto c = run({"chambers", "--chart", data("tacnode.chart")});
    EXPECT_TRUE(contains(c.out, "T \\ T- = V(s0, s1, s2)"));
    EXPECT_TRUE(contains(c.out, "T \\ T+ = V(n1, n2)"));
    auto s = run({"is-semistable", "--ideal", data("bicuspidal.ideal"), "--m", "2", "--stabilizer", "6,4,3,2,0"});
    EXPECT_TRUE(contains(s.out, "barycenter (8/5, 8/5, 8/5, 8/5, 8/5)"));
    EXPECT_TRUE(contains(s.out, "full SL semistability"));
}

TEST(Cli, OtherCommands) {
    EXPECT_TRUE(contains(run({"gotzmann", "--hilbert-poly", "6m - 1"}).out, ": 14"));
    auto hf = run({"hilbert-function", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2"});
    EXPECT_TRUE(contains(hf.out, "HF(2) = 11"));
    EXPECT_TRUE(contains(hf.out, "HF = P on [1, 2]"));
    auto in = Json::parse(run({"initial-ideal", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2", "--format", "json"}).out);
    EXPECT_EQ(in["initial_monomials"].size(), 4u);
    EXPECT_EQ(in["standard_monomials"].size(), 11u);
    auto th = run({"thickening", "--ideal", "thickened-line:2:2", "--coord", "0"});
    EXPECT_TRUE(contains(th.out, "unstable for m > 3"));
    auto ti = run({"tail-index", "--b", "2", "--m", "5"});
    EXPECT_TRUE(contains(ti.out, "-8/3 (unstable)"));
    auto ch = Json::parse(run({"characters", "--b", "2", "--format", "json"}).out);
    EXPECT_EQ(ch["K"], "-26");
    auto cusp = Json::parse(run({"chambers", "--chart", "cusp:2", "--format", "json"}).out);
    EXPECT_EQ(cusp["attracted"].size(), 4u);
    EXPECT_EQ(cusp["negative_complement"], Json({"node"}));
    auto lat = run({"lattice-ideal", "--tail", "2"});
    EXPECT_EQ(lat.code, 0);
}

TEST(Cli, JsonSchemaFields) {
    auto sp = Json::parse(run({"state-polytope", "--example", "bicuspidal-g2-tricanonical", "--m", "2", "--format", "json"}).out);
    for (const char* k : {"m", "vertices", "certificate"}) EXPECT_TRUE(sp.contains(k)) << k;
    EXPECT_EQ(sp["vertices"].size(), 10u);
    EXPECT_TRUE(sp["certificate"]["complete"].get<bool>());
    auto ss = Json::parse(run({"is-semistable", "--example", "bicuspidal-g2-tricanonical", "--m", "2", "--format", "json"}).out);
    for (const char* k : {"m", "verdict", "vertices", "certificate"}) EXPECT_TRUE(ss.contains(k)) << k;
    EXPECT_EQ(ss["verdict"], "semistable");
    EXPECT_EQ(ss["barycenter"][0], "8/5");
    EXPECT_EQ(ss["certificate"]["type"], "convex-combination");
    auto un = Json::parse(run({"is-semistable", "--ideal", "thickened-line:2:2", "--m", "4", "--format", "json"}).out);
    EXPECT_EQ(un["certificate"]["type"], "destabilizing-1ps");
    EXPECT_EQ(un["certificate"]["report"]["index"], "-8");
    EXPECT_EQ(un["certificate"]["report"]["rho"], Json({0, 1, 1}));
    auto hm = Json::parse(run({"hm-index", "--ideal", "bicuspidal-g2-tricanonical", "--m", "2", "--rho", "6,4,3,2,0", "--format", "json"}).out);
    for (const char* k : {"m", "rho", "index", "verdict"}) EXPECT_TRUE(hm.contains(k)) << k;
    EXPECT_EQ(hm["index"], "0");
}

TEST(Property, CliDeterministicAcrossRunsAndThreads) {
    std::vector<std::string> first, second, threaded;
    for (const auto& args : catalogue_runs("1")) {
        auto a = run(args), b = run(args);
        ASSERT_EQ(a.code, 0) << a.err;
        first.push_back(a.out);
        second.push_back(b.out);
    }
    for (const auto& args : catalogue_runs("4")) threaded.push_back(run(args).out);
    EXPECT_EQ(first, second);
    EXPECT_EQ(first, threaded);
}

TEST(Property, CliAgreesWithLibrary) {
    auto ex = named_example("a2b-tail:2");
    for (std::uint32_t m = 1; m <= 3; ++m) {
        auto lib = hilbert_mumford_index(ex.ideal, m, *ex.distinguished_rho, ex.hilbert_polynomial);
        auto j = Json::parse(
            run({"hm-index", "--ideal", "a2b-tail:2", "--m", std::to_string(m), "--rho", "0,2,4,5,6", "--format", "json"}).out);
        auto want = json_of(lib);
        want["hilbert_polynomial_source"] = "given";
        want["ideal_side_index"] = to_string(ideal_side_index(ex.ideal, m, *ex.distinguished_rho, ex.hilbert_polynomial));
        EXPECT_EQ(j, want);
        EXPECT_EQ(j["index"], to_string(lib.index));
        EXPECT_EQ(j["standard_weight_sum"], to_string(lib.standard_weight_sum));
        EXPECT_EQ(j["verdict"], to_string(lib.verdict));
    }
    auto lib = is_torus_semistable(bicuspidal_ideal(), 2);
    auto j = Json::parse(run({"state-polytope", "--example", "bicuspidal-g2-tricanonical", "--m", "2", "--format", "json"}).out);
    EXPECT_EQ(j["vertices"], Json(lib.polytope.vertices));
}
