#include "dybx/cli.hpp"
#include "dybx/formal.hpp"
#include "dybx/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace dybx;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
    Json doc() const { return Json::parse(out); }
};

std::string data(const std::string& name) { return std::string(DYBX_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = runCli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json withoutTiming(Json j)
{
    j.erase("timing");
    if (j.contains("data") && j["data"].is_object())
        j["data"].erase("suite-seconds");
    return j;
}

} // namespace

TEST_CASE("group subcommands on the shipped S3 data")
{
    std::vector<std::string> base{"group", "", "--group", data("s3.json"), "--subgroup", data("z3.json")};
    auto with = [&](const std::string& sub, std::vector<std::string> extra) {
        auto a = base;
        a[1] = sub;
        a.insert(a.end(), extra.begin(), extra.end());
        return run(a);
    };
    auto twist = with("check-twist", {"--twist", data("twist_s3.json")});
    CHECK(twist.code == 0);
    CHECK(twist.doc()["verdict"] == "pass");
    CHECK(twist.doc()["subcommand"] == "group check-twist");
    CHECK(with("check-twist", {"--twist", "trivial"}).code == 0);
    CHECK(with("virf", {"--x", data("x_s3.json")}).code == 0);
    CHECK(with("qdybe", {"--r", data("r_s3.json")}).code == 0);
    auto cls = with("classify", {});
    CHECK(cls.code == 0);
    CHECK(cls.doc()["data"]["count"] == 6);
    CHECK(with("functor", {"--x", data("x_s3.json"), "--object", "trivial"}).code == 0);

    // x_s3 is not zero weight, so it cannot gauge.
    auto gauge = with("gauge", {"--twist", data("twist_s3.json"), "--x", data("x_s3.json")});
    CHECK(gauge.code == 1);
    CHECK_FALSE(gauge.err.empty());
}

TEST_CASE("classical and formal subcommands")
{
    CHECK(run({"classical", "check", "--r", data("r_gl2.json")}).code == 0);
    CHECK(run({"classical", "from-gamma", "--gamma", data("gamma_gl2.json")}).code == 0);
    CHECK(run({"classical", "reconstruct", "--r", data("r_gl2.json"), "--rep", "defining"}).code == 0);
    CHECK(run({"classical", "rnf", "--n", "2", "--f-jets", data("f_gl2.json")}).code == 0);
    CHECK(run({"classical", "rnf", "--n", "1", "--f-jets", data("f_gl2.json")}).code == 2);

    auto gl1 = run({"formal", "gl1", "--f-coeffs", "0,1,1/2", "--hbar-order", "3"});
    REQUIRE(gl1.code == 0);
    auto doc = gl1.doc();
    CHECK(doc["verdict"] == "pass");
    FunctionJet f{{0, 1, Rational(1, 2)}, -1};
    auto lim = quasiClassicalLimit(gl1Twist(f, 3, 4));
    CHECK(doc["data"]["r"] == toJson(lim.r));

    CHECK(run({"formal", "quantize", "--gamma", data("gamma_gl2.json"), "--hbar-order", "2"}).code == 0);
    // The Felder shift pattern fails on the non-commuting gl(2) example.
    auto felder = run({"formal", "quantize", "--gamma", data("gamma_gl2.json"), "--hbar-order", "2", "--convention",
                       "wedge=full,qdybe=felder"});
    CHECK(felder.code == 1);
    CHECK(felder.doc()["conventions"].get<std::string>().find("qdybe=felder") != std::string::npos);
}

TEST_CASE("exit codes for bad input")
{
    CHECK(run({"group", "check-twist", "--group", "nope.json", "--subgroup", data("z3.json"), "--twist", "trivial"})
              .code == 2);
    CHECK(run({"group", "frobnicate"}).code == 2);
    CHECK(run({"formal", "gl1", "--f-coeffs", "0,1,x"}).code == 2);
    CHECK(run({"formal", "gl1", "--f-coeffs", "0,0,1"}).code == 1);
    CHECK(run({"--convention", "wedge=quarter", "corpus", "run"}).code == 2);
}

TEST_CASE("reports and determinism")
{
    auto path = (std::filesystem::temp_directory_path() / "dybx_cli_report.json").string();
    auto r = run({"classical", "check", "--r", data("r_gl2.json"), "--report", path});
    CHECK(r.code == 0);
    CHECK(r.out == "classical check: pass\n");
    auto written = readJsonFile(path);
    CHECK(written["verdict"] == "pass");
    std::filesystem::remove(path);

    std::vector<std::string> args{"group", "classify", "--group", data("d4.json"), "--subgroup", data("z4.json")};
    auto a = run(args), b = run(args);
    CHECK(withoutTiming(a.doc()) == withoutTiming(b.doc()));
}

TEST_CASE("--convention does not leak into later runs")
{
    auto a = run({"formal", "gl1", "--f-coeffs", "0,1", "--convention", "wedge=half,x-order=y-right"});
    CHECK(a.doc()["conventions"].get<std::string>().find("wedge=half") != std::string::npos);
    auto b = run({"formal", "gl1", "--f-coeffs", "0,1"});
    CHECK(b.doc()["conventions"] == "wedge=full qdybe=mirrored limit-sign=-1 x-order=y-left");
}

TEST_CASE("corpus run")
{
    auto r = run({"corpus", "run"});
    CHECK(r.code == 0);
    CHECK(r.doc()["verdict"] == "pass");
}
