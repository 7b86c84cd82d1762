#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "awgraph/cli.hpp"
#include "awgraph/report.hpp"
#include "support.hpp"

using namespace awgraph;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& s)
{
    std::vector<nlohmann::json> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        v.push_back(nlohmann::json::parse(line));
    return v;
}

const std::string data = AWGRAPH_TEST_DATA;

} // namespace

TEST_CASE("exit codes")
{
    CHECK(cli({"analyze", "--family", "cycle", "--size", "8", "--vertex", "0"}).code == 0);
    CHECK(cli({"analyze", "--family", "hypercube", "--size", "4"}).code == 4);
    CHECK(cli({"analyze", "--input", data + "/path3.edges"}).code == 2);
    CHECK(cli({"analyze", "--input", data + "/petersen.edges"}).code == 2);
    CHECK(cli({"analyze", "--input", data + "/dodecahedron.edges"}).code == 3);
    CHECK(cli({"analyze", "--input", data + "/missing.edges"}).code == 1);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "7"}).code == 1);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "6", "--vertex", "6"}).code == 1);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "6", "--tol", "-1"}).code == 1);
    CHECK(cli({"analyze", "--bogus"}).code == 1);
    CHECK(cli({}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("report fields")
{
    const auto r = cli({"analyze", "--family", "cycle", "--size", "8", "--vertex", "0"});
    const auto reports = lines(r.out);
    REQUIRE(!reports.empty());
    const auto& j = reports.front();
    for (const char* key : {"graph", "n", "D", "vertex", "ordering", "q", "w", "u", "v", "wstar", "ustar", "vstar",
                            "a", "b", "types", "dims", "residuals", "thin", "status"})
        CHECK(j.contains(key));
    CHECK(j.size() == 19);
    CHECK(j["status"] == "ok");
    CHECK(j["thin"] == true);
    CHECK(j["n"] == 8);
    CHECK(j["D"] == 4);
    CHECK(j["q"].contains("re"));
    CHECK(j["q"].contains("im"));
    for (const char* key : {"psi", "rho", "tau", "d", "multiplicity", "aW", "bW", "c", "kappa"})
        CHECK(j["types"][0].contains(key));
    for (const char* key : {"awdrg1", "awdrg2", "awdrg3", "central1", "central2", "central3", "membership"})
        CHECK(j["residuals"][key]["relative"].get<double>() <= 1e-8);
}

TEST_CASE("partial commands")
{
    const auto spectrum = lines(cli({"spectrum", "--family", "crown", "--size", "5"}).out);
    REQUIRE(spectrum.size() == 1);
    CHECK(spectrum[0]["eigenvalues"] == nlohmann::json::array({4.0, 1.0, -1.0, -4.0}));
    CHECK(spectrum[0]["multiplicities"] == nlohmann::json::array({1, 4, 4, 1}));

    const auto modules = lines(cli({"modules", "--family", "cycle", "--size", "6", "--vertex", "2"}).out);
    REQUIRE(!modules.empty());
    const auto& types = modules[0]["types"];
    REQUIRE(types.size() == 2);
    CHECK(types[0]["rho"] == 0);
    CHECK(types[0]["d"] == 3);
    CHECK(types[1]["rho"] == 1);
    CHECK(types[1]["d"] == 1);
    CHECK(types[1]["multiplicity"] == 1);
    CHECK(modules[0]["q"].is_null());

    const auto q = lines(cli({"qracah", "--family", "hadamard", "--size", "8"}).out);
    REQUIRE(!q.empty());
    const double re = q[0]["q"]["re"].get<double>();
    CHECK(q[0]["q"]["im"].get<double>() == 0.0);
    CHECK(std::abs(re * re - (1 + std::sqrt(2.0))) < 1e-9);

    CHECK(cli({"modules", "--family", "hypercube", "--size", "3"}).code == 0);
    CHECK(cli({"qracah", "--family", "hypercube", "--size", "3"}).code == 4);
    CHECK(cli({"spectrum", "--input", data + "/petersen.edges"}).code == 0);
}

TEST_CASE("reports are byte-identical across runs and seeds")
{
    const auto first = cli({"analyze", "--family", "crown", "--size", "6"}).out;
    CHECK(cli({"analyze", "--family", "crown", "--size", "6"}).out == first);
    for (const char* seed : {"1", "2", "3", "4"})
        CHECK(cli({"analyze", "--family", "crown", "--size", "6", "--seed", seed}).out == first);
}

TEST_CASE("all vertices, in vertex order, with matching inventories")
{
    const auto reports = lines(cli({"analyze", "--family", "cycle", "--size", "6", "--vertex", "all"}).out);
    REQUIRE(!reports.empty());
    int last = -1;
    for (const auto& r : reports) {
        CHECK(r["vertex"].get<int>() >= last);
        last = r["vertex"].get<int>();
        CHECK(r["types"] == reports[0]["types"]);
    }
    CHECK(last == 5);
}

TEST_CASE("q-branch all emits one report per candidate")
{
    const auto canonical = lines(cli({"analyze", "--input", data + "/cycle7.edges"}).out);
    const auto all = lines(cli({"analyze", "--input", data + "/cycle7.edges", "--q-branch", "all"}).out);
    CHECK(all.size() > canonical.size());
}

TEST_CASE("tolerance from the environment")
{
    ::setenv("AWGRAPH_TOL", "1e-30", 1);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "6"}).code == 6);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "6", "--tol", "1e-8"}).code == 0);
    ::setenv("AWGRAPH_TOL", "abc", 1);
    CHECK(cli({"analyze", "--family", "cycle", "--size", "6"}).code == 1);
    ::unsetenv("AWGRAPH_TOL");
}

TEST_CASE("text format")
{
    const auto r = cli({"analyze", "--family", "crown", "--size", "5", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim T = 20") != std::string::npos);
    CHECK(r.out.find("status=ok") != std::string::npos);
}

TEST_CASE("report number formatting")
{
    CHECK(quantize(-1e-13) == 0.0);
    CHECK(!std::signbit(quantize(-1e-13)));
    CHECK(quantize(0.12345678901234) == 0.123456789);
    CHECK(residual_bound(0) == 1e-10);
    CHECK(residual_bound(3e-12) == 1e-10);
    CHECK(residual_bound(2e-9) == 1e-8);
    CHECK(residual_bound(1e-9) == 1e-9);
}
