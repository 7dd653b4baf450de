#include "hypiso/cli.hpp"
#include "hypiso/polygon.hpp"
#include "hypiso/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hypiso;

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

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');)
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("bounds sweep as csv") {
    const auto r = run({"bounds", "--thm", "1.2", "--n", "6", "--range", "0.1:3:30", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 31);
    CHECK(rows[0] == std::vector<std::string>{"theorem", "n", "k", "param", "value", "feasible", "guard_margin"});
    double last = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] == "1.2");
        const double v = std::stod(rows[i][4]);
        CHECK(v > last);
        last = v;
    }
    CHECK(std::stod(rows[1][3]) == 0.1);
    CHECK(std::stod(rows[30][3]) == 3.0);
}

TEST_CASE("bounds sweep crosses the admissibility threshold once") {
    const auto r = run({"bounds", "--thm", "1.9", "--n", "4", "--k", "2", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv(r.out);
    int flips = 0;
    for (size_t i = 2; i < rows.size(); ++i)
        flips += rows[i][5] != rows[i - 1][5];
    CHECK(flips == 1);
    CHECK(rows[1][5] == "false");
    CHECK(rows.back()[5] == "true");
}

TEST_CASE("corollary table carries the reference inradius") {
    const auto r = run({"bounds", "--thm", "cor1", "--n", "4", "--range", "0.25:2:8", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].back() == "discrepancy");
    CHECK(rows[0][rows[0].size() - 2] == "reference_r");
    const auto j = Json::parse(run({"bounds", "--thm", "cor1", "--n", "4", "--range", "0.25:2:8"}).out);
    CHECK(j["rows"].size() == 8);
    CHECK(j["rows"][0].contains("reference_r"));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bounds"}).code == kExitUsage);
    CHECK(run({"bounds", "--thm", "9.9"}).code == kExitUsage);
    CHECK(run({"bounds", "--thm", "1.2", "--range", "3:1"}).code == kExitUsage);
    CHECK(run({"bounds", "--thm", "1.2", "--range", "1:2:x"}).code == kExitUsage);
    CHECK(run({"bounds", "--thm", "1.2", "--n", "2"}).code == kExitUsage);
    CHECK(run({"bounds", "--thm", "1.2", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"verify", "--thm", "cor1"}).code == kExitUsage);
    CHECK(run({"verify", "--seed", "-4"}).code == kExitUsage);
    CHECK(run({"optimize", "--objective", "nope"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    const auto bad = run({"bounds", "--thm", "1.9", "--n", "4", "--range", "0:100:3"});
    CHECK(bad.code == kExitUsage);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("help goes to standard output") {
    const auto r = run({"bounds", "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--thm") != std::string::npos);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--thm", "1.5", "--k", "3", "--trials", "200"});
    CHECK(ok.code == kExitOk);
    const auto j = Json::parse(ok.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["passed"] == true);
    CHECK(j["reports"][0]["violations"] == 0);

    const auto bad = run({"verify", "--thm", "1.4", "--trials", "200"});
    CHECK(bad.code == kExitViolation);
    CHECK(Json::parse(bad.out)["reports"][0]["violations"].get<int>() > 0);

    const auto c = run({"verify", "--thm", "1.1", "--trials", "50", "--format", "csv"});
    CHECK(c.code == kExitOk);
    CHECK(csv(c.out).size() == 2);
}

TEST_CASE("sample output round-trips") {
    const auto r = run({"sample", "--kind", "tangential", "--n", "5", "--trials", "4"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    REQUIRE(j["polygons"].size() == 4);
    for (const auto& item : j["polygons"]) {
        const Polygon p = polygon_from_json(item["polygon"]);
        CHECK(kind_of(p) == PolygonKind::Tangential);
        CHECK(perimeter(p) == doctest::Approx(item["closed_form"]["perimeter"].get<double>()).epsilon(1e-15));
        CHECK(item["measured"]["area"].get<double>() ==
              doctest::Approx(item["closed_form"]["area"].get<double>()).epsilon(1e-8));
    }
    const auto reg = Json::parse(run({"sample", "--regular", "--n", "7", "--trials", "2"}).out);
    for (const auto& item : reg["polygons"]) {
        const auto t = item["polygon"]["thetas"];
        for (const auto& v : t)
            CHECK(v.get<double>() == doctest::Approx(t[0].get<double>()).epsilon(1e-15));
    }
}

TEST_CASE("optimize exit codes") {
    const auto ok = run({"optimize", "--thm", "1.2", "--k", "3"});
    CHECK(ok.code == kExitOk);
    CHECK(Json::parse(ok.out)["oracle_agreement"] == true);
    const auto csv_out = run({"optimize", "--objective", "half_side", "--format", "csv"});
    CHECK(csv(csv_out.out).size() == 3);
    const auto deg = run({"optimize", "--objective", "half_side", "--degrees", "--range", "10:170"});
    CHECK(deg.code == kExitOk);
    CHECK(Json::parse(deg.out)["interval"][1].get<double>() ==
          doctest::Approx(170 * 3.141592653589793 / 180));
    CHECK(run({"optimize", "--thm", "cor1"}).code == kExitUsage);
}

TEST_CASE("outputs are identical across thread counts and runs") {
    const std::vector<std::string> base{"verify", "--thm", "1.6", "--k", "3", "--trials", "300", "--seed", "0x2a"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "4"});
    const auto a = run(one), b = run(many), c = run(many);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(run({"sample", "--seed", "7"}).out == run({"sample", "--seed", "7"}).out);
    CHECK(run({"sample", "--seed", "7"}).out != run({"sample", "--seed", "8"}).out);
}

TEST_CASE("output files") {
    const auto path = std::filesystem::temp_directory_path() / "hypiso_cli_test.csv";
    CHECK(run({"bounds", "--thm", "1.1", "--format", "csv", "--out", path.string()}).code == kExitOk);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == kBoundCsvHeader);
    std::filesystem::remove(path);
}
