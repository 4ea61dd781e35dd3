#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "qgrowth/cli.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/json_io.hpp"

using namespace qgrowth;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("series JSON")
{
    const auto r = run({"series", "--family", "wreath-alt", "--M", "2", "--prec", "50", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["grain"] == 1);
    CHECK(j["offset"] == 0);
    CHECK(j["prec"] == 50);
    CHECK(j["ring"] == "Z");
    REQUIRE(j["coeffs"].size() == 50);
    const std::vector<std::string> head = {"1", "2", "7", "16", "41"};
    for (std::size_t i = 0; i < head.size(); ++i)
        CHECK(j["coeffs"][i] == head[i]);
    CHECK(run({"series", "--family", "wreath-alt", "--M", "2", "--prec", "50", "--json"}).out == r.out);
}

TEST_CASE("series JSON round trip")
{
    const QSeries big = scalar_mul(partition_series(300), Integer("123456789012345678901234567890"));
    CHECK(series_to_json(series_from_json(series_to_json(big))) == series_to_json(big));
    const QSeries mod = reduce_mod(f_M_series(2, 40), Integer(49));
    const QSeries back = series_from_json(series_to_json(mod));
    CHECK(back.ring() == mod.ring());
    CHECK(back.offset() == -2);
    CHECK(equal_up_to(back, mod, 40));
    CHECK_THROWS(series_from_json("{\"grain\": 1}"));
    CHECK_THROWS(series_from_json("not json"));
    CHECK_THROWS(series_from_json(R"({"grain":1,"offset":0,"prec":3,"ring":"Z","coeffs":["1"]})"));
}

TEST_CASE("save and load")
{
    const auto path = (std::filesystem::temp_directory_path() / "qgrowth_cli_test_series.json").string();
    REQUIRE(run({"series", "--family", "partition", "--prec", "2000", "--save", path}).code == 0);
    const auto v = run({"verify", "--load", path, "--A", "7", "--B", "5", "--mod", "7", "--nmax", "280"});
    CHECK(v.code == 0);
    const auto u = run({"op", "U", "--load", path, "--t", "5", "--json"});
    CHECK(u.code == 0);
    CHECK(nlohmann::json::parse(u.out)["prec"] == 400);
    std::filesystem::remove(path);
    CHECK(run({"verify", "--load", path, "--A", "7", "--B", "5", "--mod", "7", "--nmax", "3"}).code == 2);
}

TEST_CASE("verify exit codes and report JSON")
{
    CHECK(run({"verify", "--series", "wreath-alt:1", "--A", "1250", "--B", "1198", "--mod", "5", "--nmax", "3"}).code ==
          0);
    const auto bad = run({"verify", "--series", "partition", "--A", "5", "--B", "3", "--mod", "5", "--nmax", "4",
                          "--json"});
    CHECK(bad.code == 1);
    const auto j = nlohmann::json::parse(bad.out);
    CHECK(j["verdict"] == "violated");
    CHECK(j["checked_to"] == 4);
    CHECK(j["claim"]["A"] == 5);
    CHECK(j["violations"][0][0] == 0);
    CHECK(j["violations"][0][1] == "3");
    const auto short_prec = run({"verify", "--series", "partition", "--A", "5", "--B", "4", "--mod", "5", "--nmax",
                                 "40", "--prec", "100"});
    CHECK(short_prec.code == 2);
    CHECK(short_prec.err.find("precision") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"eta", "eta(1"}).code == 2);
    CHECK(run({"series", "--family", "nope"}).code == 2);
    CHECK(run({"op", "W", "--series", "partition"}).code == 2);
    CHECK(run({"reproduce", "section7"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan and oracle verbs")
{
    const auto s = run({"scan", "--series", "partition", "--mod", "5", "--A-max", "5", "--nmax", "200", "--json"});
    CHECK(s.code == 0);
    const auto j = nlohmann::json::parse(s.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["A"] == 5);
    CHECK(j[0]["B"] == 4);
    for (const char* w : {"1", "3"})
        CHECK(run({"scan", "--series", "partition", "--mod", "5", "--A-max", "12", "--nmax", "60", "--workers", w,
                   "--json"})
                  .out == run({"scan", "--series", "partition", "--mod", "5", "--A-max", "12", "--nmax", "60",
                               "--json"})
                              .out);
    const auto o = run({"oracle", "partitions", "--n", "6", "--json"});
    CHECK(o.out == "[\"1\",\"1\",\"2\",\"3\",\"5\",\"7\",\"11\"]\n");
    const auto b = run({"oracle", "bfs", "--degree", "5", "--generators", "all-transpositions", "--n", "3"});
    CHECK(b.code == 0);
    CHECK(b.out == "0 1\n1 1\n2 2\n3 2\n");
}

TEST_CASE("eta and op verbs")
{
    const auto e = run({"eta", "eta(1)^24", "--prec", "5"});
    CHECK(e.code == 0);
    CHECK(e.out.find("1 -24 252 -1472") != std::string::npos);
    const auto h = run({"op", "hecke", "--series", "eta:eta(1)^24", "--p", "2", "--weight", "12", "--prec", "20"});
    CHECK(h.code == 0);
    CHECK(h.out.find("0 -24 576 -6048") != std::string::npos);
    const auto x = run({"op", "extract", "--series", "partition", "--A", "5", "--B", "4", "--mod", "5"});
    CHECK(x.code == 0);
    CHECK(x.out.find("ring Z/5Z") != std::string::npos);
}

TEST_CASE("reproduce wreath-mod5")
{
    const auto r = run({"reproduce", "wreath-mod5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
}
