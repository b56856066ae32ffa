#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "csd/table_io.hpp"
#include "csd/verify.hpp"

using namespace csd;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "csd_io_test";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("json round trip and byte determinism") {
    ExponentTable t = compute_table(4);
    nlohmann::json j = table_to_json(t);
    CHECK(j["format_version"] == kTableFormatVersion);
    CHECK(j["max_degree"] == 4);
    ExponentTable back = table_from_json(j);
    CHECK(back.max_degree == t.max_degree);
    CHECK(back.entries == t.entries);
    // two independent computations serialize to identical bytes
    CHECK(table_to_json(compute_table(4)).dump(2) == j.dump(2));
}

TEST_CASE("entry ordering in the file") {
    nlohmann::json j = table_to_json(compute_table(3));
    std::vector<std::pair<long, long>> keys;
    for (const auto& e : j["entries"]) keys.push_back({e["a"].get<long>(), e["b"].get<long>()});
    std::vector<std::pair<long, long>> expected{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
    CHECK(keys == expected);
}

TEST_CASE("csv export") {
    std::string csv = table_to_csv(compute_table(3));
    CHECK(csv.rfind("a,b,i,j,alpha,gcd\n", 0) == 0);
    CHECK(csv.find("2,1,2,1,1,1") != std::string::npos);
}

TEST_CASE("latex export") {
    ExponentTable t = compute_table(3);
    std::string tex = table_to_latex(t);
    // one factor per line, ordered: (1,0) first, (0,1) last
    CHECK(tex.rfind("\\Psi[(1,0)]^{m}\n", 0) == 0);
    CHECK(tex.find("\\Psi[(0,1)]^{n}\n") == tex.size() - std::string("\\Psi[(0,1)]^{n}\n").size());
    CHECK(tex.find("\\Psi[(2,1)]^{\\binom{m}{2}n}") != std::string::npos);
}

TEST_CASE("truncate_table") {
    ExponentTable t5 = compute_table(5);
    ExponentTable t3 = truncate_table(t5, 3);
    CHECK(t3.max_degree == 3);
    CHECK(t3.entries == compute_table(3).entries);
    CHECK_THROWS_AS(truncate_table(t5, 6), PreconditionError);
}

TEST_CASE("eval_walls") {
    ExponentTable t = compute_table(5);
    // pentagon point
    auto pentagon = eval_walls(t, 1, 1);
    REQUIRE(pentagon.size() == 3);
    CHECK(pentagon[0].vector == Vec{1, 0});
    CHECK(pentagon[0].incoming);
    CHECK(pentagon[1].vector == Vec{1, 1});
    CHECK_FALSE(pentagon[1].incoming);
    CHECK(pentagon[2].vector == Vec{0, 1});
    for (const auto& w : pentagon) CHECK(w.exponent == Rational(1));
    // (m, 0): the single wall (1,0)^m
    auto edge = eval_walls(t, 3, 0);
    REQUIRE(edge.size() == 1);
    CHECK(edge[0].vector == Vec{1, 0});
    CHECK(edge[0].exponent == Rational(3));
    CHECK(edge[0].ray == std::pair<long, long>{0, -3});
    // exponents quantized by 1/gcd
    for (const auto& w : eval_walls(t, 2, 2)) {
        Rational q = w.exponent * gcd_of(w.vector);
        CHECK(is_integer(q));
        CHECK(q > 0);
    }
}

TEST_CASE("plot data") {
    ExponentTable t = compute_table(5);
    auto walls = eval_walls(t, 1, 1);
    nlohmann::json j = plot_data_json(walls, 1, 1);
    CHECK(j["rays"].size() == 3);
    CHECK_FALSE(j["badlands_band"]["nonempty"].get<bool>());
    int incoming = 0;
    for (const auto& r : j["rays"]) incoming += r["incoming"].get<bool>() ? 1 : 0;
    CHECK(incoming == 2);
    // clockwise: angles non-increasing
    for (std::size_t i = 0; i + 1 < j["rays"].size(); ++i)
        CHECK(j["rays"][i]["angle"].get<double>() >= j["rays"][i + 1]["angle"].get<double>());
    CHECK(plot_data_json(eval_walls(t, 2, 3), 2, 3)["badlands_band"]["nonempty"].get<bool>());
    // empty wall list gives a header-only csv
    CHECK(plot_data_csv({}) == "ray_x,ray_y,angle,exponent,incoming\n");
}

TEST_CASE("save and load") {
    TempDir dir;
    std::filesystem::path file = dir.path / "table.json";
    ExponentTable t = compute_table(4);
    save_table(t, file);
    CHECK_FALSE(std::filesystem::exists(file.string() + ".tmp"));
    ExponentTable back = load_table(file);
    CHECK(back.entries == t.entries);

    std::ofstream(dir.path / "garbage.json") << "{ not json";
    CHECK_THROWS_AS(load_table(dir.path / "garbage.json"), CacheCorruptError);
    std::ofstream(dir.path / "wrong.json") << "{\"format_version\": 99}";
    CHECK_THROWS_AS(load_table(dir.path / "wrong.json"), CacheCorruptError);
    CHECK_THROWS_AS(load_table(dir.path / "missing.json"), CacheCorruptError);
}

TEST_CASE("verification report on a small table") {
    ExponentTable t = compute_table(4);
    auto report = run_verification(t, 2, 4, false);
    for (const auto& r : report) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    // serial and parallel oracle checks agree
    CHECK(oracle_grid_check_serial(t, 3, 4) == oracle_grid_check_parallel(t, 3, 4));
}
