#include <doctest.h>

#include <cstdlib>

#include "prym/error.hpp"
#include "prym/io.hpp"
#include "support.hpp"

using namespace prym;
using namespace prym::testing;

TEST_CASE("csv fields are quoted only when needed") {
    CHECK(csv_field("C2^2") == "C2^2");
    CHECK(csv_field("G(4,2)") == "\"G(4,2)\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(split_csv_record("a,\"b,c\",\"d\"\"e\",") == std::vector<std::string>{"a", "b,c", "d\"e", ""});
    CHECK_THROWS_AS(split_csv_record("\"open"), InputError);
}

TEST_CASE("report csv round-trips byte for byte") {
    SearchConfig cfg;
    cfg.r_values = {5, 6};
    cfg.max_gtilde = 9;
    cfg.abelian_only = true;
    auto rows = run_search(cfg);
    REQUIRE_FALSE(rows.empty());
    rows.front().note = "a note, with \"quotes\"";
    const std::string csv = rows_to_csv(rows);
    CHECK(rows_from_csv(csv) == rows);
    CHECK(rows_to_csv(rows_from_csv(csv)) == csv);
    CHECK(rows_from_json(rows_to_json(rows)) == rows);
}

TEST_CASE("malformed report lines carry their position") {
    std::string csv = rows_to_csv({});
    csv += "5,x,0,0,0,1,C2,G,G,0,0,0,inconclusive,,,\n";
    CHECK_THROWS_WITH_AS(rows_from_csv(csv), doctest::Contains("line 2, column g_tilde"), InputError);
    CHECK_THROWS_AS(rows_from_csv("r,g\n"), InputError);
}

TEST_CASE("datum files") {
    PrymDatum d = read_datum_file(data_path("examples/c10_r5.json"));
    CHECK(d.g_tilde == 12);
    CHECK(d.group.order() == 10);
    CHECK_THROWS_WITH_AS(read_datum_file(data_path("examples/bad_product.json")), "product ≠ identity", DatumError);
    CHECK_THROWS_AS(parse_datum_json("{"), InputError);
    CHECK_THROWS_AS(parse_datum_json(R"({"group": {}})"), InputError);
    CHECK_THROWS_WITH_AS(parse_datum_json(R"({"group": {"abelian": {"N": 4, "matrix": [[1, 3]]}},
                                              "sigma": [2], "tuple": [[1], [3], [1, 0]]})"),
                         doctest::Contains("tuple entry 3"), InputError);
    PrymDatum t = parse_datum_json(R"({"group": {"abelian": {"N": 4, "matrix": [[1, 3, 1, 3]]}},
                                       "tuple": [1, 1, 3, 3], "sigma": 2})");
    CHECK(t.tuple[0] == t.tuple[1]);
}

TEST_CASE("cache directory honours the environment") {
    setenv("PRYM_CACHE_DIR", "/tmp/prym-cache-test", 1);
    CHECK(cache_directory() == "/tmp/prym-cache-test");
    unsetenv("PRYM_CACHE_DIR");
    setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(cache_directory() == std::filesystem::path("/tmp/xdg/prymtool"));
}
