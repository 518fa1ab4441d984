#include <doctest.h>

#include "prym/conditions.hpp"
#include "prym/io.hpp"
#include "support.hpp"

using namespace prym;
using namespace prym::testing;

TEST_CASE("condition A and B1 on the cyclic example") {
    PrymDatum d = c10_r5();
    RepDecomposition V = hodge_decomposition(d);
    ConditionA a = check_A(d, V);
    CHECK(a.dim == 2);
    CHECK(a.holds);
    ConditionB1 b1 = check_B1(d, V, a.dim);
    CHECK(b1.holds);
    REQUIRE(b1.witness);
    CHECK(V.table->labels[*b1.witness] == std::vector<int>{7});
    ConditionReport rep = classify_B(d, V, {});
    CHECK(rep.status == BStatus::certified_by_B1);
    CHECK_FALSE(rep.b_ge_6);
}

TEST_CASE("B1 fails for a self-dual block and the sampled rank certifies") {
    ConditionReport rep = classify_B(c2cubed_r6(), {});
    CHECK(rep.dim_s2 == 3);
    CHECK(rep.cond_A);
    CHECK_FALSE(rep.cond_B1);
    CHECK(rep.status == BStatus::certified_by_rank);
    CHECK(rep.sampled_rank == 3);
}

TEST_CASE("deficient rank without symbolic fallback stays inconclusive") {
    ConditionReport rep = classify_B(c2squared_r10(), {});
    CHECK(rep.dim_s2 == 7);
    CHECK(rep.status == BStatus::inconclusive);
    ClassifyOptions opt;
    opt.allow_symbolic = true;
    rep = classify_B(c2squared_r10(), opt);
    CHECK(rep.status == BStatus::refuted_generic);
    CHECK(rep.symbolic_rank == 6);
    CHECK(rep.kernel == std::vector<std::string>{"a24 − a33"});
}

TEST_CASE("non-abelian data without B1 or b >= 6 are inconclusive") {
    PrymDatum d = read_datum_file(data_path("examples/order48_r5.json"));
    ConditionReport rep = classify_B(d, {});
    CHECK(rep.cond_A);
    CHECK(rep.dim_s2 == 2);
    CHECK_FALSE(rep.cond_B1);
    CHECK(rep.status == BStatus::inconclusive);
}

TEST_CASE("status names round-trip") {
    for (BStatus s : {BStatus::not_applicable, BStatus::certified_by_B1, BStatus::certified_by_b6,
                      BStatus::certified_by_rank, BStatus::refuted_generic, BStatus::inconclusive})
        CHECK(parse_bstatus(to_string(s)) == s);
    CHECK_FALSE(parse_bstatus("certified"));
}
