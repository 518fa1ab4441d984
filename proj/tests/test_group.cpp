#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "prym/error.hpp"
#include "prym/group.hpp"
#include "support.hpp"

using namespace prym;
using prym::testing::data_path;

namespace {

// Closure of a set of automorphisms under composition, as image vectors.
std::set<std::vector<Elem>> closure(const std::vector<GroupHom>& gens, int n) {
    std::vector<Elem> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<Elem>> seen{id};
    std::vector<std::vector<Elem>> todo{id};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            std::vector<Elem> nx(n);
            for (int x = 0; x < n; ++x) nx[x] = g.image[cur[x]];
            if (seen.insert(nx).second) todo.push_back(nx);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("cayley table axioms are enforced") {
    CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}), InputError);
    CHECK_NOTHROW(FiniteGroup::from_table(2, {0, 1, 1, 0}));
}

TEST_CASE("abelian span and element orders") {
    FiniteGroup G = abelian_from_columns(10, {{1, 1, 2, 2, 4}});
    CHECK(G.order() == 10);
    CHECK(G.is_commutative());
    CHECK(G.exponent() == 10);
    CHECK(G.elem_order(G.find_coords(std::vector<int>{5})) == 2);
    CHECK(central_involutions(G).size() == 1);

    FiniteGroup H = abelian_from_columns(4, {{2, 2, 0, 0}, {0, 2, 2, 0}});
    CHECK(H.order() == 4);
}

TEST_CASE("quotient order matches a brute-force coset count") {
    FiniteGroup G = read_cayley_file(data_path("groups/d4.cayley"));
    for (Elem z : centre(G)) {
        std::vector<Elem> H = subgroup_closure(G, std::vector<Elem>{z});
        std::set<std::set<Elem>> cosets;
        for (Elem g = 0; g < G.order(); ++g) {
            std::set<Elem> c;
            for (Elem h : H) c.insert(G.mul(g, h));
            cosets.insert(c);
        }
        auto [Q, pi] = quotient_by_subgroup(G, H);
        CHECK(Q.order() == static_cast<int>(cosets.size()));
        for (Elem a = 0; a < G.order(); ++a)
            for (Elem b = 0; b < G.order(); ++b) CHECK(pi(G.mul(a, b)) == Q.mul(pi(a), pi(b)));
    }
}

TEST_CASE("automorphism counts of small groups") {
    FiniteGroup C10 = abelian_from_columns(10, {{1, 9}});
    CHECK(automorphisms_fixing(C10, C10.find_coords(std::vector<int>{5})).size() == 4);
    FiniteGroup V = abelian_from_columns(2, {{1, 0, 1}, {0, 1, 1}});
    CHECK(automorphisms_fixing(V, V.find_coords(std::vector<int>{1, 1})).size() == 2);
    CHECK(automorphisms_fixing(V, 0).size() == 6);
    FiniteGroup Q8 = read_cayley_file(data_path("groups/q8.cayley"));
    CHECK(automorphisms_fixing(Q8, 0).size() == 24);
    FiniteGroup D4 = read_cayley_file(data_path("groups/d4.cayley"));
    CHECK(automorphisms_fixing(D4, 0).size() == 8);
}

TEST_CASE("elementary automorphisms generate the full automorphism group") {
    for (const std::vector<int>& inv : {std::vector<int>{2, 2, 2}, std::vector<int>{2, 4}, std::vector<int>{2, 2, 4},
                                        std::vector<int>{12}, std::vector<int>{2, 6}}) {
        FiniteGroup G = abelian_group(inv);
        auto gens = elementary_automorphisms(G);
        REQUIRE(gens);
        for (const auto& h : *gens)
            for (Elem a = 0; a < G.order(); ++a)
                for (Elem b = 0; b < G.order(); ++b) CHECK(h(G.mul(a, b)) == G.mul(h(a), h(b)));
        CHECK(closure(*gens, G.order()).size() == automorphisms_fixing(G, 0).size());
    }
    CHECK_FALSE(elementary_automorphisms(read_cayley_file(data_path("groups/q8.cayley"))));
}

TEST_CASE("small group identification is invariant under relabelling") {
    std::mt19937_64 rng(7);
    for (const char* f : {"groups/q8.cayley", "groups/d4.cayley", "groups/dic3.cayley", "groups/c2_x_q8.cayley"}) {
        FiniteGroup G = read_cayley_file(data_path(f));
        auto id = identify_small_group(G);
        REQUIRE(id);
        std::vector<int> perm(G.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        CHECK(identify_small_group(relabel(G, perm)) == id);
    }
    CHECK(format_id(identify_small_group(read_cayley_file(data_path("groups/q8.cayley")))) == "G(8,4)");
    CHECK(format_id(identify_small_group(abelian_group({2, 2, 2}))) == "G(8,5)");
    CHECK(format_id(std::nullopt) == "unknown");
}

TEST_CASE("invariant factor lists") {
    CHECK(invariant_factor_lists(16).size() == 5);
    CHECK(invariant_factor_lists(12).size() == 2);
    CHECK(invariant_factor_lists(64).size() == 11);
}
