#include <doctest.h>

#include "eglocal/blocks.hpp"
#include "eglocal/generators.hpp"
#include "fixtures.hpp"

using namespace eglocal;

TEST_SUITE("generators") {

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    SplitMix64 a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.below(13) == b.below(13));
    SplitMix64 u(3);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("random graphs are seeded and deterministic") {
    CHECK(gen_gnp(15, 0.4, 11) == gen_gnp(15, 0.4, 11));
    CHECK(gen_gnp(15, 0.4, 11) != gen_gnp(15, 0.4, 12));
    CHECK(gen_gnp(9, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(9, 1.0, 1).edge_count() == 36);
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(gen_gnm(10, 17, seed).edge_count() == 17);
    CHECK_THROWS_AS(gen_gnm(4, 7, 0), std::invalid_argument);
}

TEST_CASE("named families") {
    CHECK(turan(6, 3).edge_count() == 12);
    CHECK(turan(7, 3).edge_count() == 16);
    CHECK(turan(4, 2) == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(path_graph(4) == fixtures::p4());
    CHECK(cycle_graph(4) == fixtures::c4());
    CHECK(star(3) == fixtures::star3());
    CHECK(gen_clique_union({3, 3}) == fixtures::k3k3());
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("labeled enumeration") {
    CHECK(labeled_count(0) == 1);
    CHECK(labeled_count(4) == 64);
    CHECK(labeled_count(7) == 2097152);
    CHECK(labeled_graph(3, 0).edge_count() == 0);
    CHECK(labeled_graph(3, 7) == fixtures::k(3));
    CHECK(labeled_graph(3, 1) == Graph(3, {{0, 1}}));
    CHECK(labeled_graph(3, 4) == Graph(3, {{1, 2}}));
    CHECK(enumerate_labeled(4).size() == 64);
    CHECK_THROWS_AS(labeled_count(8), std::invalid_argument);
}

TEST_CASE("block plans") {
    BlockPlan paw;
    paw.blocks = {{3, -1, 0}, {2, 0, 0}};
    paw.parent_dominated = true;
    CHECK(gen_block_graph(paw) == fixtures::paw());

    BlockPlan chain;
    chain.blocks = {{3, -1, 0}, {2, 0, 2}, {3, 1, 1}};
    CHECK(gen_block_graph(chain) == fixtures::chain33());
    chain.parent_dominated = true;
    CHECK_THROWS_AS(gen_block_graph(chain), std::invalid_argument);

    BlockPlan bad;
    bad.blocks = {{1, -1, 0}};
    CHECK_THROWS_AS(gen_block_graph(bad), std::invalid_argument);
    bad.blocks = {{3, -1, 0}, {2, 2, 0}};
    CHECK_THROWS_AS(gen_block_graph(bad), std::invalid_argument);
    bad.blocks = {{3, -1, 0}, {2, 0, 3}};
    CHECK_THROWS_AS(gen_block_graph(bad), std::invalid_argument);
    bad.blocks = {{3, -1, 0}, {2, 0, 1}, {2, 1, 0}};
    CHECK_THROWS_AS(gen_block_graph(bad), std::invalid_argument);
}

TEST_CASE("random parent-dominated graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = gen_parent_dominated(seed, 1 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed % 4));
        CHECK(g == gen_parent_dominated(seed, 1 + static_cast<int>(seed % 4), 2 + static_cast<int>(seed % 4)));
        CHECK(decompose(g).is_parent_dominated);
    }
}

}  // TEST_SUITE
