#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "steiner/cycle.hpp"
#include "steiner/generator.hpp"
#include "steiner/greedy.hpp"
#include "steiner/oracle.hpp"

using namespace steiner;
using steiner::testing::iv;
using steiner::testing::load_fixture;

TEST_CASE("brute_pi_s matches the hand-checked figures") {
    CHECK(brute_pi_s(load_fixture("FIG1.txt")) == 2);
    CHECK(brute_pi_s(load_fixture("FIG1_sparse.txt")) == 1);
    CHECK(brute_pi_s(load_fixture("FIG2.txt")) == 1);
    CHECK(brute_pi_s(load_fixture("FIG2_modified.txt")) == 1);
    instance lone = instance::build({iv("a", "0", "1")}, {"a"});
    CHECK(brute_pi_s(lone) == 1);
    instance apart = instance::build({iv("a", "0", "1"), iv("b", "5", "6")}, {"a", "b"});
    CHECK(brute_pi_s(apart) == 2);
}

TEST_CASE("brute_cycle_exists matches the hand-checked figures") {
    CHECK_FALSE(brute_cycle_exists(load_fixture("FIG1.txt")));
    CHECK_FALSE(brute_cycle_exists(load_fixture("FIG1_sparse.txt")));
    CHECK(brute_cycle_exists(load_fixture("FIG2.txt")));
    CHECK_FALSE(brute_cycle_exists(load_fixture("FIG2_modified.txt")));
    // a cycle needs three distinct vertices
    instance two = instance::build({iv("a", "0", "3"), iv("b", "1", "4")}, {"a", "b"});
    CHECK_FALSE(brute_cycle_exists(two));
    instance tri = instance::build({iv("a", "0", "3"), iv("b", "1", "4"), iv("c", "2", "5")},
                                   {"a", "b", "c"});
    CHECK(brute_cycle_exists(tri));
}

TEST_CASE("oracles refuse instances past the state limit") {
    std::vector<interval> raw;
    for (int i = 0; i < 16; ++i)
        raw.push_back({"q" + std::to_string(i + 1), rational(i), rational(i + 1)});
    instance big = instance::build(raw, {"q1", "q16"});
    CHECK_THROWS_AS(brute_pi_s(big), oracle_limit_error);
    CHECK_THROWS_AS(brute_cycle_exists(big), oracle_limit_error);
}

TEST_CASE("cover witness verifier recomputes the pigeonhole bound") {
    instance f1 = load_fixture("FIG1.txt");
    path_t cut = {5, 11};
    CHECK(verify_cover_witness(f1, 2, cut, 4));
    CHECK_FALSE(verify_cover_witness(f1, 3, cut, 4));   // claims more than the bound gives
    CHECK_FALSE(verify_cover_witness(f1, 2, cut, 5));   // island count does not recompute
    CHECK_FALSE(verify_cover_witness(f1, 2, {5}, 4));   // cutset no longer yields 4 islands
    instance f1s = load_fixture("FIG1_sparse.txt");
    CHECK(verify_cover_witness(f1s, 1, {}, 1));
    CHECK_FALSE(verify_cover_witness(f1s, 2, {}, 1));
}

TEST_CASE("cycle witness verifier wants the exact component list") {
    instance f2m = load_fixture("FIG2_modified.txt");
    path_t cut = {4, 5};
    std::vector<path_t> islands = {{0, 1, 2}, {3}, {6, 7, 8, 9}};
    CHECK(verify_cycle_witness(f2m, cut, islands));
    std::vector<path_t> dropped = {{0, 1, 2}, {3}};
    CHECK_FALSE(verify_cycle_witness(f2m, cut, dropped));
    std::vector<path_t> merged = {{0, 1, 2, 3}, {6, 7, 8, 9}};
    CHECK_FALSE(verify_cycle_witness(f2m, cut, merged));
    std::vector<path_t> padded = {{0, 1, 2}, {3}, {6, 7, 8, 9}, {5}};
    CHECK_FALSE(verify_cycle_witness(f2m, cut, padded));
    // an empty cutset always certifies: any terminal component count beats 0
    instance f2 = load_fixture("FIG2.txt");
    std::vector<path_t> whole = {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
    CHECK(verify_cycle_witness(f2, {}, whole));
}

TEST_CASE("solver and oracles agree across a seeded sweep") {
    for (unsigned seed = 1; seed <= 200; ++seed) {
        gen_params gp;
        gp.n = 1 + static_cast<int>(seed % 12);
        gp.seed = seed;
        gp.coord_range = 6 + static_cast<int>(seed % 20);
        gp.max_len = 1 + static_cast<int>(seed % 10);
        gp.frac_num = 1 + static_cast<int>(seed % 4);
        gp.frac_den = 4;
        instance inst = generate(gp);
        CAPTURE(seed);
        steiner_cover cov = steiner_path_cover(inst);
        CHECK(static_cast<int>(cov.paths.size()) == brute_pi_s(inst));
        CHECK(steiner_cycle(inst).cycle.has_value() == brute_cycle_exists(inst));
    }
}

TEST_CASE("generator is deterministic and respects its knobs") {
    gen_params gp;
    gp.n = 6;
    gp.seed = 5;
    gp.coord_range = 11;
    gp.max_len = 6;
    gp.frac_num = 2;
    gp.frac_den = 4;
    instance a = generate(gp);
    instance b = generate(gp);
    REQUIRE(a.n() == 6);
    CHECK(a.terminal_count == 3);  // ceil(6 * 2 / 4)
    for (int i = 0; i < a.n(); ++i) {
        CHECK(a.items[i].id == b.items[i].id);
        CHECK(a.items[i].l == b.items[i].l);
        CHECK(a.items[i].r == b.items[i].r);
        CHECK(a.is_terminal[i] == b.is_terminal[i]);
    }
    CHECK(a.items[0].id == "p1");  // renamed in sorted order
    gen_params other = gp;
    other.seed = 6;
    instance c = generate(other);
    bool same = true;
    for (int i = 0; i < a.n(); ++i)
        same = same && a.items[i].l == c.items[i].l && a.items[i].r == c.items[i].r;
    CHECK_FALSE(same);
}
