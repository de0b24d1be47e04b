#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "steiner/greedy.hpp"
#include "steiner/oracle.hpp"

using namespace steiner;
using steiner::testing::ids;
using steiner::testing::load_fixture;

TEST_CASE("gp walks the minimum-right-endpoint greedy path") {
    instance f2 = load_fixture("FIG2.txt");
    path_t p = gp(f2);
    CHECK(ids(f2, p) == std::vector<std::string>{"i1", "i2", "i3", "i5", "i4", "i6", "i7", "i8",
                                                 "i9", "i10"});
    instance f1 = load_fixture("FIG1.txt");
    CHECK(ids(f1, gp(f1)) == std::vector<std::string>{"i1", "i2", "i3", "i4", "i6", "i5"});
}

TEST_CASE("gp_s neglects nothing when every interval is a terminal") {
    instance f1 = load_fixture("FIG1.txt");
    greedy_trace t = gp_s(f1, 0);
    CHECK(t.start == 0);
    CHECK(ids(f1, t.path) == std::vector<std::string>{"i1", "i2", "i3", "i4", "i6", "i5"});
    CHECK(t.neglected.empty());
}

TEST_CASE("gp_s neglects short non-terminals against the end they touch") {
    instance f1s = load_fixture("FIG1_sparse.txt");
    greedy_trace t = gp_s(f1s, 1);
    CHECK(ids(f1s, t.path) == std::vector<std::string>{"i2", "i3", "i4", "i6", "i10", "i8", "i9",
                                                       "i12"});
    REQUIRE(t.neglected.size() == 3);
    CHECK(t.neglected[0] == std::pair<int, path_t>{5, {4}});    // i5 against i6
    CHECK(t.neglected[1] == std::pair<int, path_t>{9, {6}});    // i7 against i10
    CHECK(t.neglected[2] == std::pair<int, path_t>{11, {10}});  // i11 against i12
}

TEST_CASE("decompose splits a path into covers and islands") {
    instance f1 = load_fixture("FIG1.txt");
    // (i1, i2, i3, i4, i6, i5): only i6 out-reaches the path end
    decomposition d = decompose({0, 1, 2, 3, 5, 4}, f1);
    CHECK(d.covers == path_t{5});
    REQUIRE(d.islands.size() == 2);
    CHECK(d.islands[0] == path_t{0, 1, 2, 3});
    CHECK(d.islands[1] == path_t{4});
    CHECK(d.exceed == path_t{5});

    instance f2m = load_fixture("FIG2_modified.txt");
    // (i2, i3, i5, i4): r(i5) = 12.5 passes r(i4) = 10.5
    decomposition dm = decompose({1, 2, 4, 3}, f2m);
    CHECK(dm.covers == path_t{4});
    REQUIRE(dm.islands.size() == 2);
    CHECK(dm.islands[0] == path_t{1, 2});
    CHECK(dm.islands[1] == path_t{3});

    // increasing right endpoints: no covers, one island
    decomposition di = decompose({0, 1, 2}, f1);
    CHECK(di.covers.empty());
    REQUIRE(di.islands.size() == 1);
    CHECK(di.islands[0] == path_t{0, 1, 2});
    CHECK(di.exceed.empty());
}

TEST_CASE("cover witness drops cut members that separate nothing") {
    instance f1 = load_fixture("FIG1.txt");
    cover_witness w = build_cover_witness(f1, {{0, 1, 2, 3, 5, 4}, {6, 7, 8, 9, 11, 10}});
    CHECK(w.cutset == path_t{5, 11});
    CHECK(w.s_island_count == 4);
    CHECK(verify_cover_witness(f1, 2, w.cutset, w.s_island_count));
}

TEST_CASE("solve_cover reproduces the two-figure goldens") {
    instance f1 = load_fixture("FIG1.txt");
    steiner_cover c1 = steiner_path_cover(f1);
    REQUIRE(c1.paths.size() == 2);
    CHECK(ids(f1, c1.paths[0]) == std::vector<std::string>{"i1", "i2", "i3", "i4", "i6", "i5"});
    CHECK(ids(f1, c1.paths[1]) == std::vector<std::string>{"i7", "i8", "i9", "i10", "i12", "i11"});
    CHECK(ids(f1, c1.witness.cutset) == std::vector<std::string>{"i6", "i12"});
    CHECK(c1.witness.s_island_count == 4);

    instance f1s = load_fixture("FIG1_sparse.txt");
    steiner_cover cs = steiner_path_cover(f1s);
    REQUIRE(cs.paths.size() == 1);
    CHECK(ids(f1s, cs.paths[0]) == std::vector<std::string>{"i2", "i3", "i4", "i6", "i10", "i8",
                                                            "i9", "i12"});
    CHECK(cs.witness.cutset.empty());
    CHECK(cs.witness.s_island_count == 1);
}

TEST_CASE("solve_cover stats expose runs and neglect events") {
    instance f1s = load_fixture("FIG1_sparse.txt");
    cover_stats st;
    steiner_cover cov = solve_cover(f1s, std::nullopt, &st);
    CHECK(cov.paths.size() == 1);
    REQUIRE(st.runs.size() == 1);
    CHECK(st.runs[0].path == cov.paths[0]);
    REQUIRE(st.runs[0].neglected.size() == 3);
    CHECK(st.runs[0].neglected[0] == std::pair<int, path_t>{5, {4}});
    CHECK(st.reads == 12);
}

TEST_CASE("witness identity holds on every emitted cover") {
    for (const char* name : {"FIG1.txt", "FIG1_sparse.txt", "FIG2.txt", "FIG2_modified.txt"}) {
        instance inst = load_fixture(name);
        steiner_cover cov = steiner_path_cover(inst);
        CHECK(cov.witness.s_island_count == cov.paths.size() + cov.witness.cutset.size());
        CHECK(verify_cover_witness(inst, static_cast<long long>(cov.paths.size()),
                                   cov.witness.cutset, cov.witness.s_island_count));
    }
}

TEST_CASE("maximal continuation keeps unread bridges off the cutset") {
    // the stopping walk never reads the tail 18-reaching interval, which
    // bridges the two islands a naive cutset would claim
    instance inst = steiner::testing::leftover_bridge();
    steiner_cover cov = steiner_path_cover(inst);
    REQUIRE(cov.paths.size() == 1);
    CHECK(ids(inst, cov.paths[0]) == std::vector<std::string>{"p3", "p5", "p4", "p8", "p7"});
    CHECK(cov.witness.cutset.empty());
    CHECK(cov.witness.s_island_count == 1);
    CHECK(verify_cover_witness(inst, 1, cov.witness.cutset, cov.witness.s_island_count));
    cover_witness direct = maximal_cover_witness(inst);
    CHECK(direct.cutset == cov.witness.cutset);
    CHECK(direct.s_island_count == cov.witness.s_island_count);
}

TEST_CASE("cover splits across a disconnected instance") {
    instance inst = instance::build({steiner::testing::iv("a", "0", "1"),
                                     steiner::testing::iv("b", "0", "2"),
                                     steiner::testing::iv("c", "10", "11"),
                                     steiner::testing::iv("d", "10", "12")},
                                    {"a", "c"});
    steiner_cover cov = steiner_path_cover(inst);
    CHECK(cov.paths.size() == 2);
    CHECK(cov.witness.cutset.empty());
    CHECK(cov.witness.s_island_count == 2);
}
