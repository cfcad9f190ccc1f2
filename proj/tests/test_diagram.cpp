#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "homfly/diagram.hpp"

using namespace homfly;

namespace {

Diagram make(const std::string& word) { return close_braid(parse_braid(word)); }

std::vector<std::string> small_words() {
    // Every word of length <= 3 over {+-1, +-2}, plus a few longer ones.
    std::vector<std::string> out = {""};
    const std::vector<std::string> gens = {"1", "-1", "2", "-2"};
    for (const auto& a : gens) {
        out.push_back(a);
        for (const auto& b : gens) {
            out.push_back(a + " " + b);
            for (const auto& c : gens) out.push_back(a + " " + b + " " + c);
        }
    }
    out.push_back("1 1 1");
    out.push_back("1 1 -2 1 -2");
    out.push_back("1 -2 1 -2");
    out.push_back("2 2");
    out.push_back("1 2 1 2");
    return out;
}

}  // namespace

TEST_CASE("braid word parsing") {
    BraidWord w = parse_braid("1 1 1");
    CHECK(w.strands == 2);
    CHECK(w.letters == std::vector<int>{1, 1, 1});

    w = parse_braid("  1   -2 ");
    CHECK(w.strands == 3);
    CHECK(w.letters == std::vector<int>{1, -2});

    w = parse_braid("");
    CHECK(w.strands == 1);
    CHECK(w.letters.empty());

    CHECK(braid_to_string(parse_braid("1 -2 1")) == "1 -2 1");

    CHECK_THROWS_AS(parse_braid("1 0 1"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1 x"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1.5"), BraidParseError);

    CHECK(mirror_word(parse_braid("1 -2")).letters == std::vector<int>{-1, 2});
    CHECK(conjugate_word(parse_braid("1 1"), 1).letters ==
          std::vector<int>{1, 1, 1, -1});
    BraidWord s = stabilize_word(parse_braid("1 1"));
    CHECK(s.strands == 3);
    CHECK(s.letters == std::vector<int>{1, 1, 2});
}

TEST_CASE("closure of the positive trefoil word") {
    Diagram D = make("1 1 1");
    CHECK(D.strands == 2);
    CHECK(D.n_edges == 6);
    CHECK(D.marked_edge == 0);
    CHECK(D.writhe() == 3);
    REQUIRE(D.crossings.size() == 3);

    // Frozen edge numbering: top edges 0,1; then each crossing's outputs,
    // the last crossing's outputs wrapping around to the top edges.
    const int want[3][4] = {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 0, 1}};
    for (int t = 0; t < 3; ++t) {
        CHECK(D.crossings[t].sign == +1);
        CHECK(D.crossings[t].k == want[t][0]);
        CHECK(D.crossings[t].l == want[t][1]);
        CHECK(D.crossings[t].i == want[t][2]);
        CHECK(D.crossings[t].j == want[t][3]);
    }
    for (int e = 0; e < 6; ++e) CHECK_FALSE(D.free_loop[e]);
}

TEST_CASE("closure corner cases") {
    SECTION("empty word: one crossing-free loop") {
        Diagram D = make("");
        CHECK(D.strands == 1);
        CHECK(D.n_edges == 1);
        CHECK(D.crossings.empty());
        CHECK(D.free_loop[0]);
        CHECK(link_components(D) == 1);
    }
    SECTION("single positive kink") {
        Diagram D = make("1");
        CHECK(D.n_edges == 2);
        REQUIRE(D.crossings.size() == 1);
        const Crossing& c = D.crossings[0];
        CHECK(c.k == 0);
        CHECK(c.l == 1);
        CHECK(c.i == 0);  // slots may repeat an edge
        CHECK(c.j == 1);
        CHECK(link_components(D) == 1);
    }
    SECTION("word not touching the first strand") {
        Diagram D = make("2 2");
        CHECK(D.strands == 3);
        CHECK(D.n_edges == 5);
        CHECK(D.free_loop[0]);  // the marked edge is the untouched loop
        CHECK_FALSE(D.free_loop[1]);
        REQUIRE(D.crossings.size() == 2);
        CHECK(D.crossings[0].k == 1);
        CHECK(D.crossings[0].l == 2);
        CHECK(D.crossings[0].i == 3);
        CHECK(D.crossings[0].j == 4);
        CHECK(D.crossings[1].k == 3);
        CHECK(D.crossings[1].l == 4);
        CHECK(D.crossings[1].i == 1);
        CHECK(D.crossings[1].j == 2);
        CHECK(link_components(D) == 3);  // Hopf link plus the loop
    }
    SECTION("mixed word") {
        Diagram D = make("1 -2");
        CHECK(D.n_edges == 4);
        CHECK(D.writhe() == 0);
        REQUIRE(D.crossings.size() == 2);
        CHECK(D.crossings[0].k == 0);
        CHECK(D.crossings[0].l == 1);
        CHECK(D.crossings[0].i == 0);
        CHECK(D.crossings[0].j == 3);
        CHECK(D.crossings[1].k == 3);
        CHECK(D.crossings[1].l == 2);
        CHECK(D.crossings[1].i == 1);
        CHECK(D.crossings[1].j == 2);
        CHECK(link_components(D) == 1);
    }
}

TEST_CASE("every edge has consistent birth and death records") {
    for (const auto& word : small_words()) {
        Diagram D = make(word);
        INFO("word: '" << word << "'");
        std::set<std::pair<int, int>> births, deaths;
        for (int e = 0; e < D.n_edges; ++e) {
            if (D.free_loop[e]) {
                CHECK(D.birth[e][0] == -1);
                CHECK(D.death[e][0] == -1);
                continue;
            }
            auto [bt, bs] = D.birth[e];
            auto [dt, ds] = D.death[e];
            REQUIRE(bt >= 0);
            REQUIRE(dt >= 0);
            CHECK(D.crossings[bt].out_edge(bs) == e);
            CHECK(D.crossings[dt].in_edge(ds) == e);
            CHECK(births.insert({bt, bs}).second);
            CHECK(deaths.insert({dt, ds}).second);
        }
        // Edge count: two per letter plus one loop per untouched position.
        int loops = 0;
        for (int e = 0; e < D.n_edges; ++e) loops += D.free_loop[e] ? 1 : 0;
        CHECK(D.n_edges == 2 * static_cast<int>(D.letters.size()) + loops);
        CHECK(static_cast<int>(births.size()) == 2 * static_cast<int>(D.letters.size()));
    }
}

TEST_CASE("rotation number of a full closure is minus the strand count") {
    for (const auto& word : small_words()) {
        Diagram D = make(word);
        INFO("word: '" << word << "'");
        CHECK(rotation_number(D) == -D.strands);
        auto circles = induced_circles(D, all_edges_mask(D));
        CHECK(static_cast<int>(circles.size()) == D.strands);
        for (const auto& c : circles) CHECK(c.orientation == -1);
    }
}

TEST_CASE("marked rotation numbers") {
    // The circle through the marked edge is dropped from the count; for a
    // braid closure every other oriented-smoothing circle keeps its sign.
    CHECK(marked_rotation_number(make("1 1 1")) == -1);
    CHECK(marked_rotation_number(make("1 -2")) == -2);
    CHECK(marked_rotation_number(make("")) == 0);
    CHECK(marked_rotation_number(make("1")) == -1);
    CHECK(marked_rotation_number(make("2 2")) == -2);

    for (const auto& word : small_words()) {
        Diagram D = make(word);
        INFO("word: '" << word << "'");
        CHECK(marked_rotation_number(D) == -(D.strands - 1));
    }
}

TEST_CASE("seifert circle data") {
    Diagram D = make("1 -2");
    SeifertData S = seifert_circles(D);
    REQUIRE(S.circles.size() == 3);
    REQUIRE(S.special >= 0);
    CHECK(S.circles[S.special].through_marked);
    int zero_count = 0, minus_count = 0;
    for (int s : S.signs) {
        if (s == 0) ++zero_count;
        if (s == -1) ++minus_count;
    }
    CHECK(zero_count == 1);
    CHECK(minus_count == 2);
}

TEST_CASE("rotation numbers of labeling subdiagrams") {
    // Frozen values for the trefoil cycle on edges 1,3,5: its own circle has
    // marked rotation -1, the complementary side's circle runs through the
    // marked edge and counts 0.
    Diagram D = make("1 1 1");
    std::vector<char> cycle(6, 0), rest(6, 0);
    for (int e : {1, 3, 5}) cycle[e] = 1;
    for (int e : {0, 2, 4}) rest[e] = 1;
    CHECK(marked_rotation_number(D, cycle) == -1);
    CHECK(marked_rotation_number(D, rest) == 0);
    CHECK(rotation_number(D, cycle) == -1);
    CHECK(rotation_number(D, rest) == -1);

    auto rest_circles = induced_circles(D, rest);
    REQUIRE(rest_circles.size() == 1);
    CHECK(rest_circles[0].through_marked);
    CHECK(rest_circles[0].edges == std::vector<int>{0, 2, 4});
}

TEST_CASE("link component counts") {
    CHECK(link_components(make("1 1 1")) == 1);
    CHECK(link_components(make("1 1")) == 2);
    CHECK(link_components(make("1 -1")) == 2);
    CHECK(link_components(make("1 2")) == 1);
    CHECK(link_components(make("1 -2 1 -2")) == 1);  // figure-eight knot
    CHECK(link_components(make("2 2")) == 3);

    // Component count depends only on the strand permutation.
    for (const auto& word : small_words()) {
        BraidWord w = parse_braid(word);
        Diagram D = close_braid(w);
        std::vector<int> perm(w.strands);
        for (int p = 0; p < w.strands; ++p) perm[p] = p;
        for (int letter : w.letters) {
            int p = (letter < 0 ? -letter : letter) - 1;
            std::swap(perm[p], perm[p + 1]);
        }
        std::vector<char> seen(w.strands, 0);
        int cycles = 0;
        for (int p = 0; p < w.strands; ++p) {
            if (seen[p]) continue;
            ++cycles;
            for (int q = p; !seen[q]; q = perm[q]) seen[q] = 1;
        }
        INFO("word: '" << word << "'");
        CHECK(link_components(D) == cycles);
    }
}

TEST_CASE("mirroring flips signs and writhe") {
    Diagram D = make("1 1 -2");
    Diagram M = D.mirrored();
    CHECK(M.writhe() == -D.writhe());
    REQUIRE(M.crossings.size() == D.crossings.size());
    for (size_t t = 0; t < D.crossings.size(); ++t) {
        CHECK(M.crossings[t].sign == -D.crossings[t].sign);
        CHECK(M.crossings[t].k == D.crossings[t].k);
        CHECK(M.crossings[t].j == D.crossings[t].j);
    }
    // The planar data is untouched, so rotation numbers agree.
    CHECK(rotation_number(M) == rotation_number(D));
    CHECK(marked_rotation_number(M) == marked_rotation_number(D));
}
