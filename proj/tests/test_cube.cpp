#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "homfly/braid.hpp"
#include "homfly/cube.hpp"
#include "homfly/skein.hpp"

using namespace homfly;

namespace {

Diagram make(const std::string& word) { return close_braid(parse_braid(word)); }

using Dims = std::map<std::vector<int>, long long>;

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Z2Poly U(int i) { return Z2Poly::var(i - 1); }

/// Closed-form single-differential cube homology of a connected diagram
/// whose closure has n link components: dimension C(n-1, s) * C(d+n-1, n-1)
/// at {M, A} = {-s-2d, -s-d} for 0 <= s <= n-1, d >= 0.
Dims sl_closed_form(int n_components, int cutoff) {
    Dims out;
    for (int s = 0; s < n_components; ++s) {
        for (int d = 0;; ++d) {
            int M = -s - 2 * d, A = -s - d;
            if (M < -cutoff) break;
            out[{M, A}] = binom(n_components - 1, s) *
                          binom(d + n_components - 1, n_components - 1);
        }
    }
    return out;
}

/// Coefficient of t^e in sign * (1 - t^2)^expo (series-expanded when the
/// exponent is negative).
long long euler_series_coeff(int sign, int expo, int e) {
    if (e % 2 != 0) return 0;
    long long c = 0;
    if (expo >= 0) {
        if (e >= 0 && e / 2 <= expo) {
            c = binom(expo, e / 2);
            if ((e / 2) % 2 != 0) c = -c;
        }
    } else {
        int m = -expo;
        if (e >= 0) c = binom(e / 2 + m - 1, m - 1);
    }
    return sign * c;
}

/// The one-variable Euler characteristic of the middle homology collapses
/// both differentials (each preserves t^{q-h} and flips the sign), so the
/// windowed alternating sum must match
///   (-1)^(b - 1 + c) * (1 - t^2)^(c + k - F)
/// where b = strands, c = crossings, and F counts the cube ring's free
/// variables.  (Per tensor factor the alternating corner sum is t^2(t^2-1)
/// for a positive square, t^-2(t^2-1) for a negative one, and -(t^2-1) for
/// a reducing factor; the grading shift contributes (-1)^(b-1) t^(-2w).)
/// Compares every t-degree the cutoff window determines completely.
void check_euler_t(const std::string& word, int k) {
    const int cutoff = 12;
    Diagram D = make(word);
    CubeOptions opt;
    opt.reduced_at = reduction_edges(D, k);
    FreeComplex C = homfly_cube(D, opt);
    GradedDims g = detail::two_pass_homology(C, cutoff, middle_shift(D));

    int c = static_cast<int>(D.crossings.size());
    int F = static_cast<int>(C.ring.free_vars().size());
    int expo = c + k - F;
    int sign = ((D.strands - 1 + c) % 2 == 0) ? 1 : -1;

    // Shifted h of any class lies in [s_h - 2 * #factors, s_h]; a t-degree
    // e = q - h is complete once every such h keeps q = e + h in the window.
    int s_h = D.writhe() + D.strands - 1;
    int h_min = s_h - 2 * (c + k), h_max = s_h;
    int e_lo = -cutoff - h_min, e_hi = cutoff - h_max;
    REQUIRE(e_lo <= 0);
    REQUIRE(e_hi >= 2);

    std::map<int, long long> coeff;
    for (const auto& [key, d] : g.dims) {
        int e = key[0] - key[1];
        int par = (((key[2] - key[1]) / 2) % 2 + 2) % 2;
        coeff[e] += (par == 0) ? d : -d;
    }
    for (int e = e_lo; e <= e_hi; ++e) {
        auto it = coeff.find(e);
        long long got = it == coeff.end() ? 0 : it->second;
        INFO("word \"" << word << "\" k=" << k << " t-degree " << e);
        CHECK(got == euler_series_coeff(sign, expo, e));
    }
}

/// For a knot, the alternating sum of the once-reduced middle homology over
/// (a, q) must equal the skein polynomial of the mirror word exactly.
void check_euler_knot(const std::string& word) {
    const int cutoff = 12;
    Diagram D = make(word);
    REQUIRE(link_components(D) == 1);
    GradedDims g = middle_homfly_homology(D, 1, cutoff);
    Laurent chi = Laurent::zero();
    for (const auto& [key, d] : g.dims) {
        INFO("word \"" << word << "\" class at q=" << key[0]);
        CHECK(std::abs(key[0]) <= cutoff - 4);  // window truly contains it all
        int par = (((key[2] - key[1]) / 2) % 2 + 2) % 2;
        BigInt c = (par == 0) ? BigInt(d) : BigInt(-d);
        chi = chi + Laurent::mono(c, {{"a", key[1]}, {"q", key[0]}});
    }
    Laurent want =
        homfly_poly(make(braid_to_string(mirror_word(parse_braid(word)))))
            .as_laurent();
    INFO("word \"" << word << "\"");
    CHECK(chi == want);
}

const std::vector<std::string> kConnectedWords = {
    "1", "-1", "1 1", "1 -1", "-1 1", "-1 -1", "1 2", "-1 2", "1 1 1"};

}  // namespace

TEST_CASE("cube of the unknot is the unit complex") {
    Diagram D = make("");
    FreeComplex C = homfly_cube(D);
    CHECK(C.n_levels() == 1);
    REQUIRE(C.levels[0].size() == 1);
    CHECK(C.levels[0][0].gr == std::vector<int>{0, 0, 0});
    CHECK(C.entries.empty());
    CHECK(C.ring.free_vars().size() == 1);
    CHECK(C.ring.n_relations() == 0);
}

TEST_CASE("trefoil cube has the tensor-cube shape") {
    FreeComplex C = homfly_cube(make("1 1 1"));
    REQUIRE(C.n_levels() == 7);
    std::vector<int> sizes;
    int total = 0;
    for (const auto& lvl : C.levels) {
        sizes.push_back(static_cast<int>(lvl.size()));
        total += static_cast<int>(lvl.size());
    }
    CHECK(sizes == std::vector<int>{1, 6, 15, 20, 15, 6, 1});
    CHECK(total == 64);
    CHECK(C.ring.free_vars().size() == 4);  // 6 edges, vertex relations rank 2
    CHECK_NOTHROW(C.validate());
}

TEST_CASE("cube rejects bad options") {
    Diagram D = make("1 1");
    CubeOptions opt;
    opt.states = {VertexState::singular};  // wrong arity
    CHECK_THROWS_AS(homfly_cube(D, opt), std::invalid_argument);

    CHECK_THROWS_AS(homfly_cube(D, std::vector<int>{7}), std::invalid_argument);
    CHECK_THROWS_AS(homfly_cube(D, std::vector<int>{-1}), std::invalid_argument);

    CubeOptions cut;
    cut.cut_marked = true;
    CHECK_THROWS_AS(homfly_cube(make(""), cut), std::invalid_argument);

    CubeOptions conflict;
    conflict.cut_marked = true;
    conflict.reduced_at = {0};
    CHECK_THROWS_WITH(homfly_cube(D, conflict),
                      Catch::Matchers::ContainsSubstring("conflict"));

    CubeOptions wide;
    wide.cut_marked = true;  // 8 edges + the extra variable exceeds the cap
    CHECK_THROWS_WITH(homfly_cube(make("1 1 1 1"), wide),
                      Catch::Matchers::ContainsSubstring("at most"));

    CHECK_THROWS_AS(detail::build_cube(make("1"), {VertexState::positive},
                                       /*removed=*/2, {}, false),
                    std::invalid_argument);
}

TEST_CASE("cut all-singular square matches its two announced factors") {
    Diagram D = make("1 1");
    CubeOptions opt;
    opt.states = {VertexState::singular, VertexState::singular};
    opt.cut_marked = true;
    FreeComplex C = homfly_cube(D, opt);

    CHECK(C.ring.n_vars() == 5);
    CHECK(C.ring.n_relations() == 2);
    CHECK(C.ring.free_vars().size() == 3);
    REQUIRE(C.n_levels() == 3);
    CHECK(C.levels[0].size() == 1);
    CHECK(C.levels[1].size() == 2);
    CHECK(C.levels[2].size() == 1);

    Z2Poly g1 = C.ring.reduce(U(1) * U(2) + U(3) * U(4));
    Z2Poly g2 = C.ring.reduce(U(3) * U(4) + U(5) * U(2));
    CHECK(g1 == g2);  // the two relations identify the factor maps
    REQUIRE(C.entries.size() == 4);
    for (const auto& e : C.entries) {
        CHECK(e.poly == g1);
        CHECK(e.tag == 0);
    }
}

TEST_CASE("koszul flat base change and its frozen homology") {
    ComplexSignature sig{1, {2}, {{0}}};
    Z2Poly p = U(1) * U(2) + U(3) * U(4);
    Z2Poly r = U(3) * U(4) + U(5) * U(2);
    Z2Poly L1 = U(1) + U(2) + U(3) + U(4);
    Z2Poly L2 = U(2) + U(3) + U(4) + U(5);

    GradedDims big = graded_homology(koszul(RingZ2(5), {p, r, L1, L2}, sig), 12);
    GradedDims small =
        graded_homology(koszul(RingZ2(5, {L1, L2}), {p, r}, sig), 12);
    CHECK(big == small);

    Dims want;
    for (int d = 0; d <= 6; ++d) want[{0, 2 * d}] = 2 * d + 1;
    for (int d = 0; d <= 4; ++d) want[{1, 4 + 2 * d}] = 2 * d + 1;
    CHECK(small.dims == want);
}

TEST_CASE("reduction edge policy and component helpers") {
    CHECK(detail::edge_component_ids(make("1 -1")) ==
          std::vector<int>{0, 1, 1, 0});
    CHECK(reduction_edges(make("1 -1"), 3) == std::vector<int>{0, 1, 0});
    CHECK(reduction_edges(make("1 1 1"), 2) == std::vector<int>{0, 0});

    BraidWord id2;
    id2.strands = 2;
    Diagram two_loops = close_braid(id2);
    CHECK(two_loops.n_edges == 2);
    CHECK(reduction_edges(two_loops, 3) == std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(reduction_edges(two_loops, -1), std::invalid_argument);

    CHECK(diagram_connected(make("1 1 1")));
    CHECK(diagram_connected(make("1 -1")));  // one block through crossings
    CHECK_FALSE(diagram_connected(two_loops));
}

TEST_CASE("middle homology of the unknot") {
    Dims free_tower;
    for (int d = 0; d <= 6; ++d) free_tower[{2 * d, 0, 0}] = 1;
    CHECK(middle_homfly_homology(make(""), 0, 12).dims == free_tower);

    Dims point{{{0, 0, 0}, 1}};
    CHECK(middle_homfly_homology(make(""), 1, 12).dims == point);
}

TEST_CASE("middle homology of the trefoil, regression rows") {
    GradedDims g = middle_homfly_homology(make("1 1 1"), 0, 8);
    Dims want;
    want[{-2, 2, 2}] = 1;
    want[{0, 2, 2}] = 1;
    want[{0, 4, -2}] = 1;
    for (int q = 2; q <= 8; q += 2) {
        want[{q, 2, -2}] = 1;
        want[{q, 2, 2}] = 1;
        want[{q, 4, -2}] = 1;
    }
    CHECK(g.dims == want);
}

TEST_CASE("one-variable Euler characteristic matches the closed form") {
    for (const auto& w : kConnectedWords) {
        for (int k = 0; k <= 1; ++k) check_euler_t(w, k);
    }
}

TEST_CASE("knot Euler characteristic recovers the skein polynomial") {
    for (const auto& w : kConnectedWords) {
        if (link_components(make(w)) == 1) check_euler_knot(w);
    }
}

TEST_CASE("extra reductions shift and double the homology") {
    auto check_multiplicity = [](const Diagram& D) {
        GradedDims g2 = middle_homfly_homology(D, 2, 12);
        GradedDims g3 = middle_homfly_homology(D, 3, 12);
        std::set<std::vector<int>> keys;
        for (const auto& [k, v] : g3.dims) keys.insert(k);
        for (const auto& [k, v] : g2.dims) {
            keys.insert(k);
            keys.insert(detail::add_vec(k, {2, 0, -2}));
        }
        for (const auto& key : keys) {
            if (std::abs(key[0]) > 10) continue;  // interior of the window
            INFO("key (" << key[0] << "," << key[1] << "," << key[2] << ")");
            CHECK(g3.at(key) ==
                  g2.at(key) + g2.at(detail::sub_vec(key, {2, 0, -2})));
        }
    };
    check_multiplicity(make("1 -1"));
    BraidWord id2;
    id2.strands = 2;
    check_multiplicity(close_braid(id2));
}

TEST_CASE("single-differential homology matches the closed form") {
    for (const auto& w : kConnectedWords) {
        Diagram D = make(w);
        INFO("word \"" << w << "\"");
        CHECK(sl_minus1_homology(D, 8).dims ==
              sl_closed_form(link_components(D), 8));
    }
    // Deeper window on the three headline diagrams.
    CHECK(sl_minus1_homology(make("1 1 1"), 12).dims == sl_closed_form(1, 12));
    CHECK(sl_minus1_homology(make("1 1"), 12).dims == sl_closed_form(2, 12));
    CHECK(sl_minus1_homology(make("1 -1"), 12).dims == sl_closed_form(2, 12));
}

TEST_CASE("resolution homology of the doubly singular two-strand closure") {
    Diagram D = make("1 1");
    auto rh = resolution_homology(
        D, {VertexState::singular, VertexState::singular}, 12);
    REQUIRE(rh.size() == 3);
    CHECK(rh[0].cycle.edge_list() == std::vector<int>{});
    CHECK(rh[1].cycle.edge_list() == std::vector<int>{1, 2});
    CHECK(rh[2].cycle.edge_list() == std::vector<int>{1, 3});

    Dims empty_cycle;
    for (int d = 0; d <= 6; ++d) empty_cycle[{2 * d, 0, 0}] = 2 * d + 1;
    for (int d = 0; d <= 5; ++d) empty_cycle[{2 + 2 * d, -2, 0}] = 2 * d + 1;
    CHECK(rh[0].dims.dims == empty_cycle);

    Dims unknot_row = middle_homfly_homology(make(""), 0, 12).dims;
    CHECK(rh[1].dims.dims == unknot_row);
    CHECK(rh[2].dims.dims == unknot_row);

    // The first-homology rows of the empty cycle agree with the frozen
    // two-element koszul rows two internal degrees later.
    for (int d = 0; d <= 4; ++d) {
        CHECK(rh[0].dims.at({4 + 2 * d, -2, 0}) == 2 * d + 3);
    }
}

TEST_CASE("resolution homology follows smoothed arcs") {
    Diagram T = make("1 1 1");
    auto rh = resolution_homology(
        T, {VertexState::smoothed, VertexState::smoothed,
            VertexState::smoothed}, 6);
    // Cycles are unions of the two smoothed circles {0,2,4} and {1,3,5};
    // only those avoiding the marked edge 0 survive.
    REQUIRE(rh.size() == 2);
    CHECK(rh[0].cycle.edge_list() == std::vector<int>{});
    CHECK(rh[1].cycle.edge_list() == std::vector<int>{1, 3, 5});
}

TEST_CASE("resolution homology of the singular kink, both code paths") {
    Diagram D = make("1");
    auto rh = resolution_homology(D, {VertexState::singular}, 12);
    REQUIRE(rh.size() == 2);
    CHECK(rh[0].cycle.edge_list() == std::vector<int>{});
    CHECK(rh[1].cycle.edge_list() == std::vector<int>{1});

    CubeOptions opt;
    opt.states = {VertexState::singular};
    FreeComplex C = homfly_cube(D, opt);
    GradedDims direct = detail::two_pass_homology(C, 12, {0, 0, 0});
    CHECK(rh[0].dims == direct);

    CHECK_THROWS_AS(
        resolution_homology(D, {VertexState::positive}, 4),
        std::invalid_argument);
    CHECK_THROWS_AS(resolution_homology(D, {}, 4), std::invalid_argument);
}

TEST_CASE("window below every generator comes back empty") {
    RingZ2 ring(1);
    FreeComplex C =
        FreeComplex::free_module(ring, cube_signature(), {14, 0, 0}, "g");
    bool saw = true;
    GradedDims g = detail::two_pass_homology(C, 12, {0, 0, 0}, &saw);
    CHECK_FALSE(saw);
    CHECK(g.dims.empty());
}

TEST_CASE("cube complexes validate symbolically") {
    CHECK_NOTHROW(homfly_cube(make("1 -1")).validate());
    CHECK_NOTHROW(homfly_cube(make("-1 2")).validate());
    CubeOptions opt;
    opt.states = {VertexState::singular, VertexState::negative};
    opt.reduced_at = {0, 2};
    CHECK_NOTHROW(homfly_cube(make("1 -1"), opt).validate());
}
