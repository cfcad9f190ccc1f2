#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "homfly/complex.hpp"

using homfly::ComplexSignature;
using homfly::F2Matrix;
using homfly::F2RowSpace;
using homfly::F2Vec;
using homfly::FreeComplex;
using homfly::GradedDims;
using homfly::graded_homology;
using homfly::koszul;
using homfly::Mono;
using homfly::RingZ2;
using homfly::tensor;
using homfly::unit_cancel;
using homfly::Z2Poly;

namespace {

Z2Poly V(int v, int e = 1) { return Z2Poly::var(v, e); }

F2Vec bits(std::vector<int> b) {
    F2Vec v(static_cast<int>(b.size()));
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i]) v.set(static_cast<int>(i));
    }
    return v;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// The four-generator complex attached to one positively oriented crossing,
/// in the three-grading conventions (first grading weighted 2 per variable;
/// horizontal arrows raise it by 2, vertical arrows raise the third grading).
FreeComplex crossing_square(const RingZ2& ring) {
    ComplexSignature sig;
    sig.n_gr = 3;
    sig.var_weight = {2, 0, 0};
    sig.diff_degrees = {{2, 2, 0}, {0, 0, 2}};
    FreeComplex C(ring, sig);
    C.add_level({{"SW", {2, -2, -2}}});
    C.add_level({{"NW", {0, -2, 0}}, {"SE", {0, 0, -2}}});
    C.add_level({{"NE", {0, 0, 0}}});
    // Variables: 0 = upper-left in, 1 = upper-right in, 2 = lower-left out,
    // 3 = lower-right out.
    C.add_entry(0, 0, 0, V(3) + V(0), 1);              // SW -> NW
    C.add_entry(0, 0, 1, V(2) * V(3) + V(0) * V(1), 0);  // SW -> SE
    C.add_entry(1, 0, 0, V(0) + V(2), 0);              // NW -> NE
    C.add_entry(1, 1, 0, Z2Poly::one(), 1);            // SE -> NE
    C.normalize();
    return C;
}

/// Same square regraded to the two evaluation gradings, where both arrow
/// families share the degree (-1, 0) and each variable weighs (-2, -1).
FreeComplex regraded_square(const RingZ2& ring) {
    ComplexSignature sig;
    sig.n_gr = 2;
    sig.var_weight = {-2, -1};
    sig.diff_degrees = {{-1, 0}, {-1, 0}};
    FreeComplex C(ring, sig);
    C.add_level({{"SW", {-2, -2}}});
    C.add_level({{"NW", {-1, -1}}, {"SE", {1, 0}}});
    C.add_level({{"NE", {0, 0}}});
    C.add_entry(0, 0, 0, V(3) + V(0), 1);
    C.add_entry(0, 0, 1, V(2) * V(3) + V(0) * V(1), 0);
    C.add_entry(1, 0, 0, V(0) + V(2), 0);
    C.add_entry(1, 1, 0, Z2Poly::one(), 1);
    C.normalize();
    return C;
}

}  // namespace

TEST_CASE("monomial packing and polynomial arithmetic") {
    Mono m = homfly::mono_mul(homfly::mono_var(0, 2), homfly::mono_var(3));
    CHECK(homfly::mono_exp(m, 0) == 2);
    CHECK(homfly::mono_exp(m, 3) == 1);
    CHECK(homfly::mono_exp(m, 1) == 0);
    CHECK(homfly::mono_total(m) == 3);
    CHECK(homfly::mono_divides(homfly::mono_var(0), m));
    CHECK_FALSE(homfly::mono_divides(homfly::mono_var(1), m));

    Z2Poly x = V(0), y = V(1), z = V(2);
    CHECK((x + y) * (x + y) == x * x + y * y);  // characteristic two
    CHECK((x + x).is_zero());
    CHECK(Z2Poly::one() * (x + y) == x + y);
    CHECK((x * y).substitute(0, y + z) == y * y + y * z);

    CHECK((V(0, 2) * V(1)).internal_degree() == 6);
    CHECK(Z2Poly::zero().internal_degree() == -1);
    CHECK(Z2Poly::one().internal_degree() == 0);
    CHECK_THROWS_AS((x + x * x).internal_degree(), std::invalid_argument);
    CHECK((x + y).homogeneous());
    CHECK_FALSE((x + x * x).homogeneous());

    CHECK((V(0) + V(1, 2)).str({"a", "b"}) == "a + b^2");
    CHECK(Z2Poly::zero().str() == "0");
    CHECK(Z2Poly::one().str() == "1");
}

TEST_CASE("bit vectors and rank computations") {
    F2Vec v = bits({1, 0, 1, 0});
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.first_bit() == 0);
    v.flip(0);
    CHECK(v.first_bit() == 2);
    v ^= bits({0, 0, 1, 0});
    CHECK(v.is_zero());

    F2Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i);
    CHECK(id.rank() == 3);
    CHECK(id.kernel_basis().empty());

    F2Matrix rep(2, 2);
    rep.set(0, 0);
    rep.set(0, 1);
    rep.set(1, 0);
    rep.set(1, 1);
    CHECK(rep.rank() == 1);

    F2Matrix m(2, 3);  // rows (1,1,0), (0,1,1)
    m.set(0, 0);
    m.set(0, 1);
    m.set(1, 1);
    m.set(1, 2);
    CHECK(m.rank() == 2);
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == bits({1, 1, 1}));
    CHECK(m.apply(ker[0]).is_zero());
    CHECK(m.apply(bits({1, 0, 0})) == bits({1, 0}));
}

TEST_CASE("incremental row space expresses members of the span") {
    F2RowSpace S(4, 2);
    CHECK(S.add(bits({1, 1, 0, 0})));
    CHECK(S.add_tracked(bits({0, 1, 1, 0}), 0));
    CHECK(S.add_tracked(bits({0, 0, 1, 1}), 1));
    CHECK(S.dim() == 3);
    CHECK_FALSE(S.add(bits({1, 0, 0, 1})));  // dependent

    auto [res, coords] = S.express(bits({1, 0, 0, 1}));
    CHECK(res.is_zero());
    CHECK(coords.get(0));
    CHECK(coords.get(1));

    auto [res2, coords2] = S.express(bits({1, 0, 0, 0}));
    CHECK_FALSE(res2.is_zero());
    (void)coords2;

    auto [res3, coords3] = S.express(bits({1, 1, 0, 0}));
    CHECK(res3.is_zero());
    CHECK_FALSE(coords3.get(0));  // untracked combination
    CHECK_FALSE(coords3.get(1));
}

TEST_CASE("linear quotient rings eliminate by Gaussian elimination") {
    RingZ2 freering(3);
    CHECK(freering.free_vars() == std::vector<int>{0, 1, 2});
    for (int k = 0; k <= 5; ++k) {
        CHECK(static_cast<long long>(freering.degree_basis(k).size()) ==
              binom(k + 2, 2));
    }

    RingZ2 q(4, {V(0) + V(1) + V(2) + V(3)});
    CHECK(q.n_relations() == 1);
    CHECK(q.free_vars() == std::vector<int>{0, 1, 2});
    CHECK(q.reduce(V(3)) == V(0) + V(1) + V(2));
    CHECK(q.is_reduced_zero(V(0) + V(1) + V(2) + V(3)));
    CHECK(q.degree_basis(2).size() == 6);

    RingZ2 dup(2, {V(0) + V(1), V(1) + V(0)});
    CHECK(dup.n_relations() == 1);
    CHECK(dup.free_vars() == std::vector<int>{0});

    // Crossing sums around a closed braid are dependent: the last vertex
    // relation is the sum of the others.
    RingZ2 tref(6, {V(0) + V(1) + V(2) + V(3), V(2) + V(3) + V(4) + V(5),
                    V(4) + V(5) + V(0) + V(1)});
    CHECK(tref.n_relations() == 2);
    CHECK(tref.free_vars().size() == 4);
    CHECK(tref.is_reduced_zero(V(4) + V(5) + V(0) + V(1)));

    CHECK_THROWS_AS(RingZ2(3, {V(0) * V(1)}), std::invalid_argument);
    CHECK_THROWS_AS(RingZ2(3, {Z2Poly::one()}), std::invalid_argument);
}

TEST_CASE("two-term complexes validate the grading convention") {
    RingZ2 R(1);
    ComplexSignature sig;
    FreeComplex C = FreeComplex::two_term(R, sig, V(0), {2}, {0});
    C.validate();

    FreeComplex bad = FreeComplex::two_term(R, sig, V(0), {0}, {0});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("crossing square satisfies the two-directional conventions") {
    RingZ2 ring(4, {V(0) + V(1) + V(2) + V(3)});
    FreeComplex C = crossing_square(ring);
    C.validate();

    SECTION("the vertex relation is what closes the square") {
        FreeComplex loose = crossing_square(RingZ2(4));
        CHECK_THROWS_AS(loose.validate(), std::invalid_argument);
    }

    SECTION("tampered gradings are rejected") {
        FreeComplex off = C;
        off.levels[2][0].gr = {0, 0, 2};
        CHECK_THROWS_AS(off.validate(), std::invalid_argument);
    }

    SECTION("mixed arrow degrees cannot be collapsed blindly") {
        CHECK_THROWS_AS(graded_homology(C, 4), std::invalid_argument);
        CHECK_THROWS_AS(unit_cancel(C), std::invalid_argument);
    }
}

TEST_CASE("koszul complexes match hand-computed homology") {
    SECTION("one regular element") {
        RingZ2 R(1);
        GradedDims H = graded_homology(koszul(R, {V(0)}), 8);
        CHECK(H.dims == std::map<std::vector<int>, long long>{{{0, 0}, 1}});
    }

    SECTION("a regular sequence leaves only the quotient") {
        RingZ2 R(2);
        GradedDims H = graded_homology(koszul(R, {V(0), V(1)}), 8);
        CHECK(H.dims == std::map<std::vector<int>, long long>{{{0, 0}, 1}});
    }

    SECTION("a repeated element has first homology") {
        RingZ2 R(1);
        GradedDims H = graded_homology(koszul(R, {V(0), V(0)}), 8);
        CHECK(H.at({0, 0}) == 1);
        CHECK(H.at({1, 2}) == 1);
        CHECK(H.total() == 2);
    }

    SECTION("the zero element contributes two free summands") {
        RingZ2 R(1);
        GradedDims H = graded_homology(koszul(R, {Z2Poly::zero()}), 4);
        CHECK(H.at({0, 0}) == 1);
        CHECK(H.at({1, 0}) == 1);
        CHECK(H.at({0, 2}) == 1);
        CHECK(H.at({1, 2}) == 1);
    }

    SECTION("no elements reduces to the free module") {
        RingZ2 R(1);
        GradedDims H = graded_homology(koszul(R, {}), 6);
        GradedDims F = graded_homology(
            FreeComplex::free_module(R, ComplexSignature{}, {0}), 6);
        CHECK(H == F);
        CHECK(F.dims ==
              std::map<std::vector<int>, long long>{
                  {{0, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}, {{0, 6}, 1}});
    }

    SECTION("regular quadratic element: Hilbert series drops one factor") {
        RingZ2 R(3);
        GradedDims H = graded_homology(koszul(R, {V(0, 2) + V(1) * V(2)}), 12);
        for (int k = 0; 2 * k <= 12; ++k) {
            CHECK(H.at({0, 2 * k}) == binom(k + 2, 2) - binom(k, 2));
        }
        for (const auto& [key, dim] : H.dims) {
            CHECK(key[0] == 0);  // no higher homology for a regular element
            (void)dim;
        }
    }

    SECTION("koszul complexes multiply under tensor") {
        RingZ2 R(2);
        FreeComplex T = tensor(koszul(R, {V(0)}), koszul(R, {V(1)}));
        FreeComplex K = koszul(R, {V(0), V(1)});
        CHECK(T.base_level == K.base_level);
        CHECK(T.level_step == K.level_step);
        T.validate();
        CHECK(graded_homology(T, 8) == graded_homology(K, 8));
    }

    SECTION("binomial level sizes") {
        RingZ2 R(3);
        FreeComplex K = koszul(R, {V(0), V(1), V(2)});
        REQUIRE(K.n_levels() == 4);
        CHECK(K.levels[0].size() == 1);
        CHECK(K.levels[1].size() == 3);
        CHECK(K.levels[2].size() == 3);
        CHECK(K.levels[3].size() == 1);
        K.validate();
    }
}

TEST_CASE("unit cancellation preserves homology") {
    SECTION("an identity two-term complex cancels to nothing") {
        RingZ2 R(1);
        FreeComplex C =
            FreeComplex::two_term(R, ComplexSignature{}, Z2Poly::one(), {0}, {0});
        C.validate();
        FreeComplex E = unit_cancel(C);
        CHECK(E.n_levels() == 0);
        CHECK(graded_homology(E, 8).total() == 0);
        CHECK(graded_homology(C, 8).total() == 0);
    }

    SECTION("complexes without units are untouched") {
        RingZ2 R(1);
        FreeComplex C = koszul(R, {V(0)});
        FreeComplex E = unit_cancel(C);
        CHECK(E.n_levels() == C.n_levels());
        CHECK(E.entries.size() == C.entries.size());
        CHECK(graded_homology(E, 8) == graded_homology(C, 8));
    }

    SECTION("the regraded crossing square cancels to its surviving edge") {
        RingZ2 ring(4, {V(0) + V(1) + V(2) + V(3)});
        FreeComplex C = regraded_square(ring);
        C.validate();
        FreeComplex E = unit_cancel(C);
        E.validate();
        REQUIRE(E.n_levels() >= 2);
        REQUIRE(E.levels[0].size() == 1);
        REQUIRE(E.levels[1].size() == 1);
        CHECK(E.levels[0][0].name == "SW");
        CHECK(E.levels[1][0].name == "NW");
        REQUIRE(E.entries.size() == 1);
        CHECK(E.entries[0].poly == ring.reduce(V(3) + V(0)));
        CHECK(graded_homology(E, 8) == graded_homology(C, 8));

        FreeComplex named = unit_cancel(C, {{"SE", "NE"}});
        CHECK(named.entries.size() == 1);
        CHECK(graded_homology(named, 8) == graded_homology(C, 8));
        CHECK_THROWS_AS(unit_cancel(C, {{"SW", "NE"}}),
                        std::invalid_argument);
    }

    SECTION("randomized planted units never change graded homology") {
        std::mt19937 rng(20240817);
        for (int trial = 0; trial < 40; ++trial) {
            bool quotient = trial % 2 == 1;
            RingZ2 R = quotient ? RingZ2(3, {V(0) + V(1) + V(2)}) : RingZ2(3);
            ComplexSignature sig;
            FreeComplex C = FreeComplex::free_module(R, sig, {0});
            std::uniform_int_distribution<int> degree(0, 2);
            std::uniform_int_distribution<int> coin(0, 1);
            int factors = 2 + trial % 2;
            for (int f = 0; f < factors; ++f) {
                int d = degree(rng);
                Z2Poly p;
                if (d == 0) {
                    p = Z2Poly::one();  // planted unit
                } else {
                    for (Mono m : R.degree_basis(d)) {
                        if (coin(rng)) p += Z2Poly(m);
                    }
                }
                int shift = 2 * (degree(rng) - 1);
                C = tensor(C, FreeComplex::two_term(R, sig, p,
                                                    {2 * d + shift}, {shift}));
            }
            C.validate();
            FreeComplex E = unit_cancel(C);
            E.validate();
            INFO("trial " << trial);
            CHECK(graded_homology(E, 8) == graded_homology(C, 8));
        }
    }
}
