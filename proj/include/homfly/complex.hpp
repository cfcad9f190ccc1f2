#pragma once
/**
 * Graded free chain complexes over Z2 polynomial quotient rings.
 *
 * A complex is a list of homological levels, each holding finitely many free
 * generators with integer grading vectors, plus sparse differential entries
 * from level t to t+1.  Entries carry a tag selecting one of the declared
 * differential degrees (the cube complexes distinguish horizontal and
 * vertical arrows this way; most complexes use a single tag).
 *
 * Homogeneity convention: a generator g and monomial m sit in grading
 * gr(g) + |m| * var_weight, and an entry from src to dst with tag tau must
 * satisfy gr(dst) + |m| * var_weight == gr(src) + diff_degrees[tau] for each
 * of its monomials.  With var_weight {2} and diff degree {0} this is the
 * usual internally graded free resolution picture.
 *
 * Besides construction and tensor products this file provides:
 *  - koszul:          tensor of two-term multiplication complexes;
 *  - unit_cancel:     Gaussian elimination of unit arrows with the standard
 *                     zig-zag correction, preserving homology;
 *  - graded_homology: dimension of homology per (level, grading) point.
 *    Every such point pins the monomial length of each contributing
 *    generator, so each computation is exact; the cutoff only limits the
 *    report window.
 */

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "homfly/f2linalg.hpp"
#include "homfly/ring.hpp"
#include "homfly/z2poly.hpp"

namespace homfly {

struct ComplexSignature {
    int n_gr = 1;
    std::vector<int> var_weight = {2};
    std::vector<std::vector<int>> diff_degrees = {{0}};  // indexed by entry tag

    friend bool operator==(const ComplexSignature& a,
                           const ComplexSignature& b) {
        return a.n_gr == b.n_gr && a.var_weight == b.var_weight &&
               a.diff_degrees == b.diff_degrees;
    }
};

struct CpxGen {
    std::string name;
    std::vector<int> gr;
};

struct CpxEntry {
    int level = 0;  // level of src; dst lives at level + 1
    int src = 0;
    int dst = 0;
    Z2Poly poly;
    int tag = 0;
};

/// Dimensions of homology per grading point.  Key layout is documented by
/// each producing operation; values are always positive (absent means zero
/// within the cutoff window, unknown beyond it).
struct GradedDims {
    std::map<std::vector<int>, long long> dims;
    int cutoff = 0;

    long long at(const std::vector<int>& key) const {
        auto it = dims.find(key);
        return it == dims.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [k, v] : dims) t += v;
        return t;
    }
    friend bool operator==(const GradedDims& a, const GradedDims& b) {
        return a.dims == b.dims;
    }
};

class FreeComplex {
public:
    RingZ2 ring;
    ComplexSignature sig;
    std::vector<std::vector<CpxGen>> levels;
    std::vector<CpxEntry> entries;
    // Reported homological degree of stored level t is
    // base_level + level_step * t (chain complexes use step -1).
    int base_level = 0;
    int level_step = +1;

    FreeComplex() = default;
    FreeComplex(RingZ2 r, ComplexSignature s)
        : ring(std::move(r)), sig(std::move(s)) {}

    int n_levels() const { return static_cast<int>(levels.size()); }

    /// Single free generator at level 0.
    static FreeComplex free_module(RingZ2 r, ComplexSignature s,
                                   std::vector<int> gr,
                                   std::string name = "e") {
        FreeComplex C(std::move(r), std::move(s));
        C.levels.push_back({CpxGen{std::move(name), std::move(gr)}});
        return C;
    }

    /// Two-term complex src -> dst given by one multiplication map.
    static FreeComplex two_term(RingZ2 r, ComplexSignature s,
                                const Z2Poly& map, std::vector<int> src_gr,
                                std::vector<int> dst_gr, int tag = 0,
                                const std::string& stem = "e") {
        FreeComplex C(std::move(r), std::move(s));
        C.levels.push_back({CpxGen{stem + "1", std::move(src_gr)}});
        C.levels.push_back({CpxGen{stem + "0", std::move(dst_gr)}});
        C.entries.push_back({0, 0, 0, C.ring.reduce(map), tag});
        C.normalize();
        return C;
    }

    void add_level(std::vector<CpxGen> gens) {
        levels.push_back(std::move(gens));
    }
    void add_entry(int level, int src, int dst, const Z2Poly& p, int tag = 0) {
        entries.push_back({level, src, dst, ring.reduce(p), tag});
    }

    /// Merge duplicate entries (XOR) and drop zero polynomials.
    void normalize() {
        std::map<std::tuple<int, int, int, int>, Z2Poly> acc;
        for (const auto& e : entries) {
            acc[{e.level, e.src, e.dst, e.tag}] += e.poly;
        }
        entries.clear();
        for (auto& [k, p] : acc) {
            Z2Poly r = ring.reduce(p);
            if (r.is_zero()) continue;
            entries.push_back(
                {std::get<0>(k), std::get<1>(k), std::get<2>(k), r,
                 std::get<3>(k)});
        }
    }

    /// Check entry ranges, homogeneity, and d^2 = 0 (all symbolically).
    void validate() const {
        for (const auto& e : entries) {
            if (e.level < 0 || e.level + 1 >= n_levels() ||
                e.src >= static_cast<int>(levels[static_cast<size_t>(e.level)].size()) ||
                e.dst >= static_cast<int>(levels[static_cast<size_t>(e.level + 1)].size()) ||
                e.tag >= static_cast<int>(sig.diff_degrees.size())) {
                throw std::invalid_argument("complex entry out of range");
            }
            const auto& src = levels[static_cast<size_t>(e.level)][static_cast<size_t>(e.src)];
            const auto& dst = levels[static_cast<size_t>(e.level + 1)][static_cast<size_t>(e.dst)];
            const auto& dd = sig.diff_degrees[static_cast<size_t>(e.tag)];
            for (Mono m : e.poly.monos()) {
                for (int c = 0; c < sig.n_gr; ++c) {
                    size_t cc = static_cast<size_t>(c);
                    if (dst.gr[cc] + mono_total(m) * sig.var_weight[cc] !=
                        src.gr[cc] + dd[cc]) {
                        throw std::invalid_argument(
                            "inhomogeneous entry " + src.name + " -> " +
                            dst.name);
                    }
                }
            }
        }
        // d o d = 0 in the quotient ring.
        std::map<std::tuple<int, int, int>, Z2Poly> sq;
        for (const auto& e1 : entries) {
            for (const auto& e2 : entries) {
                if (e2.level == e1.level + 1 && e2.src == e1.dst) {
                    sq[{e1.level, e1.src, e2.dst}] += e1.poly * e2.poly;
                }
            }
        }
        for (auto& [k, p] : sq) {
            if (!ring.is_reduced_zero(p)) {
                throw std::invalid_argument(
                    "d^2 != 0 at level " + std::to_string(std::get<0>(k)));
            }
        }
    }

    friend FreeComplex tensor(const FreeComplex& A, const FreeComplex& B) {
        if (!(A.sig == B.sig) || A.ring.n_vars() != B.ring.n_vars()) {
            throw std::invalid_argument("tensor: signature or ring mismatch");
        }
        FreeComplex C(A.ring, A.sig);
        int la = A.n_levels(), lb = B.n_levels();
        // Index maps: (level_a, i, level_b, j) -> index at level_a + level_b.
        std::map<std::tuple<int, int, int, int>, int> idx;
        C.levels.assign(static_cast<size_t>(la + lb - 1), {});
        for (int ta = 0; ta < la; ++ta) {
            for (size_t i = 0; i < A.levels[static_cast<size_t>(ta)].size(); ++i) {
                for (int tb = 0; tb < lb; ++tb) {
                    for (size_t j = 0; j < B.levels[static_cast<size_t>(tb)].size(); ++j) {
                        const auto& x = A.levels[static_cast<size_t>(ta)][i];
                        const auto& y = B.levels[static_cast<size_t>(tb)][j];
                        CpxGen g;
                        g.name = x.name + "|" + y.name;
                        g.gr.resize(static_cast<size_t>(A.sig.n_gr));
                        for (int c = 0; c < A.sig.n_gr; ++c) {
                            g.gr[static_cast<size_t>(c)] =
                                x.gr[static_cast<size_t>(c)] + y.gr[static_cast<size_t>(c)];
                        }
                        auto& lvl = C.levels[static_cast<size_t>(ta + tb)];
                        idx[{ta, static_cast<int>(i), tb, static_cast<int>(j)}] =
                            static_cast<int>(lvl.size());
                        lvl.push_back(std::move(g));
                    }
                }
            }
        }
        for (const auto& e : A.entries) {
            for (int tb = 0; tb < lb; ++tb) {
                for (size_t j = 0; j < B.levels[static_cast<size_t>(tb)].size(); ++j) {
                    C.entries.push_back(
                        {e.level + tb, idx.at({e.level, e.src, tb, static_cast<int>(j)}),
                         idx.at({e.level + 1, e.dst, tb, static_cast<int>(j)}), e.poly,
                         e.tag});
                }
            }
        }
        for (const auto& e : B.entries) {
            for (int ta = 0; ta < la; ++ta) {
                for (size_t i = 0; i < A.levels[static_cast<size_t>(ta)].size(); ++i) {
                    C.entries.push_back(
                        {ta + e.level, idx.at({ta, static_cast<int>(i), e.level, e.src}),
                         idx.at({ta, static_cast<int>(i), e.level + 1, e.dst}), e.poly,
                         e.tag});
                }
            }
        }
        C.base_level = A.base_level + B.base_level;
        C.level_step = A.level_step;
        C.normalize();
        return C;
    }
};

FreeComplex tensor(const FreeComplex& A, const FreeComplex& B);

/// Koszul complex on homogeneous elements: tensor of two-term complexes.
inline FreeComplex koszul(const RingZ2& ring, const std::vector<Z2Poly>& elems,
                          ComplexSignature sig = {}) {
    FreeComplex C = FreeComplex::free_module(
        ring, sig, std::vector<int>(static_cast<size_t>(sig.n_gr), 0), "k");
    int n = 0;
    for (const Z2Poly& u : elems) {
        Z2Poly r = ring.reduce(u);
        if (!r.homogeneous()) {
            throw std::invalid_argument("koszul: inhomogeneous element");
        }
        int du = r.is_zero() ? 0 : r.internal_degree() / 2;
        // Source grading chosen so the map is degree diff_degrees[0].
        std::vector<int> src(static_cast<size_t>(sig.n_gr)),
            dst(static_cast<size_t>(sig.n_gr), 0);
        for (int c = 0; c < sig.n_gr; ++c) {
            src[static_cast<size_t>(c)] = du * sig.var_weight[static_cast<size_t>(c)] -
                                          sig.diff_degrees[0][static_cast<size_t>(c)];
        }
        C = tensor(C, FreeComplex::two_term(ring, sig, r, src, dst, 0,
                                            "u" + std::to_string(++n)));
    }
    // Chain convention: the quotient module sits in homological degree 0.
    C.base_level = static_cast<int>(elems.size());
    C.level_step = -1;
    return C;
}

namespace detail {

/// Basis of (generator, monomial) pairs at one (level, grading) point.
struct GradedBasis {
    std::vector<std::pair<int, Mono>> elems;  // (generator index, monomial)
    std::map<std::pair<int, Mono>, int> index;

    int dim() const { return static_cast<int>(elems.size()); }
};

inline int monomial_length_for(const CpxGen& g, const std::vector<int>& target,
                               const ComplexSignature& sig) {
    int k = -1;
    for (int c = 0; c < sig.n_gr; ++c) {
        size_t cc = static_cast<size_t>(c);
        int diff = target[cc] - g.gr[cc];
        if (sig.var_weight[cc] == 0) {
            if (diff != 0) return -1;
            continue;
        }
        if (diff % sig.var_weight[cc] != 0) return -1;
        int kk = diff / sig.var_weight[cc];
        if (kk < 0) return -1;
        if (k >= 0 && kk != k) return -1;
        k = kk;
    }
    return k;  // -1 when no var_weight component pins it or inconsistent
}

inline GradedBasis graded_basis(const FreeComplex& C, int level,
                                const std::vector<int>& grading) {
    GradedBasis B;
    if (level < 0 || level >= C.n_levels()) return B;
    const auto& gens = C.levels[static_cast<size_t>(level)];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int k = monomial_length_for(gens[gi], grading, C.sig);
        if (k < 0) continue;
        for (Mono m : C.ring.degree_basis(k)) {
            B.index[{static_cast<int>(gi), m}] = B.dim();
            B.elems.push_back({static_cast<int>(gi), m});
        }
    }
    return B;
}

/// Differential matrix from the basis at (level, grading) to the basis at
/// (level+1, grading + dd), restricted to entries with the given tag (-1 for
/// all tags).
inline F2Matrix graded_matrix(const FreeComplex& C, int level,
                              const GradedBasis& src, const GradedBasis& dst,
                              int tag) {
    F2Matrix M(dst.dim(), src.dim());
    for (const auto& e : C.entries) {
        if (e.level != level) continue;
        if (tag >= 0 && e.tag != tag) continue;
        for (int ci = 0; ci < src.dim(); ++ci) {
            const auto& [gi, m] = src.elems[static_cast<size_t>(ci)];
            if (gi != e.src) continue;
            Z2Poly img = C.ring.reduce(e.poly * Z2Poly(m));
            for (Mono mm : img.monos()) {
                auto it = dst.index.find({e.dst, mm});
                if (it == dst.index.end()) {
                    throw std::logic_error("graded_matrix: image misses basis");
                }
                M.flip(it->second, ci);
            }
        }
    }
    return M;
}

inline std::vector<int> add_vec(const std::vector<int>& a,
                                const std::vector<int>& b) {
    std::vector<int> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline std::vector<int> sub_vec(const std::vector<int>& a,
                                const std::vector<int>& b) {
    std::vector<int> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

}  // namespace detail

/**
 * Homology dimensions of a single-degree complex per (level, grading) point,
 * reported as keys {level, grading...}.  All tags must share one declared
 * degree.  The window keeps points whose first weighted grading component
 * lies within [-cutoff, cutoff].
 */
inline GradedDims graded_homology(const FreeComplex& C, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("graded_homology: cutoff < 0");
    for (size_t t = 1; t < C.sig.diff_degrees.size(); ++t) {
        if (C.sig.diff_degrees[t] != C.sig.diff_degrees[0]) {
            throw std::invalid_argument(
                "graded_homology: mixed differential degrees");
        }
    }
    const std::vector<int>& dd = C.sig.diff_degrees[0];
    int wc = 0;  // window component: first with nonzero variable weight
    while (wc < C.sig.n_gr && C.sig.var_weight[static_cast<size_t>(wc)] == 0) ++wc;
    if (wc == C.sig.n_gr) wc = 0;

    GradedDims out;
    out.cutoff = cutoff;
    std::set<std::pair<int, std::vector<int>>> points;
    for (int t = 0; t < C.n_levels(); ++t) {
        for (const auto& g : C.levels[static_cast<size_t>(t)]) {
            int w = C.sig.var_weight[static_cast<size_t>(wc)];
            std::vector<int> gv = g.gr;
            for (int k = 0;; ++k) {
                for (int c = 0; c < C.sig.n_gr; ++c) {
                    gv[static_cast<size_t>(c)] =
                        g.gr[static_cast<size_t>(c)] +
                        k * C.sig.var_weight[static_cast<size_t>(c)];
                }
                if (std::abs(gv[static_cast<size_t>(wc)]) > cutoff &&
                    (w > 0 ? gv[static_cast<size_t>(wc)] > cutoff
                           : gv[static_cast<size_t>(wc)] < -cutoff)) {
                    break;
                }
                if (std::abs(gv[static_cast<size_t>(wc)]) <= cutoff) {
                    points.insert({t, gv});
                }
                if (w == 0) break;
            }
        }
    }
    for (const auto& [t, gv] : points) {
        detail::GradedBasis here = detail::graded_basis(C, t, gv);
        if (here.dim() == 0) continue;
        detail::GradedBasis next =
            detail::graded_basis(C, t + 1, detail::add_vec(gv, dd));
        detail::GradedBasis prev =
            detail::graded_basis(C, t - 1, detail::sub_vec(gv, dd));
        F2Matrix dout = detail::graded_matrix(C, t, here, next, -1);
        long long h = here.dim() - dout.rank();
        if (prev.dim() > 0) {
            F2Matrix din = detail::graded_matrix(C, t - 1, prev, here, -1);
            h -= din.rank();
        }
        if (h > 0) {
            std::vector<int> key;
            key.push_back(C.base_level + C.level_step * t);
            key.insert(key.end(), gv.begin(), gv.end());
            out.dims[key] = h;
        }
    }
    return out;
}

/**
 * Cancel unit differential entries by Gaussian elimination with the zig-zag
 * correction, preserving homology.  With `pairs` given, exactly those
 * source/target generator names are cancelled in order; otherwise the first
 * unit entry (scanning by level, source, target) is cancelled repeatedly
 * until none remain.
 */
inline FreeComplex unit_cancel(
    FreeComplex C,
    const std::vector<std::pair<std::string, std::string>>& pairs = {}) {
    auto find_unit = [&C](const std::string& sname,
                          const std::string& tname) -> int {
        int best = -1;
        for (size_t i = 0; i < C.entries.size(); ++i) {
            const auto& e = C.entries[i];
            if (!e.poly.is_one()) continue;
            const auto& src = C.levels[static_cast<size_t>(e.level)][static_cast<size_t>(e.src)];
            const auto& dst = C.levels[static_cast<size_t>(e.level + 1)][static_cast<size_t>(e.dst)];
            if (!sname.empty() && (src.name != sname || dst.name != tname)) {
                continue;
            }
            if (best < 0) best = static_cast<int>(i);
            else {
                const auto& b = C.entries[static_cast<size_t>(best)];
                if (std::tie(e.level, e.src, e.dst) < std::tie(b.level, b.src, b.dst)) {
                    best = static_cast<int>(i);
                }
            }
        }
        return best;
    };

    auto cancel_at = [&C](int ei) {
        CpxEntry unit = C.entries[static_cast<size_t>(ei)];
        // Corrections: peers a -> t combine with outputs s -> b.
        std::vector<CpxEntry> add;
        for (const auto& in : C.entries) {
            if (in.level != unit.level || in.dst != unit.dst || in.src == unit.src) continue;
            for (const auto& outp : C.entries) {
                if (outp.level != unit.level || outp.src != unit.src || outp.dst == unit.dst) continue;
                add.push_back({unit.level, in.src, outp.dst, in.poly * outp.poly, 0});
            }
        }
        for (auto& e : add) C.entries.push_back(std::move(e));
        // Remove the two generators and every entry touching them.
        int lvl = unit.level;
        auto touches = [&](const CpxEntry& e) {
            return (e.level == lvl && e.src == unit.src) ||
                   (e.level == lvl && e.dst == unit.dst) ||
                   (e.level + 1 == lvl && e.dst == unit.src) ||
                   (e.level == lvl + 1 && e.src == unit.dst);
        };
        std::vector<CpxEntry> kept;
        for (const auto& e : C.entries) {
            if (!touches(e)) kept.push_back(e);
        }
        // Reindex generators after deletion.
        auto drop = [&C](int level, int idx) {
            auto& gens = C.levels[static_cast<size_t>(level)];
            gens.erase(gens.begin() + idx);
        };
        for (auto& e : kept) {
            if (e.level == lvl && e.src > unit.src) --e.src;
            if (e.level + 1 == lvl && e.dst > unit.src) --e.dst;
            if (e.level == lvl + 1 && e.src > unit.dst) --e.src;
            if (e.level == lvl && e.dst > unit.dst) --e.dst;
        }
        drop(lvl, unit.src);
        drop(lvl + 1, unit.dst);
        C.entries = std::move(kept);
        C.normalize();
    };

    // Cancelling makes tags meaningless; collapse to a single degree and
    // merge any parallel entries so unit detection sees the total map.
    for (size_t t = 1; t < C.sig.diff_degrees.size(); ++t) {
        if (C.sig.diff_degrees[t] != C.sig.diff_degrees[0]) {
            throw std::invalid_argument(
                "unit_cancel: mixed differential degrees");
        }
    }
    for (auto& e : C.entries) e.tag = 0;
    C.normalize();

    if (!pairs.empty()) {
        for (const auto& [s, t] : pairs) {
            int ei = find_unit(s, t);
            if (ei < 0) {
                throw std::invalid_argument("unit_cancel: no unit entry " + s +
                                            " -> " + t);
            }
            cancel_at(ei);
        }
    } else {
        for (int ei = find_unit("", ""); ei >= 0; ei = find_unit("", "")) {
            cancel_at(ei);
        }
    }
    // Drop empty trailing/leading levels only if the whole complex died.
    bool any = false;
    for (const auto& l : C.levels) {
        if (!l.empty()) any = true;
    }
    if (!any) C.levels.clear();
    return C;
}

}  // namespace homfly
