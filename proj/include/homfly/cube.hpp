#pragma once
/**
 * Cube complexes of braid-closure diagrams over Z2 polynomial quotient
 * rings, and the homology flavors built from them.
 *
 * Grading conventions (component order {q, h, v}):
 *   - every edge variable has weight {2, 0, 0};
 *   - horizontal arrows (tag 0) are homogeneous of degree {2, 2, 0},
 *     vertical arrows (tag 1) of degree {0, 0, 2};
 *   - within every tensor factor the stored level equals (h + v)/2 plus a
 *     constant, so a (q, h, v) point meets exactly one homological level.
 *
 * Each crossing contributes a four-generator square over the ring
 * R = Z2[X_edges] / (X_k + X_l + X_i + X_j per crossing), where k, l are
 * the two incoming edges (left, right) and i, j the outgoing ones:
 *
 *   positive crossing                      negative crossing
 *     {0,-2,0} --Xk+Xi--> {0,0,0}            {0,-2,2} --quad--> {-2,0,2}
 *        ^                   ^                  ^                  ^
 *      Xj+Xk                 1                  1                Xj+Xk
 *        |                   |                  |                  |
 *    {2,-2,-2} --quad--> {0,0,-2}            {0,-2,0} --Xk+Xi--> {0,0,0}
 *
 * with quad = X_i X_j + X_k X_l; horizontal arrows carry tag 0 and vertical
 * arrows tag 1.  A singular crossing contributes the two-term complex
 * R{2,-2,0} --quad--> R{0,0,0} (tag 0) plus the same linear relation; a
 * smoothed crossing contributes no factor but merges its edges pairwise
 * (X_k = X_i, X_l = X_j).  Reducing at an edge e tensors on the two-term
 * complex R{2,0,-2} --X_e--> R{0,0,0} (tag 1).
 */

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homfly/complex.hpp"
#include "homfly/cycles.hpp"
#include "homfly/diagram.hpp"

namespace homfly {

/// Resolution state of one crossing inside a cube complex.
enum class VertexState { positive, negative, singular, smoothed };

inline const char* vertex_state_name(VertexState s) {
    switch (s) {
        case VertexState::positive: return "positive";
        case VertexState::negative: return "negative";
        case VertexState::singular: return "singular";
        case VertexState::smoothed: return "smoothed";
    }
    return "?";
}

/// Triple grading {q, h, v} with horizontal/vertical differential tags.
inline ComplexSignature cube_signature() {
    return ComplexSignature{3, {2, 0, 0}, {{2, 2, 0}, {0, 0, 2}}};
}

struct CubeOptions {
    /// Per-crossing states; empty selects positive/negative from the signs.
    std::vector<VertexState> states;
    /// Edges whose reducing factors are tensored onto the complex
    /// (repetitions allowed; each occurrence adds one factor).
    std::vector<int> reduced_at;
    /// Split the marked edge into two variables: occurrences where the edge
    /// enters a crossing keep its variable, the occurrence where it leaves a
    /// crossing gets the extra final variable.
    bool cut_marked = false;
};

/// True when the diagram's edges form one block connected through crossings
/// (crossing-free loops count as their own blocks).
inline bool diagram_connected(const Diagram& D) {
    if (D.n_edges <= 1) return true;
    std::vector<int> parent(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) parent[static_cast<size_t>(e)] = e;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        }
        return x;
    };
    for (const auto& c : D.crossings) {
        for (int e : {c.l, c.i, c.j}) {
            parent[static_cast<size_t>(find(e))] = find(c.k);
        }
    }
    int root = find(0);
    for (int e = 1; e < D.n_edges; ++e) {
        if (find(e) != root) return false;
    }
    return true;
}

namespace detail {

inline std::vector<VertexState> default_states(const Diagram& D) {
    std::vector<VertexState> s;
    s.reserve(D.crossings.size());
    for (const auto& c : D.crossings) {
        s.push_back(c.sign > 0 ? VertexState::positive : VertexState::negative);
    }
    return s;
}

/// Per-edge link-component ids (union-find over the strand passages
/// k -> j and l -> i), numbered by smallest member edge.
inline std::vector<int> edge_component_ids(const Diagram& D) {
    std::vector<int> parent(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) parent[static_cast<size_t>(e)] = e;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        }
        return x;
    };
    for (const auto& c : D.crossings) {
        parent[static_cast<size_t>(find(c.j))] = find(c.k);
        parent[static_cast<size_t>(find(c.i))] = find(c.l);
    }
    // Root of each class becomes its smallest edge; then number classes in
    // order of that smallest edge.
    std::vector<int> least(static_cast<size_t>(D.n_edges), -1);
    for (int e = 0; e < D.n_edges; ++e) {
        int r = find(e);
        if (least[static_cast<size_t>(r)] < 0) least[static_cast<size_t>(r)] = e;
    }
    std::map<int, int> number;
    std::vector<int> ids(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) {
        int m = least[static_cast<size_t>(find(e))];
        auto [it, fresh] = number.insert({m, static_cast<int>(number.size())});
        ids[static_cast<size_t>(e)] = it->second;
        (void)fresh;
    }
    return ids;
}

/// Four-generator crossing square over the given ring (see file header).
inline FreeComplex crossing_square(const RingZ2& ring, bool positive, int vk,
                                   int vl, int vi, int vj,
                                   const std::string& stem) {
    Z2Poly diag = Z2Poly::var(vj) + Z2Poly::var(vk);
    Z2Poly pass = Z2Poly::var(vk) + Z2Poly::var(vi);
    Z2Poly quad = Z2Poly::var(vi) * Z2Poly::var(vj) +
                  Z2Poly::var(vk) * Z2Poly::var(vl);
    FreeComplex C(ring, cube_signature());
    if (positive) {
        C.add_level({CpxGen{stem + ".sw", {2, -2, -2}}});
        C.add_level({CpxGen{stem + ".nw", {0, -2, 0}},
                     CpxGen{stem + ".se", {0, 0, -2}}});
        C.add_level({CpxGen{stem + ".ne", {0, 0, 0}}});
        C.add_entry(0, 0, 0, diag, 1);
        C.add_entry(0, 0, 1, quad, 0);
        C.add_entry(1, 0, 0, pass, 0);
        C.add_entry(1, 1, 0, Z2Poly::one(), 1);
    } else {
        C.add_level({CpxGen{stem + ".sw", {0, -2, 0}}});
        C.add_level({CpxGen{stem + ".nw", {0, -2, 2}},
                     CpxGen{stem + ".se", {0, 0, 0}}});
        C.add_level({CpxGen{stem + ".ne", {-2, 0, 2}}});
        C.add_entry(0, 0, 0, Z2Poly::one(), 1);
        C.add_entry(0, 0, 1, pass, 0);
        C.add_entry(1, 0, 0, quad, 0);
        C.add_entry(1, 1, 0, diag, 1);
    }
    return C;
}

/**
 * Shared cube builder.  `removed` is a bitmask of deleted edges: their
 * variables are quotiented to zero and each crossing that loses a passage
 * degenerates to a merge of its surviving pair (only meaningful for
 * singular/smoothed states; the per-cycle homology path uses it).
 */
inline FreeComplex build_cube(const Diagram& D,
                              const std::vector<VertexState>& states,
                              std::uint64_t removed,
                              const std::vector<int>& reduced_at, bool cut) {
    if (states.size() != D.crossings.size()) {
        throw std::invalid_argument("cube: one state per crossing required");
    }
    if (cut && D.n_edges > 0 && D.free_loop[static_cast<size_t>(D.marked_edge)]) {
        throw std::invalid_argument(
            "cube: cannot cut the marked edge of a crossing-free loop");
    }
    if (D.n_edges > 0 && ((removed >> D.marked_edge) & 1)) {
        throw std::invalid_argument("cube: cannot delete the marked edge");
    }
    for (int e : reduced_at) {
        if (e < 0 || e >= D.n_edges) {
            throw std::invalid_argument("cube: reducing edge out of range");
        }
        if (cut && e == D.marked_edge) {
            throw std::invalid_argument(
                "cube: marked edge reduction conflicts with the marked-edge cut");
        }
        if ((removed >> e) & 1) {
            throw std::invalid_argument("cube: cannot reduce at a deleted edge");
        }
    }
    int n_vars = D.n_edges + (cut ? 1 : 0);
    if (n_vars > kMaxVars) {
        throw std::invalid_argument(
            "cube: diagram needs " + std::to_string(n_vars) +
            " variables; the engine supports at most " +
            std::to_string(kMaxVars));
    }
    const int cut_var = D.n_edges;
    auto in_var = [&](int e) { return e; };
    auto out_var = [&](int e) {
        return (cut && e == D.marked_edge) ? cut_var : e;
    };
    auto gone = [&](int e) { return ((removed >> e) & 1) != 0; };

    std::vector<Z2Poly> rels;
    for (int e = 0; e < D.n_edges; ++e) {
        if (gone(e)) rels.push_back(Z2Poly::var(e));
    }
    struct Plan {
        VertexState state;
        int vk, vl, vi, vj;
        std::string stem;
    };
    std::vector<Plan> plans;
    for (size_t ci = 0; ci < D.crossings.size(); ++ci) {
        const Crossing& c = D.crossings[ci];
        VertexState st = states[ci];
        int vk = in_var(c.k), vl = in_var(c.l);
        int vi = out_var(c.i), vj = out_var(c.j);
        bool rk = gone(c.k), rl = gone(c.l), ri = gone(c.i), rj = gone(c.j);
        int ins = (rk ? 1 : 0) + (rl ? 1 : 0);
        int outs = (ri ? 1 : 0) + (rj ? 1 : 0);
        if (ins != outs) {
            throw std::invalid_argument(
                "cube: deleted edges break the flow at a crossing");
        }
        int total = ins + outs;
        std::string stem = "c" + std::to_string(ci);
        switch (st) {
            case VertexState::positive:
            case VertexState::negative:
                if (total != 0) {
                    throw std::invalid_argument(
                        "cube: crossings losing edges must be singular or "
                        "smoothed");
                }
                rels.push_back(Z2Poly::var(vk) + Z2Poly::var(vl) +
                               Z2Poly::var(vi) + Z2Poly::var(vj));
                plans.push_back({st, vk, vl, vi, vj, stem});
                break;
            case VertexState::singular:
                if (total == 0) {
                    rels.push_back(Z2Poly::var(vk) + Z2Poly::var(vl) +
                                   Z2Poly::var(vi) + Z2Poly::var(vj));
                    plans.push_back({st, vk, vl, vi, vj, stem});
                } else if (total == 4) {
                    throw std::invalid_argument(
                        "cube: a singular crossing cannot lose all four edges");
                } else {
                    // One passage deleted: the surviving in/out pair merges.
                    rels.push_back(Z2Poly::var(rk ? vl : vk) +
                                   Z2Poly::var(ri ? vj : vi));
                }
                break;
            case VertexState::smoothed:
                if (total == 0) {
                    rels.push_back(Z2Poly::var(vk) + Z2Poly::var(vi));
                    rels.push_back(Z2Poly::var(vl) + Z2Poly::var(vj));
                } else if (total == 4) {
                    // Both arcs deleted: nothing survives here.
                } else {
                    if (rk != ri) {
                        throw std::invalid_argument(
                            "cube: deleted edges must follow the smoothed arcs");
                    }
                    if (rk) {
                        rels.push_back(Z2Poly::var(vl) + Z2Poly::var(vj));
                    } else {
                        rels.push_back(Z2Poly::var(vk) + Z2Poly::var(vi));
                    }
                }
                break;
        }
    }

    RingZ2 ring(n_vars, rels);
    ComplexSignature sig = cube_signature();
    std::vector<FreeComplex> factors;
    for (const Plan& p : plans) {
        if (p.state == VertexState::singular) {
            Z2Poly quad = Z2Poly::var(p.vi) * Z2Poly::var(p.vj) +
                          Z2Poly::var(p.vk) * Z2Poly::var(p.vl);
            factors.push_back(FreeComplex::two_term(ring, sig, quad,
                                                    {2, -2, 0}, {0, 0, 0}, 0,
                                                    p.stem + ".s"));
        } else {
            factors.push_back(crossing_square(
                ring, p.state == VertexState::positive, p.vk, p.vl, p.vi,
                p.vj, p.stem));
        }
    }
    for (size_t ri = 0; ri < reduced_at.size(); ++ri) {
        factors.push_back(FreeComplex::two_term(
            ring, sig, Z2Poly::var(reduced_at[ri]), {2, 0, -2}, {0, 0, 0}, 1,
            "r" + std::to_string(ri) + "_"));
    }

    FreeComplex C;
    if (factors.empty()) {
        C = FreeComplex::free_module(ring, sig, {0, 0, 0}, "1");
    } else {
        C = factors[0];
        for (size_t i = 1; i < factors.size(); ++i) C = tensor(C, factors[i]);
    }
    // The symbolic d^2 check is quadratic in the entry count; skip it for
    // builds past the scale this library targets (per-point homology still
    // verifies exactness where it computes).
    if (C.entries.size() <= 4000) C.validate();
    return C;
}

/**
 * Two-pass homology of a cube complex: homology of the horizontal arrows
 * (tag 0) first, then of the map the vertical arrows (tag 1) induce on it.
 * Points are reported at grading + shift; the window keeps |q + shift_q|
 * <= cutoff.  `saw_generator` reports whether any generator met the window.
 */
inline GradedDims two_pass_homology(const FreeComplex& C, int cutoff,
                                    const std::vector<int>& shift,
                                    bool* saw_generator = nullptr) {
    if (cutoff < 0) throw std::invalid_argument("two_pass_homology: cutoff < 0");
    if (C.sig.diff_degrees.size() < 2) {
        throw std::invalid_argument(
            "two_pass_homology: need horizontal and vertical arrow degrees");
    }
    const std::vector<int>& dd0 = C.sig.diff_degrees[0];
    const std::vector<int>& dd1 = C.sig.diff_degrees[1];
    int wc = 0;
    while (wc < C.sig.n_gr && C.sig.var_weight[static_cast<size_t>(wc)] == 0) {
        ++wc;
    }
    if (wc == C.sig.n_gr || C.sig.var_weight[static_cast<size_t>(wc)] <= 0) {
        throw std::invalid_argument(
            "two_pass_homology: need a positive variable weight component");
    }

    std::set<std::vector<int>> points;
    for (int t = 0; t < C.n_levels(); ++t) {
        for (const auto& g : C.levels[static_cast<size_t>(t)]) {
            for (int k = 0;; ++k) {
                std::vector<int> P = g.gr;
                for (int c = 0; c < C.sig.n_gr; ++c) {
                    P[static_cast<size_t>(c)] +=
                        k * C.sig.var_weight[static_cast<size_t>(c)];
                }
                int q = P[static_cast<size_t>(wc)] + shift[static_cast<size_t>(wc)];
                if (q > cutoff) break;
                if (q >= -cutoff) points.insert(std::move(P));
            }
        }
    }
    if (saw_generator) *saw_generator = !points.empty();

    struct PointData {
        int level = -1;
        GradedBasis basis;
        F2RowSpace space{0, 0};
        std::vector<F2Vec> reps;  // kernel representatives spanning H(tag 0)
        std::vector<int> slots;   // tracked slot of each representative
    };
    std::map<std::vector<int>, PointData> data;

    // Pass 1: homology of the tag-0 arrows at every window point.
    for (const auto& P : points) {
        PointData d;
        for (int t = 0; t < C.n_levels(); ++t) {
            GradedBasis B = graded_basis(C, t, P);
            if (B.dim() == 0) continue;
            if (d.level >= 0) {
                throw std::logic_error(
                    "two_pass_homology: grading does not separate levels");
            }
            d.level = t;
            d.basis = std::move(B);
        }
        if (d.level < 0) {
            throw std::logic_error("two_pass_homology: empty window point");
        }
        GradedBasis out_basis = graded_basis(C, d.level + 1, add_vec(P, dd0));
        F2Matrix m_out = graded_matrix(C, d.level, d.basis, out_basis, 0);
        std::vector<F2Vec> kernel = m_out.kernel_basis();
        d.space = F2RowSpace(d.basis.dim(), static_cast<int>(kernel.size()));
        GradedBasis in_basis = graded_basis(C, d.level - 1, sub_vec(P, dd0));
        if (in_basis.dim() > 0) {
            F2Matrix m_in = graded_matrix(C, d.level - 1, in_basis, d.basis, 0);
            for (int ci = 0; ci < in_basis.dim(); ++ci) {
                F2Vec col(d.basis.dim());
                for (int r = 0; r < d.basis.dim(); ++r) {
                    if (m_in.get(r, ci)) col.set(r);
                }
                d.space.add(col);
            }
        }
        for (size_t ki = 0; ki < kernel.size(); ++ki) {
            if (d.space.add_tracked(kernel[ki], static_cast<int>(ki))) {
                d.reps.push_back(kernel[ki]);
                d.slots.push_back(static_cast<int>(ki));
            }
        }
        data.emplace(P, std::move(d));
    }

    // Pass 2: rank of the induced tag-1 map out of every point.
    std::map<std::vector<int>, int> out_rank;
    for (const auto& [P, d] : data) {
        if (d.reps.empty()) {
            out_rank[P] = 0;
            continue;
        }
        std::vector<int> T = add_vec(P, dd1);
        auto it = data.find(T);
        if (it == data.end()) {
            // No basis at the target grading: the image must vanish (the
            // matrix constructor would reject anything else).
            GradedBasis none = graded_basis(C, d.level + 1, T);
            graded_matrix(C, d.level, d.basis, none, 1);
            out_rank[P] = 0;
            continue;
        }
        const PointData& td = it->second;
        F2Matrix mv = graded_matrix(C, d.level, d.basis, td.basis, 1);
        F2Matrix induced(static_cast<int>(td.reps.size()),
                         static_cast<int>(d.reps.size()));
        for (size_t c = 0; c < d.reps.size(); ++c) {
            F2Vec img = mv.apply(d.reps[c]);
            auto [residue, coords] = td.space.express(img);
            if (!residue.is_zero()) {
                throw std::logic_error(
                    "two_pass_homology: vertical image escapes the "
                    "horizontal kernel");
            }
            for (size_t r = 0; r < td.reps.size(); ++r) {
                if (coords.get(td.slots[r])) {
                    induced.set(static_cast<int>(r), static_cast<int>(c));
                }
            }
        }
        out_rank[P] = induced.rank();
    }

    GradedDims res;
    res.cutoff = cutoff;
    for (const auto& [P, d] : data) {
        long long h = static_cast<long long>(d.reps.size()) - out_rank[P];
        auto prev = out_rank.find(sub_vec(P, dd1));
        if (prev != out_rank.end()) h -= prev->second;
        if (h < 0) {
            throw std::logic_error("two_pass_homology: negative dimension");
        }
        if (h > 0) res.dims[add_vec(P, shift)] = h;
    }
    return res;
}

}  // namespace detail

inline FreeComplex homfly_cube(const Diagram& D, const CubeOptions& opt = {}) {
    std::vector<VertexState> states =
        opt.states.empty() && !D.crossings.empty() ? detail::default_states(D)
                                                   : opt.states;
    return detail::build_cube(D, states, 0, opt.reduced_at, opt.cut_marked);
}

inline FreeComplex homfly_cube(const Diagram& D,
                               const std::vector<int>& reduced_at) {
    CubeOptions opt;
    opt.reduced_at = reduced_at;
    return homfly_cube(D, opt);
}

/// Grading shift {-w + b - 1, w + b - 1, w - b + 1} applied by the middle
/// homology of a braid closure (w = writhe, b = strands).
inline std::vector<int> middle_shift(const Diagram& D) {
    int w = D.writhe();
    int b = D.strands;
    return {-w + b - 1, w + b - 1, w - b + 1};
}

/**
 * Edges receiving the k reducing factors: the marked edge first, then the
 * smallest edge of each further link component in order, cycling once every
 * component is covered.  Guarantees full component coverage whenever
 * k >= number of components.
 */
inline std::vector<int> reduction_edges(const Diagram& D, int k) {
    if (k < 0) throw std::invalid_argument("reduction_edges: negative count");
    if (k > 0 && D.n_edges == 0) {
        throw std::invalid_argument("reduction_edges: no edges to reduce at");
    }
    std::vector<int> ids = detail::edge_component_ids(D);
    int n_comp = 0;
    for (int id : ids) n_comp = std::max(n_comp, id + 1);
    std::vector<int> least(static_cast<size_t>(n_comp), -1);
    for (int e = D.n_edges - 1; e >= 0; --e) {
        least[static_cast<size_t>(ids[static_cast<size_t>(e)])] = e;
    }
    std::sort(least.begin(), least.end());
    std::vector<int> out;
    out.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        out.push_back(least[static_cast<size_t>(i) % least.size()]);
    }
    return out;
}

/**
 * Two-pass homology of the diagram's cube complex with k reducing factors
 * (placed by reduction_edges) and the braid-closure grading shift.  Keys
 * are {q, h, v}; the window keeps |q| <= cutoff.
 */
inline GradedDims middle_homfly_homology(const Diagram& D, int k_reductions,
                                         int cutoff) {
    CubeOptions opt;
    opt.reduced_at = reduction_edges(D, k_reductions);
    FreeComplex C = homfly_cube(D, opt);
    bool saw = false;
    GradedDims g = detail::two_pass_homology(C, cutoff, middle_shift(D), &saw);
    if (!saw) {
        std::cerr << "middle_homfly_homology: cutoff " << cutoff
                  << " is below every generator; empty result\n";
    }
    return g;
}

/**
 * Homology of the cube complex under the total differential (both tags at
 * once), reported in the bigrading {M, A} = {(h - v - 2q)/2, (h - q)/2}
 * shifted by the writhe in both components.  Keys are {M, A}; the window
 * keeps |M| <= cutoff.
 */
inline GradedDims sl_minus1_homology(const Diagram& D, int cutoff) {
    FreeComplex C = homfly_cube(D);
    int w = D.writhe();
    ComplexSignature sig{2, {-2, -1}, {{-1, 0}, {-1, 0}}};
    FreeComplex B(C.ring, sig);
    B.base_level = C.base_level;
    B.level_step = C.level_step;
    for (const auto& lvl : C.levels) {
        std::vector<CpxGen> gens;
        gens.reserve(lvl.size());
        for (const auto& g : lvl) {
            int q = g.gr[0], h = g.gr[1], v = g.gr[2];
            gens.push_back(CpxGen{g.name, {(h - v - 2 * q) / 2 + w,
                                           (h - q) / 2 + w}});
        }
        B.levels.push_back(std::move(gens));
    }
    B.entries = C.entries;
    B = unit_cancel(B);
    GradedDims per_level = graded_homology(B, cutoff);
    GradedDims out;
    out.cutoff = cutoff;
    for (const auto& [key, d] : per_level.dims) {
        out.dims[{key[1], key[2]}] += d;
    }
    return out;
}

/// One enumerated cycle of a resolved diagram with its homology value.
struct ResolutionEntry {
    MultiCycle cycle;
    GradedDims dims;
};

/**
 * For every cycle available in the resolved diagram (each crossing singular
 * or smoothed; cycles avoid the marked edge, pass any single way through a
 * singular crossing, and follow the arcs of a smoothed one), the two-pass
 * homology of the diagram with the cycle's edges deleted.  Unshifted keys
 * {q, h, v}; entries are ordered lexicographically by edge list, so the
 * empty cycle comes first.
 */
inline std::vector<ResolutionEntry> resolution_homology(
    const Diagram& D, const std::vector<VertexState>& resolution, int cutoff) {
    if (resolution.size() != D.crossings.size()) {
        throw std::invalid_argument(
            "resolution_homology: one state per crossing required");
    }
    for (VertexState st : resolution) {
        if (st != VertexState::singular && st != VertexState::smoothed) {
            throw std::invalid_argument(
                "resolution_homology: states must be singular or smoothed");
        }
    }
    std::vector<int> toggles;
    for (int e = 0; e < D.n_edges; ++e) {
        if (e != D.marked_edge) toggles.push_back(e);
    }
    if (toggles.size() > 20) {
        throw std::invalid_argument("resolution_homology: diagram too large");
    }
    std::vector<ResolutionEntry> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << toggles.size());
         ++sub) {
        std::vector<char> vmask(static_cast<size_t>(D.n_edges), 0);
        std::uint64_t bits = 0;
        for (size_t i = 0; i < toggles.size(); ++i) {
            if ((sub >> i) & 1) {
                vmask[static_cast<size_t>(toggles[i])] = 1;
                bits |= std::uint64_t{1} << toggles[i];
            }
        }
        bool ok = true;
        for (size_t ci = 0; ci < D.crossings.size() && ok; ++ci) {
            const Crossing& c = D.crossings[ci];
            bool mk = (bits >> c.k) & 1, ml = (bits >> c.l) & 1;
            bool mi = (bits >> c.i) & 1, mj = (bits >> c.j) & 1;
            int ins = (mk ? 1 : 0) + (ml ? 1 : 0);
            int outs = (mi ? 1 : 0) + (mj ? 1 : 0);
            if (ins != outs) {
                ok = false;
            } else if (resolution[ci] == VertexState::singular) {
                if (ins == 2) ok = false;  // cannot fill all four edges
            } else {
                if (ins == 1 && mk != mi) ok = false;  // must follow an arc
            }
        }
        if (!ok) continue;
        ResolutionEntry entry;
        entry.cycle = make_cycle(D, vmask);
        FreeComplex C = detail::build_cube(D, resolution, bits, {}, false);
        entry.dims = detail::two_pass_homology(C, cutoff, {0, 0, 0});
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(),
              [](const ResolutionEntry& a, const ResolutionEntry& b) {
                  return a.cycle.edge_list() < b.cycle.edge_list();
              });
    return out;
}

}  // namespace homfly
