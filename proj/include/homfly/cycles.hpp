#pragma once
/**
 * Multi-cycles (labelings) of a decorated diagram.
 *
 * A multi-cycle is an edge subset Z satisfying the flow condition: at every
 * crossing, equally many incoming and outgoing incident edges lie in Z.
 * Equivalently, Z is the label-1 set of a 2-labeling f with f(e0) = 2 (for
 * the marked flavor).  At each crossing Z meets the four slots in one of six
 * local patterns:
 *
 *   Z0: none          Z1: {l, j}   right turn (stays on the right column)
 *   Z2: {k, i}        left turn    Z3: {k, j}  straight through (diagonal)
 *   Z4: {l, i}        diagonal     Z5: all four
 *
 * Admissibility forbids left turns at positive crossings and right turns at
 * negative crossings.  The turn reduction edges are the bottom-left output
 * i(c) for a right turn at a positive crossing and the top-right input l(c)
 * for a left turn at a negative crossing; both always carry label 2.
 */

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "homfly/diagram.hpp"

namespace homfly {

enum class LocalType { Z0, Z1, Z2, Z3, Z4, Z5 };

inline const char* local_type_name(LocalType t) {
    switch (t) {
        case LocalType::Z0: return "Z0";
        case LocalType::Z1: return "Z1";
        case LocalType::Z2: return "Z2";
        case LocalType::Z3: return "Z3";
        case LocalType::Z4: return "Z4";
        case LocalType::Z5: return "Z5";
    }
    return "?";
}

struct TurnStats {
    int t_pos = 0, t_neg = 0;  // turns at positive / negative crossings
    int d_pos = 0, d_neg = 0;  // diagonals
    int x_pos = 0, x_neg = 0;  // full local cycles (all four edges)

    int turns() const { return t_pos + t_neg; }
    int diagonals() const { return d_pos + d_neg; }
    int fulls() const { return x_pos + x_neg; }
};

struct MultiCycle {
    std::vector<char> mask;            // label-1 edges
    std::vector<LocalType> types;      // per crossing
    TurnStats stats;

    std::vector<int> edge_list() const {
        std::vector<int> out;
        for (size_t e = 0; e < mask.size(); ++e)
            if (mask[e]) out.push_back(static_cast<int>(e));
        return out;
    }
    bool empty() const {
        for (char m : mask)
            if (m) return false;
        return true;
    }
};

/// Local pattern of an edge subset at one crossing; throws on flow violation.
inline LocalType classify_local(const Crossing& c, const std::vector<char>& mask) {
    auto has = [&](int e) { return mask[static_cast<size_t>(e)] != 0; };
    bool hk = has(c.k), hl = has(c.l), hi = has(c.i), hj = has(c.j);
    int code = (hk ? 8 : 0) | (hl ? 4 : 0) | (hi ? 2 : 0) | (hj ? 1 : 0);
    switch (code) {
        case 0b0000: return LocalType::Z0;
        case 0b0101: return LocalType::Z1;
        case 0b1010: return LocalType::Z2;
        case 0b1001: return LocalType::Z3;
        case 0b0110: return LocalType::Z4;
        case 0b1111: return LocalType::Z5;
        default:
            throw std::invalid_argument(
                "classify_local: edge subset violates the flow condition");
    }
}

inline bool local_type_admissible(LocalType t, int sign) {
    if (t == LocalType::Z2 && sign > 0) return false;  // left turn at positive
    if (t == LocalType::Z1 && sign < 0) return false;  // right turn at negative
    return true;
}

inline TurnStats turn_stats(const Diagram& D, const std::vector<LocalType>& types) {
    TurnStats s;
    for (size_t ci = 0; ci < D.crossings.size(); ++ci) {
        bool pos = D.crossings[ci].sign > 0;
        switch (types[ci]) {
            case LocalType::Z1:
            case LocalType::Z2: (pos ? s.t_pos : s.t_neg)++; break;
            case LocalType::Z3:
            case LocalType::Z4: (pos ? s.d_pos : s.d_neg)++; break;
            case LocalType::Z5: (pos ? s.x_pos : s.x_neg)++; break;
            case LocalType::Z0: break;
        }
    }
    return s;
}

inline MultiCycle make_cycle(const Diagram& D, std::vector<char> mask) {
    MultiCycle z;
    z.mask = std::move(mask);
    z.types.reserve(D.crossings.size());
    for (const auto& c : D.crossings) z.types.push_back(classify_local(c, z.mask));
    z.stats = turn_stats(D, z.types);
    return z;
}

struct EnumerateOptions {
    bool admissible_only = true;
    bool include_marked = false;  // allow cycles through the marked edge
};

/**
 * All multi-cycles of the diagram, by depth-first assignment of local
 * patterns crossing by crossing (crossing-free loop edges toggle freely at
 * the end).  Output is sorted lexicographically by edge list, so the empty
 * cycle comes first.
 */
inline std::vector<MultiCycle> enumerate_cycles(const Diagram& D,
                                                const EnumerateOptions& opt = {}) {
    static const int patterns[6][4] = {
        // (k, l, i, j) membership per local type, in enum order
        {0, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0},
        {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 1, 1},
    };
    std::vector<int> state(static_cast<size_t>(D.n_edges), -1);  // -1 / 0 / 1
    std::vector<MultiCycle> out;

    std::vector<int> loops;
    for (int e = 0; e < D.n_edges; ++e)
        if (D.free_loop[static_cast<size_t>(e)]) loops.push_back(e);

    auto emit = [&]() {
        std::vector<char> mask(static_cast<size_t>(D.n_edges), 0);
        for (int e = 0; e < D.n_edges; ++e) mask[static_cast<size_t>(e)] = state[static_cast<size_t>(e)] == 1;
        out.push_back(make_cycle(D, std::move(mask)));
    };

    // Free loops: independent on/off choices on top of each crossing solution.
    auto expand_loops = [&](auto&& self, size_t li) -> void {
        if (li == loops.size()) {
            emit();
            return;
        }
        int e = loops[li];
        for (int v : {0, 1}) {
            if (v == 1 && e == D.marked_edge && !opt.include_marked) continue;
            state[static_cast<size_t>(e)] = v;
            self(self, li + 1);
        }
        state[static_cast<size_t>(e)] = -1;
    };

    auto dfs = [&](auto&& self, size_t ci) -> void {
        if (ci == D.crossings.size()) {
            for (int e = 0; e < D.n_edges; ++e)
                if (!D.free_loop[static_cast<size_t>(e)] && state[static_cast<size_t>(e)] == -1)
                    state[static_cast<size_t>(e)] = 0;  // unreachable in practice
            expand_loops(expand_loops, 0);
            return;
        }
        const Crossing& c = D.crossings[ci];
        int slots[4] = {c.k, c.l, c.i, c.j};
        for (int pi = 0; pi < 6; ++pi) {
            if (opt.admissible_only &&
                !local_type_admissible(static_cast<LocalType>(pi), c.sign))
                continue;
            // Check the pattern against already-fixed edges (an edge may fill
            // two slots of the same crossing; both must agree).
            bool ok = true;
            for (int s = 0; s < 4 && ok; ++s) {
                int e = slots[s], want = patterns[pi][s];
                if (want == 1 && e == D.marked_edge && !opt.include_marked) ok = false;
                if (state[static_cast<size_t>(e)] != -1 && state[static_cast<size_t>(e)] != want) ok = false;
                for (int s2 = s + 1; s2 < 4 && ok; ++s2)
                    if (slots[s2] == e && patterns[pi][s2] != want) ok = false;
            }
            if (!ok) continue;
            std::vector<std::pair<int, int>> undo;
            for (int s = 0; s < 4; ++s) {
                int e = slots[s];
                if (state[static_cast<size_t>(e)] == -1) {
                    undo.push_back({e, -1});
                    state[static_cast<size_t>(e)] = patterns[pi][s];
                }
            }
            self(self, ci + 1);
            for (auto& [e, v] : undo) state[static_cast<size_t>(e)] = v;
        }
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(), [](const MultiCycle& a, const MultiCycle& b) {
        return a.edge_list() < b.edge_list();
    });
    return out;
}

/**
 * Brute-force oracle: every one of the 2^|edges| subsets, kept if it
 * satisfies the flow condition (and the marked/admissibility filters).
 * Exponential in edges; for tests only.
 */
inline std::vector<MultiCycle> enumerate_cycles_bruteforce(
    const Diagram& D, const EnumerateOptions& opt = {}) {
    std::vector<MultiCycle> out;
    if (D.n_edges > 22)
        throw std::invalid_argument("bruteforce oracle: too many edges");
    for (unsigned long bits = 0; bits < (1UL << D.n_edges); ++bits) {
        std::vector<char> mask(static_cast<size_t>(D.n_edges), 0);
        for (int e = 0; e < D.n_edges; ++e) mask[static_cast<size_t>(e)] = (bits >> e) & 1;
        if (!opt.include_marked && mask[static_cast<size_t>(D.marked_edge)]) continue;
        bool ok = true;
        std::vector<LocalType> types;
        try {
            for (const auto& c : D.crossings) types.push_back(classify_local(c, mask));
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        if (!ok) continue;
        if (opt.admissible_only) {
            for (size_t ci = 0; ci < D.crossings.size(); ++ci)
                if (!local_type_admissible(types[ci], D.crossings[ci].sign)) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        MultiCycle z;
        z.mask = std::move(mask);
        z.types = std::move(types);
        z.stats = turn_stats(D, z.types);
        out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(), [](const MultiCycle& a, const MultiCycle& b) {
        return a.edge_list() < b.edge_list();
    });
    return out;
}

/// Label of an edge under the 2-labeling defined by Z: 1 on Z, 2 elsewhere.
inline int edge_label(const MultiCycle& z, int e) {
    return z.mask[static_cast<size_t>(e)] ? 1 : 2;
}

inline std::vector<char> complement_mask(const std::vector<char>& mask) {
    std::vector<char> c(mask.size());
    for (size_t i = 0; i < mask.size(); ++i) c[i] = mask[i] ? 0 : 1;
    return c;
}

inline std::vector<char> side_mask(const MultiCycle& z, int which) {
    if (which == 1) return z.mask;
    if (which == 2) return complement_mask(z.mask);
    throw std::invalid_argument("side_mask: label must be 1 or 2");
}

/**
 * Sum of the signs of the crossings incident to at least one edge with the
 * given label.
 */
inline int s_value(const Diagram& D, const MultiCycle& z, int which) {
    std::vector<char> mask = side_mask(z, which);
    int s = 0;
    for (const auto& c : D.crossings) {
        bool touch = mask[static_cast<size_t>(c.k)] || mask[static_cast<size_t>(c.l)] ||
                     mask[static_cast<size_t>(c.i)] || mask[static_cast<size_t>(c.j)];
        if (touch) s += c.sign;
    }
    return s;
}

/// Sum of the signs of the crossings retained by the given side (all four
/// slots carrying that label): the writhe of the subdiagram.
inline int subdiagram_writhe(const Diagram& D, const MultiCycle& z, int which) {
    std::vector<char> mask = side_mask(z, which);
    int w = 0;
    for (const auto& c : D.crossings) {
        bool all = mask[static_cast<size_t>(c.k)] && mask[static_cast<size_t>(c.l)] &&
                   mask[static_cast<size_t>(c.i)] && mask[static_cast<size_t>(c.j)];
        if (all) w += c.sign;
    }
    return w;
}

/**
 * Disc statistics of a multi-cycle: every component bounds a disc on the
 * side for which the component runs clockwise; k_plus counts the components
 * whose such disc avoids the marked edge, k_minus the others.
 */
struct DiscStats {
    int k_plus = 0, k_minus = 0;
};

inline DiscStats disc_stats(const Diagram& D, const MultiCycle& z) {
    DiscStats ks;
    for (const auto& c : induced_circles(D, z.mask)) {
        bool inside = detail::point_inside(c.polyline, D.marked_point);
        bool cw_disc_has_marked = (c.orientation == -1) ? inside : !inside;
        (cw_disc_has_marked ? ks.k_minus : ks.k_plus)++;
    }
    return ks;
}

/**
 * Turn reduction edges of an admissible multi-cycle: the bottom-left output
 * of each right turn at a positive crossing and the top-right input of each
 * left turn at a negative crossing.  All carry label 2.
 */
inline std::vector<int> turn_reduction_edges(const Diagram& D, const MultiCycle& z) {
    std::vector<int> out;
    for (size_t ci = 0; ci < D.crossings.size(); ++ci) {
        const Crossing& c = D.crossings[ci];
        if (z.types[ci] == LocalType::Z1 && c.sign > 0) out.push_back(c.i);
        if (z.types[ci] == LocalType::Z2 && c.sign < 0) out.push_back(c.l);
    }
    return out;
}

/**
 * Link components of one side of the labeling, as edge lists.  Retained
 * crossings connect by the strand passages, forgotten ones by concatenation.
 */
inline std::vector<std::vector<int>> side_components(const Diagram& D,
                                                     const MultiCycle& z,
                                                     int which) {
    std::vector<char> mask = side_mask(z, which);
    std::vector<int> parent(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) parent[static_cast<size_t>(e)] = e;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (const auto& c : D.crossings) {
        bool hk = mask[static_cast<size_t>(c.k)], hl = mask[static_cast<size_t>(c.l)],
             hi = mask[static_cast<size_t>(c.i)], hj = mask[static_cast<size_t>(c.j)];
        int ins = (hk ? 1 : 0) + (hl ? 1 : 0);
        if (ins == 2 && hi && hj) {
            unite(c.k, c.j);
            unite(c.l, c.i);
        } else if (ins == 1) {
            unite(hk ? c.k : c.l, hi ? c.i : c.j);
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(static_cast<size_t>(D.n_edges), -1);
    for (int e = 0; e < D.n_edges; ++e) {
        if (!mask[static_cast<size_t>(e)]) continue;
        int r = find(e);
        if (comp_of[static_cast<size_t>(r)] == -1) {
            comp_of[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.push_back({});
        }
        comps[static_cast<size_t>(comp_of[static_cast<size_t>(r)])].push_back(e);
    }
    return comps;
}

}  // namespace homfly
