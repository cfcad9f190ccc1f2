#pragma once
/**
 * Decorated braid-closure diagrams with a concrete planar embedding.
 *
 * Conventions (fixed once; everything downstream depends on them):
 *
 *  - Strands flow DOWNWARD through the braid.  A letter +/-i crosses the
 *    strands at positions i, i+1.
 *  - The closure routes each strand from the bottom of position p around the
 *    right side back to its top.  Arcs are nested with the leftmost strand's
 *    arc outermost, so arc radii are r_p = b - p + 1.
 *  - At a crossing, the two incoming edges occupy the top-left (k) and
 *    top-right (l) slots, the outgoing edges the bottom-left (i) and
 *    bottom-right (j) slots.  The actual strand passages are the diagonals
 *    k->j and l->i; the oriented smoothing connects k->i and l->j.
 *  - Edges are numbered so that the b top/closure edges come first by
 *    position (edge 0 = leftmost = marked edge e0), then each letter's two
 *    outputs, bottom-left before bottom-right.  The final outputs of each
 *    strand position are identified with that position's top edge by the
 *    closure.  A strand position with no crossings keeps its single edge as
 *    a crossing-free loop.
 *
 * The embedding is stored explicitly: every edge carries a rectilinear
 * polyline in doubled integer coordinates (columns x = 2p, crossing rows
 * y = 2t+2, top line y = 1, bottom line y = 2m+1, arcs outside).  Circles
 * assembled from edges are embedded rectilinear polygons, so orientation
 * (signed area) and point containment are exact integer computations.
 * These two primitives drive both rotation-number conventions.
 */

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "homfly/braid.hpp"

namespace homfly {

struct Pt {
    long long x = 0, y = 0;
};

/// A crossing's four incident edge slots.  Slots may repeat an edge (a kink).
struct Crossing {
    int sign = +1;
    int k = -1, l = -1;  // incoming: top-left, top-right
    int i = -1, j = -1;  // outgoing: bottom-left, bottom-right

    int in_edge(int slot) const { return slot == 0 ? k : l; }
    int out_edge(int slot) const { return slot == 0 ? i : j; }
};

struct Diagram {
    int strands = 1;
    std::vector<int> letters;  // the braid word this closure came from
    int n_edges = 0;
    int marked_edge = 0;
    std::vector<Crossing> crossings;

    /// Per edge: birth = (crossing, out-slot), death = (crossing, in-slot);
    /// {-1,-1} for crossing-free loop edges.
    std::vector<std::array<int, 2>> birth, death;
    std::vector<char> free_loop;

    /// Per edge: oriented rectilinear polyline in doubled coordinates.
    std::vector<std::vector<Pt>> edge_path;

    /// A point on the marked edge, strictly above every other curve.
    Pt marked_point;

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings) w += c.sign;
        return w;
    }

    Diagram mirrored() const {
        Diagram m = *this;
        for (auto& c : m.crossings) c.sign = -c.sign;
        for (auto& l : m.letters) l = -l;
        return m;
    }
};

/**
 * Build the closure diagram of a braid word.  |edges| = 2*|letters| plus one
 * loop edge per strand position the word never touches.
 */
inline Diagram close_braid(const BraidWord& w) {
    const int b = w.strands;
    const int m = static_cast<int>(w.letters.size());
    Diagram D;
    D.strands = b;
    D.letters = w.letters;

    // Provisional edge ids: 0..b-1 top edges, then 2 per letter.
    int next_id = b;
    std::vector<int> cur(static_cast<size_t>(b) + 1);
    for (int p = 1; p <= b; ++p) cur[static_cast<size_t>(p)] = p - 1;

    int total = b + 2 * m;
    std::vector<std::array<int, 2>> birth(static_cast<size_t>(total), {-1, -1});
    std::vector<std::array<int, 2>> death(static_cast<size_t>(total), {-1, -1});
    std::vector<int> col(static_cast<size_t>(total), -1);  // birth column

    for (int t = 0; t < m; ++t) {
        int letter = w.letters[static_cast<size_t>(t)];
        int pos = letter < 0 ? -letter : letter;
        if (pos < 1 || pos >= b)
            throw std::invalid_argument("braid letter out of range");
        Crossing c;
        c.sign = letter > 0 ? +1 : -1;
        c.k = cur[static_cast<size_t>(pos)];
        c.l = cur[static_cast<size_t>(pos) + 1];
        c.i = next_id++;
        c.j = next_id++;
        death[static_cast<size_t>(c.k)] = {t, 0};
        death[static_cast<size_t>(c.l)] = {t, 1};
        birth[static_cast<size_t>(c.i)] = {t, 0};
        birth[static_cast<size_t>(c.j)] = {t, 1};
        col[static_cast<size_t>(c.i)] = pos;
        col[static_cast<size_t>(c.j)] = pos + 1;
        cur[static_cast<size_t>(pos)] = c.i;
        cur[static_cast<size_t>(pos) + 1] = c.j;
        D.crossings.push_back(c);
    }

    // Closure: identify the bottom edge of each position with its top edge.
    std::vector<char> loop(static_cast<size_t>(total), 0);
    std::vector<char> drop(static_cast<size_t>(total), 0);
    for (int p = 1; p <= b; ++p) {
        int e = cur[static_cast<size_t>(p)];
        if (e == p - 1) {
            loop[static_cast<size_t>(p - 1)] = 1;  // untouched: crossing-free loop
            continue;
        }
        // Rename e -> p-1 at its birth slot; e has no death (it is at the bottom).
        auto [ct, slot] = birth[static_cast<size_t>(e)];
        Crossing& c = D.crossings[static_cast<size_t>(ct)];
        (slot == 0 ? c.i : c.j) = p - 1;
        birth[static_cast<size_t>(p - 1)] = {ct, slot};
        col[static_cast<size_t>(p - 1)] = p;
        drop[static_cast<size_t>(e)] = 1;
    }

    // Compact ids 0..total-1 minus dropped ones, preserving order.
    std::vector<int> remap(static_cast<size_t>(total), -1);
    int n = 0;
    for (int e = 0; e < total; ++e)
        if (!drop[static_cast<size_t>(e)]) remap[static_cast<size_t>(e)] = n++;
    D.n_edges = n;
    for (auto& c : D.crossings) {
        c.k = remap[static_cast<size_t>(c.k)];
        c.l = remap[static_cast<size_t>(c.l)];
        c.i = remap[static_cast<size_t>(c.i)];
        c.j = remap[static_cast<size_t>(c.j)];
    }
    D.birth.assign(static_cast<size_t>(n), {-1, -1});
    D.death.assign(static_cast<size_t>(n), {-1, -1});
    D.free_loop.assign(static_cast<size_t>(n), 0);
    std::vector<int> ncol(static_cast<size_t>(n), -1);
    for (int e = 0; e < total; ++e) {
        int ne = remap[static_cast<size_t>(e)];
        if (ne < 0) continue;
        D.birth[static_cast<size_t>(ne)] = birth[static_cast<size_t>(e)];
        D.death[static_cast<size_t>(ne)] = death[static_cast<size_t>(e)];
        D.free_loop[static_cast<size_t>(ne)] = loop[static_cast<size_t>(e)];
        ncol[static_cast<size_t>(ne)] = col[static_cast<size_t>(e)];
    }

    // --- geometry ------------------------------------------------------
    // Doubled coordinates: column p at x=2p, crossing row t at y=2t+2,
    // top line y=1, bottom y=2m+1, arc p offset r=b-p+1.
    auto row_y = [](int t) { return 2LL * t + 2; };
    const long long TOP = 1, BOT = 2LL * m + 1;
    auto arc_path = [&](int p, std::vector<Pt>& path) {
        long long r = b - p + 1, x = 2LL * p, xo = 2LL * (b + r);
        path.push_back({x, BOT});
        path.push_back({x, BOT + 2 * r});
        path.push_back({xo, BOT + 2 * r});
        path.push_back({xo, TOP - 2 * r});
        path.push_back({x, TOP - 2 * r});
        path.push_back({x, TOP});
    };

    D.edge_path.assign(static_cast<size_t>(n), {});
    for (int e = 0; e < n; ++e) {
        auto& path = D.edge_path[static_cast<size_t>(e)];
        int p = ncol[static_cast<size_t>(e)];
        if (D.free_loop[static_cast<size_t>(e)]) {
            p = e + 1;  // untouched position's top edge keeps its index
            long long x = 2LL * p;
            path.push_back({x, TOP});
            arc_path(p, path);
            continue;  // closed: first point == last point
        }
        if (e < b) {
            // Closure edge: born at the last crossing on position p=e+1,
            // runs to the bottom, around the arc, and down to its death row.
            long long x = 2LL * p;
            auto [bt, bs] = D.birth[static_cast<size_t>(e)];
            auto [dt, ds] = D.death[static_cast<size_t>(e)];
            (void)bs;
            (void)ds;
            path.push_back({x, row_y(bt)});
            arc_path(p, path);
            path.push_back({x, row_y(dt)});
        } else {
            long long x = 2LL * p;
            auto [bt, bs] = D.birth[static_cast<size_t>(e)];
            auto [dt, ds] = D.death[static_cast<size_t>(e)];
            (void)bs;
            (void)ds;
            path.push_back({x, row_y(bt)});
            path.push_back({x, row_y(dt)});
        }
    }

    // Point on the marked edge's arc, strictly above every other curve.
    D.marked_point = {2LL * b + 1, TOP - 2LL * b};
    return D;
}

// ---------------------------------------------------------------------------
// Circles induced by an edge subset.
// ---------------------------------------------------------------------------

/**
 * A closed curve assembled from diagram edges.  `orientation` is the sign of
 * the polygon's signed area in our embedding (+1 counterclockwise); plain
 * braid-closure circles come out -1.
 */
struct CircleData {
    std::vector<int> edges;          // in traversal order
    std::vector<Pt> polyline;        // closed (wraps implicitly)
    long long area2 = 0;             // twice the signed area
    int orientation = 0;             // sign of area2
    bool through_marked = false;     // passes through the marked edge
};

namespace detail {

inline long long shoelace2(const std::vector<Pt>& poly) {
    long long a = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

/// Exact point-in-polygon for rectilinear polygons whose vertices all have
/// even coordinates, tested at a point with odd coordinates: cast a vertical
/// ray downward and count crossed horizontal segments.
inline bool point_inside(const std::vector<Pt>& poly, Pt pt) {
    size_t n = poly.size();
    int count = 0;
    for (size_t s = 0; s < n; ++s) {
        const Pt& p = poly[s];
        const Pt& q = poly[(s + 1) % n];
        if (p.y != q.y) continue;  // vertical or degenerate
        long long lo = std::min(p.x, q.x), hi = std::max(p.x, q.x);
        if (p.y > pt.y && lo < pt.x && pt.x < hi) ++count;
    }
    return (count % 2) == 1;
}

}  // namespace detail

/**
 * Decompose an edge subset into closed curves.  At each crossing the subset
 * must meet the slots in a flow-balanced pattern; crossings meeting all four
 * slots are connected by the oriented smoothing (k->i, l->j), crossings
 * meeting exactly two by the forced in->out pair.  This covers Seifert
 * circles (subset = everything), multi-cycle components, and the circles of
 * a labeling's subdiagrams alike.
 */
inline std::vector<CircleData> induced_circles(const Diagram& D,
                                               const std::vector<char>& subset) {
    auto in_set = [&](int e) { return subset[static_cast<size_t>(e)] != 0; };

    // connection at (crossing, in-slot) -> out-slot
    auto next_slot = [&](const Crossing& c, int in_slot) -> int {
        bool hk = in_set(c.k), hl = in_set(c.l), hi = in_set(c.i), hj = in_set(c.j);
        int ins = (hk ? 1 : 0) + (hl ? 1 : 0), outs = (hi ? 1 : 0) + (hj ? 1 : 0);
        if (ins != outs)
            throw std::logic_error("induced_circles: flow condition violated");
        if (ins == 2) return in_slot;          // smoothing: k->i, l->j
        return hi ? 0 : 1;                      // the unique present out-slot
    };

    std::vector<CircleData> out;
    std::vector<char> seen(static_cast<size_t>(D.n_edges), 0);
    for (int start = 0; start < D.n_edges; ++start) {
        if (!in_set(start) || seen[static_cast<size_t>(start)]) continue;
        CircleData circ;
        int e = start;
        do {
            seen[static_cast<size_t>(e)] = 1;
            circ.edges.push_back(e);
            if (e == D.marked_edge) circ.through_marked = true;
            const auto& path = D.edge_path[static_cast<size_t>(e)];
            circ.polyline.insert(circ.polyline.end(), path.begin(), path.end());
            if (D.free_loop[static_cast<size_t>(e)]) break;  // own circle
            auto [ct, slot] = D.death[static_cast<size_t>(e)];
            const Crossing& c = D.crossings[static_cast<size_t>(ct)];
            e = c.out_edge(next_slot(c, slot));
        } while (e != start);
        circ.area2 = detail::shoelace2(circ.polyline);
        circ.orientation = circ.area2 > 0 ? +1 : (circ.area2 < 0 ? -1 : 0);
        if (circ.orientation == 0)
            throw std::logic_error("induced_circles: degenerate circle");
        out.push_back(std::move(circ));
    }
    return out;
}

inline std::vector<char> all_edges_mask(const Diagram& D) {
    return std::vector<char>(static_cast<size_t>(D.n_edges), 1);
}

/**
 * Rotation number of the curves induced by an edge subset: the sum of their
 * orientation signs (counterclockwise +1).  For the full diagram of a braid
 * closure this is -(strand count).
 */
inline int rotation_number(const Diagram& D, const std::vector<char>& subset) {
    int r = 0;
    for (const auto& c : induced_circles(D, subset)) r += c.orientation;
    return r;
}

inline int rotation_number(const Diagram& D) {
    return rotation_number(D, all_edges_mask(D));
}

/**
 * Marked-convention rotation number: each circle is read as the boundary of
 * the disc NOT containing the marked edge.  A circle through the marked edge
 * contributes 0; otherwise it contributes its orientation if the marked
 * point lies outside it, and the reverse if inside.
 */
inline int marked_rotation_number(const Diagram& D,
                                  const std::vector<char>& subset) {
    int r = 0;
    for (const auto& c : induced_circles(D, subset)) {
        if (c.through_marked) continue;
        bool inside = detail::point_inside(c.polyline, D.marked_point);
        r += inside ? -c.orientation : c.orientation;
    }
    return r;
}

inline int marked_rotation_number(const Diagram& D) {
    return marked_rotation_number(D, all_edges_mask(D));
}

/// Seifert circles (oriented smoothing everywhere) with their marked signs.
struct SeifertData {
    std::vector<CircleData> circles;
    int special = -1;          // index of the circle through the marked edge
    std::vector<int> signs;    // marked-convention sign per circle
};

inline SeifertData seifert_circles(const Diagram& D) {
    SeifertData S;
    S.circles = induced_circles(D, all_edges_mask(D));
    for (size_t ci = 0; ci < S.circles.size(); ++ci) {
        const auto& c = S.circles[ci];
        if (c.through_marked) {
            S.special = static_cast<int>(ci);
            S.signs.push_back(0);
        } else {
            bool inside = detail::point_inside(c.polyline, D.marked_point);
            S.signs.push_back(inside ? -c.orientation : c.orientation);
        }
    }
    return S;
}

/**
 * Number of link components formed by an edge subset when crossings meeting
 * all four slots connect by the actual strand passages (k->j, l->i) instead
 * of the smoothing.  With the full edge set this is the number of components
 * of the closure link.
 */
inline int link_components(const Diagram& D, const std::vector<char>& subset) {
    auto in_set = [&](int e) { return subset[static_cast<size_t>(e)] != 0; };
    std::vector<int> parent(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) parent[static_cast<size_t>(e)] = e;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

    for (const auto& c : D.crossings) {
        bool hk = in_set(c.k), hl = in_set(c.l), hi = in_set(c.i), hj = in_set(c.j);
        int ins = (hk ? 1 : 0) + (hl ? 1 : 0), outs = (hi ? 1 : 0) + (hj ? 1 : 0);
        if (ins != outs)
            throw std::logic_error("link_components: flow condition violated");
        if (ins == 2) {
            unite(c.k, c.j);  // strand passages
            unite(c.l, c.i);
        } else if (ins == 1) {
            unite(hk ? c.k : c.l, hi ? c.i : c.j);
        }
    }
    // Count classes containing at least one subset edge.
    std::vector<char> counted(static_cast<size_t>(D.n_edges), 0);
    int comps = 0;
    for (int e = 0; e < D.n_edges; ++e) {
        if (!in_set(e)) continue;
        int r = find(e);
        if (!counted[static_cast<size_t>(r)]) {
            counted[static_cast<size_t>(r)] = 1;
            ++comps;
        }
    }
    return comps;
}

inline int link_components(const Diagram& D) {
    return link_components(D, all_edges_mask(D));
}

}  // namespace homfly
