#pragma once
/**
 * HOMFLY-PT polynomial of an oriented link diagram by skein recursion.
 *
 * Convention (variables a, q):
 *
 *     a P(L+) - a^-1 P(L-) = (q - q^-1) P(L0),      P(unknot) = 1,
 *
 * and a distant unknot multiplies by delta = (a - a^-1)/(q - q^-1).  Values
 * are Laurent polynomials over (q - q^-1)-powers (QuotientPoly); for links
 * with an even number of components a genuine denominator survives.
 *
 * The recursion descends on the first crossing that the canonical traversal
 * reaches on its under-strand: switching it strictly advances that first
 * position and smoothing removes a crossing, so the recursion bottoms out at
 * descending diagrams, which represent unlinks.
 */

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homfly/cycles.hpp"
#include "homfly/diagram.hpp"
#include "homfly/laurent.hpp"

namespace homfly {

/**
 * A bare combinatorial link diagram: arcs numbered 0..n_arcs-1, crossings
 * carrying arc ids in the same slot convention as Diagram (in k,l; out i,j;
 * passages k->j and l->i; positive sign means the k->j strand is on top),
 * plus a count of crossing-free circles.  Every arc enters exactly one
 * crossing and leaves exactly one.
 */
struct LinkDiagram {
    int n_arcs = 0;
    std::vector<Crossing> crossings;
    int free_circles = 0;

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings) w += c.sign;
        return w;
    }
    bool empty() const { return n_arcs == 0 && free_circles == 0; }

    LinkDiagram mirrored() const {
        LinkDiagram m = *this;
        for (auto& c : m.crossings) c.sign = -c.sign;
        return m;
    }
};

/// Forget the embedding of a closure diagram, keeping the crossing data.
inline LinkDiagram to_link(const Diagram& D) {
    LinkDiagram L;
    std::vector<int> remap(static_cast<size_t>(D.n_edges), -1);
    for (int e = 0; e < D.n_edges; ++e) {
        if (D.free_loop[static_cast<size_t>(e)])
            L.free_circles++;
        else
            remap[static_cast<size_t>(e)] = L.n_arcs++;
    }
    for (const auto& c : D.crossings) {
        Crossing nc = c;
        nc.k = remap[static_cast<size_t>(c.k)];
        nc.l = remap[static_cast<size_t>(c.l)];
        nc.i = remap[static_cast<size_t>(c.i)];
        nc.j = remap[static_cast<size_t>(c.j)];
        L.crossings.push_back(nc);
    }
    return L;
}

/**
 * The sub-link carrying one label of a labeling: crossings whose four slots
 * all carry the label survive, crossings met by exactly two such edges
 * concatenate them, and concatenation classes away from every surviving
 * crossing become crossing-free circles.
 */
inline LinkDiagram subdiagram_link(const Diagram& D, const MultiCycle& z, int which) {
    std::vector<char> mask = side_mask(z, which);
    std::vector<int> parent(static_cast<size_t>(D.n_edges));
    for (int e = 0; e < D.n_edges; ++e) parent[static_cast<size_t>(e)] = e;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto has = [&](int e) { return mask[static_cast<size_t>(e)] != 0; };

    std::vector<size_t> retained;
    for (size_t ci = 0; ci < D.crossings.size(); ++ci) {
        const Crossing& c = D.crossings[ci];
        int cnt = (has(c.k) ? 1 : 0) + (has(c.l) ? 1 : 0) + (has(c.i) ? 1 : 0) +
                  (has(c.j) ? 1 : 0);
        if (cnt == 4) {
            retained.push_back(ci);
        } else if (cnt == 2) {
            int in = has(c.k) ? c.k : c.l, out = has(c.i) ? c.i : c.j;
            parent[static_cast<size_t>(find(in))] = find(out);
        }
    }

    LinkDiagram L;
    std::vector<int> arc_of(static_cast<size_t>(D.n_edges), -1);
    for (size_t ci : retained) {
        const Crossing& c = D.crossings[ci];
        for (int e : {c.k, c.l, c.i, c.j}) {
            int r = find(e);
            if (arc_of[static_cast<size_t>(r)] == -1)
                arc_of[static_cast<size_t>(r)] = L.n_arcs++;
        }
    }
    for (size_t ci : retained) {
        Crossing nc = D.crossings[ci];
        nc.k = arc_of[static_cast<size_t>(find(nc.k))];
        nc.l = arc_of[static_cast<size_t>(find(nc.l))];
        nc.i = arc_of[static_cast<size_t>(find(nc.i))];
        nc.j = arc_of[static_cast<size_t>(find(nc.j))];
        L.crossings.push_back(nc);
    }
    // Classes of labeled edges never meeting a surviving crossing.
    std::vector<char> seen(static_cast<size_t>(D.n_edges), 0);
    for (int e = 0; e < D.n_edges; ++e) {
        if (!has(e)) continue;
        int r = find(e);
        if (seen[static_cast<size_t>(r)]) continue;
        seen[static_cast<size_t>(r)] = 1;
        if (arc_of[static_cast<size_t>(r)] == -1) L.free_circles++;
    }
    return L;
}

namespace detail {

struct Traversal {
    std::vector<int> order;   // arcs in canonical visit order
    int n_components = 0;
    int first_bad = -1;       // crossing index first reached on its under-strand
    std::vector<int> code;    // canonical relabeled form, usable as a memo key
};

inline Traversal traverse_link(const LinkDiagram& L) {
    const int n = L.n_arcs;
    std::vector<int> death_cross(static_cast<size_t>(n), -1),
        death_slot(static_cast<size_t>(n), -1);
    std::vector<int> seen_out(static_cast<size_t>(n), 0);
    for (size_t ci = 0; ci < L.crossings.size(); ++ci) {
        const Crossing& c = L.crossings[ci];
        for (int s = 0; s < 2; ++s) {
            int e = c.in_edge(s);
            if (death_cross[static_cast<size_t>(e)] != -1)
                throw std::logic_error("link diagram: arc enters two crossings");
            death_cross[static_cast<size_t>(e)] = static_cast<int>(ci);
            death_slot[static_cast<size_t>(e)] = s;
            seen_out[static_cast<size_t>(c.out_edge(s))]++;
        }
    }
    for (int a = 0; a < n; ++a)
        if (death_cross[static_cast<size_t>(a)] == -1 || seen_out[static_cast<size_t>(a)] != 1)
            throw std::logic_error("link diagram: arc incidence out of balance");

    Traversal T;
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<char> crossing_seen(L.crossings.size(), 0);
    std::vector<int> new_id(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        T.n_components++;
        int a = start;
        do {
            visited[static_cast<size_t>(a)] = 1;
            new_id[static_cast<size_t>(a)] = static_cast<int>(T.order.size());
            T.order.push_back(a);
            int ci = death_cross[static_cast<size_t>(a)];
            int slot = death_slot[static_cast<size_t>(a)];
            const Crossing& c = L.crossings[static_cast<size_t>(ci)];
            if (!crossing_seen[static_cast<size_t>(ci)]) {
                crossing_seen[static_cast<size_t>(ci)] = 1;
                bool over = (c.sign > 0) ? (slot == 0) : (slot == 1);
                if (!over && T.first_bad == -1) T.first_bad = ci;
            }
            a = c.out_edge(1 - slot);  // the strand passage
        } while (a != start);
    }

    T.code.push_back(L.n_arcs);
    T.code.push_back(L.free_circles);
    std::vector<std::array<int, 5>> rows;
    for (const auto& c : L.crossings)
        rows.push_back({c.sign, new_id[static_cast<size_t>(c.k)], new_id[static_cast<size_t>(c.l)],
                        new_id[static_cast<size_t>(c.i)], new_id[static_cast<size_t>(c.j)]});
    std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) T.code.insert(T.code.end(), r.begin(), r.end());
    return T;
}

inline LinkDiagram switch_crossing(LinkDiagram L, int ci) {
    L.crossings[static_cast<size_t>(ci)].sign =
        -L.crossings[static_cast<size_t>(ci)].sign;
    return L;
}

/// Oriented smoothing at one crossing: k joins i, l joins j.
inline LinkDiagram smooth_crossing(const LinkDiagram& L, int ci) {
    std::vector<int> parent(static_cast<size_t>(L.n_arcs));
    for (int a = 0; a < L.n_arcs; ++a) parent[static_cast<size_t>(a)] = a;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    const Crossing& sc = L.crossings[static_cast<size_t>(ci)];
    parent[static_cast<size_t>(find(sc.k))] = find(sc.i);
    parent[static_cast<size_t>(find(sc.l))] = find(sc.j);

    LinkDiagram R;
    R.free_circles = L.free_circles;
    std::vector<int> arc_of(static_cast<size_t>(L.n_arcs), -1);
    for (size_t cj = 0; cj < L.crossings.size(); ++cj) {
        if (static_cast<int>(cj) == ci) continue;
        const Crossing& c = L.crossings[cj];
        for (int e : {c.k, c.l, c.i, c.j}) {
            int r = find(e);
            if (arc_of[static_cast<size_t>(r)] == -1) arc_of[static_cast<size_t>(r)] = R.n_arcs++;
        }
    }
    for (size_t cj = 0; cj < L.crossings.size(); ++cj) {
        if (static_cast<int>(cj) == ci) continue;
        Crossing nc = L.crossings[cj];
        nc.k = arc_of[static_cast<size_t>(find(nc.k))];
        nc.l = arc_of[static_cast<size_t>(find(nc.l))];
        nc.i = arc_of[static_cast<size_t>(find(nc.i))];
        nc.j = arc_of[static_cast<size_t>(find(nc.j))];
        R.crossings.push_back(nc);
    }
    std::vector<char> seen(static_cast<size_t>(L.n_arcs), 0);
    for (int a = 0; a < L.n_arcs; ++a) {
        int r = find(a);
        if (seen[static_cast<size_t>(r)]) continue;
        seen[static_cast<size_t>(r)] = 1;
        if (arc_of[static_cast<size_t>(r)] == -1) R.free_circles++;
    }
    return R;
}

}  // namespace detail

/**
 * Skein evaluator with a canonical-form memo shared across calls.
 */
class SkeinEvaluator {
  public:
    /// P(L).  Throws std::invalid_argument on the empty diagram, whose value
    /// 1/delta is not a Laurent multiple of (q-q^-1) powers.
    QuotientPoly eval(const LinkDiagram& L) {
        if (L.empty())
            throw std::invalid_argument("homfly: empty diagram has value 1/delta");
        return eval_inner(L);
    }

    size_t memo_size() const { return memo_.size(); }

  private:
    QuotientPoly eval_inner(const LinkDiagram& L) {
        if (L.crossings.empty()) return delta_power(L.free_circles - 1);
        detail::Traversal T = detail::traverse_link(L);
        if (T.first_bad == -1)
            return delta_power(T.n_components + L.free_circles - 1);
        auto it = memo_.find(T.code);
        if (it != memo_.end()) return it->second;

        const int ci = T.first_bad;
        QuotientPoly switched = eval_inner(detail::switch_crossing(L, ci));
        QuotientPoly smoothed = eval_inner(detail::smooth_crossing(L, ci));
        QuotientPoly value;
        if (L.crossings[static_cast<size_t>(ci)].sign > 0) {
            // a P(+) - a^-1 P(-) = (q-q^-1) P(0), solved for P(+).
            value = QuotientPoly(Laurent::var_pow("a", -2)) * switched +
                    QuotientPoly(Laurent::var_pow("a", -1) * Laurent::q_minus_qinv()) *
                        smoothed;
        } else {
            value = QuotientPoly(Laurent::var_pow("a", 2)) * switched -
                    QuotientPoly(Laurent::var_pow("a", 1) * Laurent::q_minus_qinv()) *
                        smoothed;
        }
        memo_.emplace(std::move(T.code), value);
        return value;
    }

    static QuotientPoly delta_power(int c) {
        if (c < 0) throw std::invalid_argument("homfly: empty diagram reached");
        Laurent d = Laurent::var("a") - Laurent::var_pow("a", -1);
        QuotientPoly out = QuotientPoly::one();
        for (int t = 0; t < c; ++t) out = out * QuotientPoly(d, 1);
        return out;
    }

    std::map<std::vector<int>, QuotientPoly> memo_;
};

inline SkeinEvaluator& skein_evaluator() {
    static SkeinEvaluator ev;
    return ev;
}

/// P(a, q) of the closure link.
inline QuotientPoly homfly_poly(const LinkDiagram& L) { return skein_evaluator().eval(L); }
inline QuotientPoly homfly_poly(const Diagram& D) { return homfly_poly(to_link(D)); }

/**
 * The writhe-corrected multiple a^w * delta * P used by the composition
 * products; its unknot value is delta and its empty-diagram value is one.
 */
inline QuotientPoly homfly_framed(const LinkDiagram& L) {
    if (L.empty()) return QuotientPoly::one();
    Laurent d = Laurent::var("a") - Laurent::var_pow("a", -1);
    return QuotientPoly(Laurent::var_pow("a", L.writhe())) * QuotientPoly(d, 1) *
           homfly_poly(L);
}

/**
 * Specialization a -> q^n as an honest Laurent polynomial; n = 1 gives the
 * constant 1, n = 0 the Alexander-Conway normalization.  The empty diagram
 * is defined to be 1 (the a -> q limit of 1/delta).
 */
inline Laurent homfly_specialized(const LinkDiagram& L, int n) {
    if (L.empty()) {
        if (n == 1) return Laurent::one();
        throw std::invalid_argument("homfly_specialized: empty diagram");
    }
    QuotientPoly p = homfly_poly(L);
    QuotientPoly s = p.substitute({{"a", Laurent::var_pow("q", n)}});
    return s.as_laurent();
}

/// Sign-of-evaluation shortcut at a -> q^-1: (-1)^(components+1).
/// Uses the component count directly instead of evaluating the polynomial.
inline Laurent homfly_at_q_inverse(const LinkDiagram& L) {
    if (L.empty()) {
        throw std::invalid_argument("homfly_at_q_inverse: empty diagram");
    }
    int comps = detail::traverse_link(L).n_components + L.free_circles;
    Laurent sign = Laurent::one();
    return (comps % 2 == 0) ? -sign : sign;
}

}  // namespace homfly
