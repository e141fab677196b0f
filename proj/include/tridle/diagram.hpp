#pragma once

// Oriented link diagrams from PD codes. A tuple X(t0,t1,t2,t3) lists the
// four edge-ends counterclockwise starting from the incoming under-strand;
// the under-strand runs slot 0 -> slot 2, the over-strand occupies slots
// 1 and 3. Edge labels are 1..2n, consecutive along each component.

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tridle/errors.hpp"

namespace tridle {

struct PDCode {
    std::vector<std::array<int, 4>> tuples;

    int n() const { return static_cast<int>(tuples.size()); }

    friend bool operator==(const PDCode& a, const PDCode& b) {
        return a.tuples == b.tuples;
    }
};

// Whitespace-separated "X(i,j,k,l)" terms.
inline PDCode parse_pd(const std::string& text) {
    PDCode pd;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ','))
            ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != 'X' && text[i] != 'x')
            throw SyntaxError("expected 'X(' at offset " + std::to_string(i));
        ++i;
        skip_ws();
        if (i >= text.size() || (text[i] != '(' && text[i] != '['))
            throw SyntaxError("expected '(' at offset " + std::to_string(i));
        char close = text[i] == '(' ? ')' : ']';
        ++i;
        std::vector<int> vals;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == close) {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
                throw SyntaxError("expected edge label at offset " + std::to_string(i));
            int v = 0;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                v = v * 10 + (text[i++] - '0');
            vals.push_back(v);
        }
        if (vals.size() != 4)
            throw ArityError("crossing tuple has " + std::to_string(vals.size()) +
                             " entries, want 4");
        pd.tuples.push_back({vals[0], vals[1], vals[2], vals[3]});
    }
    if (pd.tuples.empty()) throw SyntaxError("no crossings in input");

    std::vector<int> count(2 * pd.n() + 1, 0);
    for (const auto& t : pd.tuples)
        for (int e : t) {
            if (e < 1 || e > 2 * pd.n())
                throw EdgeCountError("edge label " + std::to_string(e) +
                                     " outside 1.." + std::to_string(2 * pd.n()));
            ++count[e];
        }
    for (int e = 1; e <= 2 * pd.n(); ++e)
        if (count[e] != 2)
            throw EdgeCountError("edge label " + std::to_string(e) + " occurs " +
                                 std::to_string(count[e]) + " times, want 2");
    return pd;
}

// Ports encode (crossing, slot) as crossing*4 + slot.
inline int port_of(int crossing, int slot) { return crossing * 4 + slot; }
inline int port_crossing(int p) { return p / 4; }
inline int port_slot(int p) { return p % 4; }

// Faces of the embedded 4-valent map, as corner lists. Corner k of a
// crossing sits between slots k and k+1 (counterclockwise).
struct RegionMap {
    std::vector<std::vector<int>> regions; // corner ports in boundary order
    std::vector<int> corner_region;        // port -> region id

    size_t count() const { return regions.size(); }
};

enum Role { RoleA = 0, RoleB = 1, RoleC = 2, RoleD = 3 };

// Corner slot carrying each role, by crossing sign.
inline std::array<int, 4> role_corners(int sign) {
    // positive: d,a,b,c counterclockwise from the under-in corner
    // negative: a,d,c,b
    if (sign > 0) return {1, 2, 3, 0}; // A,B,C,D -> corner
    return {0, 3, 2, 1};
}

class Diagram {
  public:
    PDCode pd;
    int n = 0;          // crossings
    int components = 1;
    bool zero_unknot = false;

    std::vector<int> succ;       // 1-based edge successor along its component
    std::vector<int> head_port;  // 1-based: port where the edge points into
    std::vector<int> tail_port;  // 1-based: port where the edge leaves from
    std::vector<int> signs;      // per crossing, +1 / -1
    std::vector<int> component_of; // 1-based edge -> component index
    RegionMap rm;

    static Diagram unknot0() {
        Diagram d;
        d.zero_unknot = true;
        d.n = 0;
        d.components = 1;
        d.rm.regions = {{}, {}}; // two regions, no corners
        return d;
    }

    int region_count() const { return static_cast<int>(rm.regions.size()); }

    int edge_at(int port) const {
        return pd.tuples[port_crossing(port)][port_slot(port)];
    }

    // The two ports of an edge.
    std::pair<int, int> edge_ports(int e) const {
        return {tail_port[e], head_port[e]};
    }

    int other_end(int port) const {
        int e = edge_at(port);
        return head_port[e] == port ? tail_port[e] : head_port[e];
    }

    // Region ids seen from an edge: left/right relative to its direction,
    // read at the tail. Corner k sits counterclockwise of slot k.
    int left_region(int e) const {
        int p = tail_port[e];
        return rm.corner_region[p];
    }
    int right_region(int e) const {
        int p = tail_port[e];
        return rm.corner_region[port_of(port_crossing(p), (port_slot(p) + 3) % 4)];
    }

    // role -> region id at a crossing
    std::array<int, 4> corner_labels(int crossing) const {
        std::array<int, 4> out{};
        auto rc = role_corners(signs[crossing]);
        for (int r = 0; r < 4; ++r)
            out[r] = rm.corner_region[port_of(crossing, rc[r])];
        return out;
    }
};

namespace detail {

struct Pass {
    int a, b;   // the two edge labels (may coincide)
    int pa, pb; // their ports
};

} // namespace detail

inline Diagram validate(const PDCode& pd,
                        std::optional<std::vector<int>> sign_override = {}) {
    const int n = pd.n();
    const int ne = 2 * n;
    if (n == 0) throw InvalidPd("empty PD code");
    {
        std::vector<int> count(ne + 1, 0);
        for (const auto& t : pd.tuples)
            for (int e : t) {
                if (e < 1 || e > ne)
                    throw EdgeCountError("edge label out of range");
                ++count[e];
            }
        for (int e = 1; e <= ne; ++e)
            if (count[e] != 2) throw EdgeCountError("edge label multiplicity");
    }
    if (sign_override && static_cast<int>(sign_override->size()) != n)
        throw SignConflict("sign override length does not match crossing count");

    Diagram d;
    d.pd = pd;
    d.n = n;

    // Passes: one under (slots 0,2) and one over (slots 1,3) per crossing.
    // Each edge label sits in exactly two pass endpoints; the resulting
    // 2-regular multigraph's cycles are the link components.
    std::vector<detail::Pass> passes;
    passes.reserve(2 * n);
    for (int c = 0; c < n; ++c) {
        const auto& t = pd.tuples[c];
        passes.push_back({t[0], t[2], port_of(c, 0), port_of(c, 2)});
        passes.push_back({t[1], t[3], port_of(c, 1), port_of(c, 3)});
    }
    std::vector<std::array<int, 2>> incident(ne + 1, {-1, -1});
    for (int pi = 0; pi < static_cast<int>(passes.size()); ++pi) {
        for (int e : {passes[pi].a, passes[pi].b}) {
            auto& inc = incident[e];
            if (inc[0] < 0)
                inc[0] = pi;
            else if (inc[1] < 0)
                inc[1] = pi;
            else
                throw InvalidPd("edge " + std::to_string(e) +
                                " meets more than two strand passes");
        }
        if (passes[pi].a == passes[pi].b) {
            // both endpoints of a one-edge component in a single pass
            auto& inc = incident[passes[pi].a];
            if (inc[1] >= 0 && inc[1] != pi)
                throw InvalidPd("inconsistent one-edge component");
            inc[1] = pi;
        }
    }

    // Walk component cycles and check the consecutive-run labeling.
    d.succ.assign(ne + 1, 0);
    d.component_of.assign(ne + 1, -1);
    int comp = 0;
    for (int start = 1; start <= ne; ++start) {
        if (d.component_of[start] >= 0) continue;
        std::vector<int> cycle;
        int e = start, via = incident[start][0];
        while (true) {
            cycle.push_back(e);
            d.component_of[e] = comp;
            const auto& p = passes[via];
            int next = p.a == p.b ? e : (p.a == e ? p.b : p.a);
            int via_next = incident[next][0] == via ? incident[next][1]
                                                    : incident[next][0];
            e = next;
            via = via_next;
            if (e == start && via == incident[start][0]) break;
        }
        // validate the run: labels must be a consecutive block, cyclically
        // ordered (either direction)
        std::vector<int> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted.size() != cycle.size())
            throw InvalidPd("component revisits an edge label");
        int lo = sorted.front(), hi = sorted.back();
        if (hi - lo + 1 != static_cast<int>(sorted.size()))
            throw InvalidPd("component labels are not a consecutive run");
        if (cycle.size() >= 3) {
            size_t pos = std::find(cycle.begin(), cycle.end(), lo) - cycle.begin();
            size_t len = cycle.size();
            bool asc = true, desc = true;
            for (size_t k = 0; k < len; ++k) {
                int want_up = lo + static_cast<int>(k);
                int want_dn = lo + static_cast<int>((len - k) % len);
                if (cycle[(pos + k) % len] != want_up) asc = false;
                if (cycle[(pos + k) % len] != want_dn) desc = false;
            }
            if (!asc && !desc)
                throw InvalidPd("component labels are not cyclically consecutive");
        }
        for (int x = lo; x < hi; ++x) d.succ[x] = x + 1;
        d.succ[hi] = lo;
        ++comp;
    }
    d.components = comp;

    // Under-strand continuity.
    for (int c = 0; c < n; ++c)
        if (d.succ[pd.tuples[c][0]] != pd.tuples[c][2])
            throw InvalidPd("under-strand exit is not the successor of its entry");

    // Orientation inference. Under passes pin edge heads/tails; over passes
    // are resolved from the successor relation where unambiguous and by
    // propagation of pinned edge ends otherwise.
    d.head_port.assign(ne + 1, -1);
    d.tail_port.assign(ne + 1, -1);
    auto pin_head = [&](int e, int port) {
        if (d.head_port[e] == port) return;
        if (d.head_port[e] != -1 || d.tail_port[e] == port)
            throw SignConflict("conflicting direction for edge " + std::to_string(e));
        d.head_port[e] = port;
    };
    auto pin_tail = [&](int e, int port) {
        if (d.tail_port[e] == port) return;
        if (d.tail_port[e] != -1 || d.head_port[e] == port)
            throw SignConflict("conflicting direction for edge " + std::to_string(e));
        d.tail_port[e] = port;
    };
    for (int c = 0; c < n; ++c) {
        pin_head(pd.tuples[c][0], port_of(c, 0));
        pin_tail(pd.tuples[c][2], port_of(c, 2));
    }

    // over_in[c]: 1 or 3, or 0 while undecided
    std::vector<int> over_in(n, 0);
    auto resolve = [&](int c, int slot_in) {
        int e_in = pd.tuples[c][slot_in];
        int e_out = pd.tuples[c][slot_in == 1 ? 3 : 1];
        if (d.succ[e_in] != e_out)
            throw SignConflict("over-strand direction inconsistent with edge numbering");
        over_in[c] = slot_in;
        pin_head(e_in, port_of(c, slot_in));
        pin_tail(e_out, port_of(c, slot_in == 1 ? 3 : 1));
    };
    for (int c = 0; c < n; ++c) {
        int e1 = pd.tuples[c][1], e3 = pd.tuples[c][3];
        bool can1 = d.succ[e1] == e3;
        bool can3 = d.succ[e3] == e1;
        if (!can1 && !can3)
            throw InvalidPd("over-strand edges are not consecutive at crossing " +
                            std::to_string(c));
        if (can1 && !can3) resolve(c, 1);
        if (can3 && !can1) resolve(c, 3);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < n; ++c) {
            if (over_in[c]) continue;
            int e1 = pd.tuples[c][1], e3 = pd.tuples[c][3];
            int p1 = port_of(c, 1), p3 = port_of(c, 3);
            if (d.head_port[e1] == p1 || d.tail_port[e3] == p3) {
                resolve(c, 1);
                changed = true;
            } else if (d.head_port[e3] == p3 || d.tail_port[e1] == p1) {
                resolve(c, 3);
                changed = true;
            } else if (d.tail_port[e1] >= 0 && d.tail_port[e1] != p1 &&
                       d.head_port[e1] >= 0 && d.head_port[e1] != p1) {
                throw SignConflict("edge " + std::to_string(e1) + " over-used");
            } else if (d.head_port[e1] >= 0 && d.head_port[e1] != p1) {
                // e1's head is elsewhere, so here it must be a tail
                resolve(c, 3);
                changed = true;
            } else if (d.head_port[e3] >= 0 && d.head_port[e3] != p3) {
                resolve(c, 1);
                changed = true;
            } else if (d.tail_port[e1] >= 0 && d.tail_port[e1] != p1) {
                resolve(c, 1);
                changed = true;
            } else if (d.tail_port[e3] >= 0 && d.tail_port[e3] != p3) {
                resolve(c, 3);
                changed = true;
            }
        }
        if (!changed && sign_override) {
            for (int c = 0; c < n; ++c) {
                if (over_in[c]) continue;
                int want = (*sign_override)[c];
                resolve(c, want > 0 ? 3 : 1); // positive crossing: over-in at slot 3
                changed = true;
                break;
            }
        }
    }
    for (int c = 0; c < n; ++c)
        if (!over_in[c]) {
            std::string who;
            for (int k = 0; k < n; ++k)
                if (!over_in[k]) who += (who.empty() ? "" : ",") + std::to_string(k);
            throw OrientationAmbiguous(
                "over-strand direction undetermined at crossings {" + who +
                "}; supply signs");
        }

    d.signs.resize(n);
    for (int c = 0; c < n; ++c) d.signs[c] = over_in[c] == 3 ? 1 : -1;
    if (sign_override)
        for (int c = 0; c < n; ++c)
            if ((*sign_override)[c] != d.signs[c])
                throw SignConflict("override sign at crossing " + std::to_string(c) +
                                   " contradicts inference");

    // Connectivity of the underlying 4-valent graph.
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::vector<std::array<int, 2>> ends(ne + 1, {-1, -1});
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < 4; ++s) {
                auto& e = ends[pd.tuples[c][s]];
                (e[0] < 0 ? e[0] : e[1]) = c;
            }
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                auto& e = ends[pd.tuples[c][s]];
                for (int to : {e[0], e[1]})
                    if (to >= 0 && !seen[to]) {
                        seen[to] = 1;
                        stack.push_back(to);
                    }
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Disconnected("diagram splits into disjoint pieces");
    }

    // Faces: orbits of arriving darts. Arriving at slot s, the face on the
    // left holds corner s-1; the walk leaves along slot s-1.
    {
        std::vector<int> occ_port(ne + 1, -1);
        std::vector<int> other(4 * n, -1);
        for (int c = 0; c < n; ++c)
            for (int s = 0; s < 4; ++s) {
                int e = pd.tuples[c][s];
                int p = port_of(c, s);
                if (occ_port[e] < 0) {
                    occ_port[e] = p;
                } else {
                    other[p] = occ_port[e];
                    other[occ_port[e]] = p;
                }
            }
        for (int p = 0; p < 4 * n; ++p)
            if (other[p] < 0) {
                // the edge is a loop with both ends at one crossing and was
                // paired above only if its ports differ; self-pairing is fine
                int e = d.pd.tuples[port_crossing(p)][port_slot(p)];
                (void)e;
                throw InvalidPd("unpaired edge end");
            }

        d.rm.corner_region.assign(4 * n, -1);
        std::vector<char> used(4 * n, 0);
        std::vector<std::vector<int>> faces;
        for (int p0 = 0; p0 < 4 * n; ++p0) {
            if (used[p0]) continue;
            std::vector<int> corners;
            int p = p0;
            do {
                used[p] = 1;
                int c = port_crossing(p), s = port_slot(p);
                corners.push_back(port_of(c, (s + 3) % 4));
                p = other[port_of(c, (s + 3) % 4)];
            } while (p != p0);
            // rotate so the smallest corner comes first
            size_t mi = std::min_element(corners.begin(), corners.end()) - corners.begin();
            std::rotate(corners.begin(), corners.begin() + mi, corners.end());
            faces.push_back(std::move(corners));
        }
        std::sort(faces.begin(), faces.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        if (static_cast<int>(faces.size()) != n + 2)
            throw NonPlanar("face count " + std::to_string(faces.size()) +
                            " differs from crossings+2 = " + std::to_string(n + 2));
        for (size_t f = 0; f < faces.size(); ++f)
            for (int corner : faces[f]) d.rm.corner_region[corner] = static_cast<int>(f);
        d.rm.regions = std::move(faces);
    }

    return d;
}

inline const RegionMap& regions(const Diagram& d) { return d.rm; }

inline int crossing_sign(const Diagram& d, int crossing) {
    return d.signs[crossing];
}

// Over/under swapped at every crossing; the tuple is re-read starting from
// the old over-strand entry. Plane orientation is preserved, signs flip.
inline Diagram mirror(const Diagram& d) {
    if (d.zero_unknot) return d;
    PDCode out;
    std::vector<int> want_signs(d.n);
    for (int c = 0; c < d.n; ++c) {
        const auto& t = d.pd.tuples[c];
        int r = d.signs[c] > 0 ? 3 : 1; // old over-in slot becomes new slot 0
        out.tuples.push_back({t[r], t[(r + 1) % 4], t[(r + 2) % 4], t[(r + 3) % 4]});
        want_signs[c] = -d.signs[c];
    }
    return validate(out, want_signs);
}

// All component orientations reversed: tuples rotate by two and labels are
// renumbered to ascend along the new directions.
inline Diagram reverse(const Diagram& d) {
    if (d.zero_unknot) return d;
    const int ne = 2 * d.n;
    std::vector<int> lo(d.components, ne + 1), hi(d.components, 0);
    for (int e = 1; e <= ne; ++e) {
        int c = d.component_of[e];
        lo[c] = std::min(lo[c], e);
        hi[c] = std::max(hi[c], e);
    }
    auto relabel = [&](int e) { return lo[d.component_of[e]] + hi[d.component_of[e]] - e; };
    PDCode out;
    std::vector<int> want_signs(d.n);
    for (int c = 0; c < d.n; ++c) {
        const auto& t = d.pd.tuples[c];
        out.tuples.push_back({relabel(t[2]), relabel(t[3]), relabel(t[0]), relabel(t[1])});
        want_signs[c] = d.signs[c];
    }
    return validate(out, want_signs);
}

// Label- and ordering-independent form for isomorphism checks: minimize the
// flattened tuple list over all component orders and starting edges.
inline std::vector<int> canonical_key(const Diagram& d) {
    if (d.zero_unknot) return {0};
    const int ne = 2 * d.n;
    std::vector<std::vector<int>> comp_edges(d.components);
    for (int e = 1; e <= ne; ++e) comp_edges[d.component_of[e]].push_back(e);
    for (auto& v : comp_edges) std::sort(v.begin(), v.end());

    std::vector<int> comp_order(d.components);
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end());

    std::vector<int> best;
    do {
        // choose a starting edge per component; labels assigned along succ
        std::vector<size_t> pick(d.components, 0);
        for (;;) {
            std::vector<int> newlabel(ne + 1, 0);
            int next = 1;
            for (int ci : comp_order) {
                int start = comp_edges[ci][pick[ci]];
                int e = start;
                do {
                    newlabel[e] = next++;
                    e = d.succ[e];
                } while (e != start);
            }
            std::vector<std::array<int, 4>> tuples;
            for (int c = 0; c < d.n; ++c) {
                const auto& t = d.pd.tuples[c];
                tuples.push_back({newlabel[t[0]], newlabel[t[1]], newlabel[t[2]],
                                  newlabel[t[3]]});
            }
            std::vector<size_t> order(d.n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                return tuples[a][0] < tuples[b][0];
            });
            std::vector<int> flat;
            for (size_t i : order)
                for (int v : tuples[i]) flat.push_back(v);
            for (size_t i : order) flat.push_back(d.signs[i]);
            if (best.empty() || flat < best) best = flat;

            // advance the pick vector
            int ci = 0;
            for (; ci < d.components; ++ci) {
                if (++pick[ci] < comp_edges[ci].size()) break;
                pick[ci] = 0;
            }
            if (ci == d.components) break;
        }
    } while (std::next_permutation(comp_order.begin(), comp_order.end()));
    return best;
}

inline bool isomorphic(const Diagram& a, const Diagram& b) {
    if (a.zero_unknot || b.zero_unknot) return a.zero_unknot == b.zero_unknot;
    return canonical_key(a) == canonical_key(b);
}

} // namespace tridle
