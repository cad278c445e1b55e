#pragma once

// Brute-force diagram backend. Diagrams are built crossing by crossing from
// twist words, with no arithmetic shared with the symbolic closure formulas,
// so bracket/Jones/Goeritz values give an independent check on them.
//
// Each crossing owns four slots in counterclockwise order
//   0 = SW, 1 = SE, 2 = NE, 3 = NW,
// with strand pairs (0,2) and (1,3). The over flag says which diagonal
// passes over. The Kauffman A-smoothing (join the quadrants swept by
// turning the over strand counterclockwise) pairs the slots as
//   over (0,2):  A = {0-3, 1-2},  B = {0-1, 2-3}
//   over (1,3):  A = {0-1, 2-3},  B = {0-3, 1-2}

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglecalc/laurent.hpp"
#include "tanglecalc/rational.hpp"
#include "tanglecalc/tangle.hpp"

namespace tanglecalc {

constexpr int kDefaultCrossingCap = 16;

struct PlanarDiagram {
    std::vector<bool> over13;                // per crossing: true if strand (1,3) is over
    std::vector<std::pair<int, int>> arcs;   // pairs of slot ids (4*crossing + slot)
    int free_loops = 0;                      // crossing-free circles

    int crossing_count() const { return static_cast<int>(over13.size()); }

    std::vector<int> arc_partner() const {
        std::vector<int> mate(4 * crossing_count(), -1);
        for (auto [a, b] : arcs) {
            mate[a] = b;
            mate[b] = a;
        }
        return mate;
    }

    int component_count() const {
        int n = crossing_count();
        std::vector<int> mate = arc_partner();
        std::vector<bool> seen(4 * n, false);
        int comps = free_loops;
        for (int s0 = 0; s0 < 4 * n; ++s0) {
            if (seen[s0]) continue;
            ++comps;
            int s = s0;
            do {
                seen[s] = true;
                int exit = s ^ 2;
                seen[exit] = true;
                s = mate[exit];
            } while (s != s0);
        }
        return comps;
    }

    PlanarDiagram mirrored() const {
        PlanarDiagram m = *this;
        m.over13.flip();
        return m;
    }

    std::string edge_list() const {
        static const char* names[4] = {"sw", "se", "ne", "nw"};
        std::string out;
        for (int c = 0; c < crossing_count(); ++c)
            out += "crossing " + std::to_string(c) + " over=" + (over13[c] ? "se-nw" : "sw-ne") + "\n";
        auto slot_name = [&](int s) {
            return std::to_string(s / 4) + "." + names[s % 4];
        };
        for (auto [a, b] : arcs) out += "arc " + slot_name(a) + " " + slot_name(b) + "\n";
        for (int i = 0; i < free_loops; ++i) out += "loop\n";
        return out;
    }
};

// Incremental construction of a tangle diagram with open NW/NE/SW/SE ends.
// East twists realize h, south twists realize v; a positive twist puts the
// (1,3) diagonal on top.
class TangleDiagramBuilder {
public:
    enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

    static TangleDiagramBuilder horizontal() {  // T(0)
        TangleDiagramBuilder b;
        b.link_corners(NW, NE);
        b.link_corners(SW, SE);
        return b;
    }

    static TangleDiagramBuilder vertical() {  // T(inf)
        TangleDiagramBuilder b;
        b.link_corners(NW, SW);
        b.link_corners(NE, SE);
        return b;
    }

    void twist_east(int sign) {
        int x = new_crossing(sign > 0);
        attach(NE, x + 3);
        attach(SE, x + 0);
        end_[NE] = {true, x + 2};
        end_[SE] = {true, x + 1};
    }

    void twist_south(int sign) {
        int x = new_crossing(sign > 0);
        attach(SW, x + 3);
        attach(SE, x + 2);
        end_[SW] = {true, x + 0};
        end_[SE] = {true, x + 1};
    }

    // Tangle sum: rhs is placed to the east; NE-NW and SE-SW ends join.
    void append(const TangleDiagramBuilder& rhs) {
        int off = 4 * d_.crossing_count();
        for (bool o : rhs.d_.over13) d_.over13.push_back(o);
        for (auto [a, b] : rhs.d_.arcs) d_.arcs.emplace_back(a + off, b + off);
        d_.free_loops += rhs.d_.free_loops;

        // Node space: 0..3 = this side's corners, 4..7 = rhs corners.
        auto node_end = [&](int n) -> End {
            if (n < 4) return end_[n];
            End e = rhs.end_[n - 4];
            if (e.is_slot) e.v += off;
            else e.v += 4;
            return e;
        };
        // Junctions: my NE <-> rhs NW, my SE <-> rhs SW.
        auto junction_partner = [](int n) -> int {
            switch (n) {
                case NE: return 4 + NW;
                case SE: return 4 + SW;
                case 4 + NW: return NE;
                case 4 + SW: return SE;
            }
            return -1;
        };
        const std::array<int, 4> finals = {NW, SW, 4 + NE, 4 + SE};
        const std::array<int, 4> final_corner = {NW, SW, NE, SE};
        std::array<bool, 8> is_final{};
        for (int f : finals) is_final[f] = true;

        std::set<int> touched;  // junction nodes consumed by a walk
        std::array<End, 4> result{};
        std::array<bool, 4> resolved{};

        for (int i = 0; i < 4; ++i) {
            if (resolved[i]) continue;
            End e = node_end(finals[i]);
            for (;;) {
                if (e.is_slot) break;
                int n = e.v;
                if (is_final[n]) break;
                touched.insert(n);
                int p = junction_partner(n);
                touched.insert(p);
                e = node_end(p);
            }
            if (e.is_slot) {
                result[i] = e;
                resolved[i] = true;
            } else {
                int j = 0;
                while (finals[j] != e.v) ++j;
                result[i] = {false, final_corner[j]};
                result[j] = {false, final_corner[i]};
                resolved[i] = resolved[j] = true;
            }
        }

        // Remaining junction chains run slot-to-slot or close into loops.
        for (int n : {static_cast<int>(NE), static_cast<int>(SE)}) {
            if (touched.count(n)) continue;
            touched.insert(n);
            int p = junction_partner(n);
            touched.insert(p);
            End left = node_end(n);
            End right = node_end(p);
            bool loop = false;
            while (!right.is_slot) {
                int q = right.v;  // another junction node on the same side as p
                if (touched.count(q)) { loop = true; break; }
                touched.insert(q);
                int pq = junction_partner(q);
                touched.insert(pq);
                right = node_end(pq);
            }
            while (!loop && !left.is_slot) {
                int q = left.v;
                if (touched.count(q)) { loop = true; break; }
                touched.insert(q);
                int pq = junction_partner(q);
                touched.insert(pq);
                left = node_end(pq);
            }
            if (loop) ++d_.free_loops;
            else d_.arcs.emplace_back(left.v, right.v);
        }

        for (int i = 0; i < 4; ++i) end_[final_corner[i]] = result[i];
    }

    PlanarDiagram close_numerator() const {
        TangleDiagramBuilder b = *this;
        b.join(NW, NE);
        b.join(SW, SE);
        return b.d_;
    }

    const PlanarDiagram& partial() const { return d_; }

private:
    struct End {
        bool is_slot = false;
        int v = 0;  // slot id, or corner index when the strand is crossing-free
    };

    PlanarDiagram d_;
    std::array<End, 4> end_{};

    void link_corners(int a, int b) {
        end_[a] = {false, b};
        end_[b] = {false, a};
    }

    int new_crossing(bool over13) {
        d_.over13.push_back(over13);
        return 4 * (d_.crossing_count() - 1);
    }

    // Route the strand dangling at corner c into the given slot. The caller
    // re-assigns end_[c] afterwards.
    void attach(int c, int slot) {
        if (end_[c].is_slot) d_.arcs.emplace_back(end_[c].v, slot);
        else end_[end_[c].v] = {true, slot};
    }

    void join(int a, int b) {
        End ea = end_[a], eb = end_[b];
        if (ea.is_slot && eb.is_slot) {
            d_.arcs.emplace_back(ea.v, eb.v);
        } else if (!ea.is_slot && ea.v == b) {
            ++d_.free_loops;
        } else if (!ea.is_slot && eb.is_slot) {
            end_[ea.v] = eb;
        } else if (ea.is_slot && !eb.is_slot) {
            end_[eb.v] = ea;
        } else {
            end_[ea.v] = {false, eb.v};
            end_[eb.v] = {false, ea.v};
        }
    }
};

// Reflection-free form of a twist word. Conjugation by r exchanges h and v
// (r h^a r = v^a), so each move flips kind once per later-applied r and the
// leading reflections collapse onto the start tangle. The twists are listed
// in application order (first twist first); no crossing is spent on r.
struct ReflectionFreeWord {
    bool start_horizontal;  // T(0) start if true, T(inf) otherwise
    std::vector<std::pair<MoveKind, Int>> twists;
};

inline ReflectionFreeWord reflection_free_form(const TwistWord& w) {
    int r_total = 0;
    for (const auto& m : w.moves)
        if (m.kind == MoveKind::reflect) ++r_total;
    ReflectionFreeWord out;
    out.start_horizontal = r_total % 2 == 1;
    // Application order is right to left; r's applied after a move are the
    // r's standing to its left in the word.
    int r_before = 0;  // reflections left of the current move, in word order
    std::vector<std::pair<MoveKind, Int>> converted;
    for (const auto& m : w.moves) {
        if (m.kind == MoveKind::reflect) {
            ++r_before;
            continue;
        }
        MoveKind k = m.kind;
        if (r_before % 2 == 1)
            k = (k == MoveKind::horizontal) ? MoveKind::vertical : MoveKind::horizontal;
        converted.emplace_back(k, m.count);
    }
    out.twists.assign(converted.rbegin(), converted.rend());
    return out;
}

// One crossing per half-twist.
inline TangleDiagramBuilder builder_from_twist_word(const TwistWord& w,
                                                    int cap = kDefaultCrossingCap) {
    Int total = 0;
    for (const auto& m : w.moves)
        if (m.kind != MoveKind::reflect) total += m.count < 0 ? -m.count : m.count;
    if (total > cap) throw std::runtime_error("crossing cap exceeded");

    ReflectionFreeWord form = reflection_free_form(w);
    TangleDiagramBuilder b = form.start_horizontal ? TangleDiagramBuilder::horizontal()
                                                   : TangleDiagramBuilder::vertical();
    for (auto [k, count] : form.twists) {
        int sign = count < 0 ? -1 : 1;
        for (Int i = 0; i < (count < 0 ? -count : count); ++i) {
            if (k == MoveKind::horizontal) b.twist_east(sign);
            else b.twist_south(sign);
        }
    }
    return b;
}

inline PlanarDiagram diagram_from_twist_word(const TwistWord& w,
                                             int cap = kDefaultCrossingCap) {
    return builder_from_twist_word(w, cap).close_numerator();
}

inline PlanarDiagram diagram_of_closure(const RationalTangle& t,
                                        int cap = kDefaultCrossingCap) {
    return diagram_from_twist_word(tangle_to_word(t), cap);
}

// Diagram of N(t + T(m)): the integral addend is m extra east twists.
inline PlanarDiagram diagram_of_sum_closure(const RationalTangle& t, Int m,
                                            int cap = kDefaultCrossingCap) {
    TangleDiagramBuilder b = builder_from_twist_word(tangle_to_word(t), cap);
    if (b.partial().crossing_count() + (m < 0 ? -m : m) > cap)
        throw std::runtime_error("crossing cap exceeded");
    int sign = m < 0 ? -1 : 1;
    for (Int i = 0; i < (m < 0 ? -m : m); ++i) b.twist_east(sign);
    return b.close_numerator();
}

// Connected sum of closed diagrams: cut one arc in each and splice.
inline PlanarDiagram splice_connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    if (d1.arcs.empty() && d1.free_loops == 1) return d2;
    if (d2.arcs.empty() && d2.free_loops == 1) return d1;
    if (d1.arcs.empty() || d2.arcs.empty())
        throw std::invalid_argument("splice needs diagrams with arcs");
    PlanarDiagram out = d1;
    int off = 4 * d1.crossing_count();
    for (bool o : d2.over13) out.over13.push_back(o);
    for (std::size_t i = 1; i < d2.arcs.size(); ++i)
        out.arcs.emplace_back(d2.arcs[i].first + off, d2.arcs[i].second + off);
    out.free_loops += d2.free_loops;
    auto [x, y] = out.arcs[0];
    auto [u, v] = d2.arcs[0];
    out.arcs[0] = {x, u + off};
    out.arcs.emplace_back(y, v + off);
    return out;
}

namespace detail {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace detail

// Kauffman bracket by the full state sum: 2^n smoothings, loop count by
// union-find, <D> = sum A^(a-b) d^(loops-1) with d = -A^2 - A^-2.
inline LaurentPolynomial kauffman_bracket(const PlanarDiagram& d,
                                          int cap = kDefaultCrossingCap) {
    int n = d.crossing_count();
    if (n > cap) throw std::runtime_error("crossing cap exceeded");
    if (n == 0 && d.free_loops == 0)
        throw std::invalid_argument("bracket of the empty diagram");

    LaurentPolynomial delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    std::vector<LaurentPolynomial> delta_pow(2 * n + d.free_loops + 2);
    delta_pow[0] = LaurentPolynomial::one();
    for (std::size_t k = 1; k < delta_pow.size(); ++k)
        delta_pow[k] = delta_pow[k - 1] * delta;

    LaurentPolynomial bracket;
    const std::uint32_t states = 1u << n;
    for (std::uint32_t state = 0; state < states; ++state) {
        detail::DisjointSet dsu(4 * n);
        int loops = 4 * n;
        for (auto [a, b] : d.arcs)
            if (dsu.unite(a, b)) --loops;
        for (int c = 0; c < n; ++c) {
            bool pick_a = (state >> c & 1) == 0;
            bool join_adjacent = d.over13[c] ? pick_a : !pick_a;  // {0-1, 2-3} vs {0-3, 1-2}
            int x = 4 * c;
            if (join_adjacent) {
                if (dsu.unite(x + 0, x + 1)) --loops;
                if (dsu.unite(x + 2, x + 3)) --loops;
            } else {
                if (dsu.unite(x + 0, x + 3)) --loops;
                if (dsu.unite(x + 1, x + 2)) --loops;
            }
        }
        int a_count = n - __builtin_popcount(state);
        int exponent = a_count - (n - a_count);
        bracket = bracket + LaurentPolynomial::monomial(1, exponent) *
                                delta_pow[loops + d.free_loops - 1];
    }
    return bracket;
}

namespace detail {

inline const std::array<std::array<int, 2>, 4> kSlotPos = {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};

struct CrossingPasses {
    std::array<int, 2> dir02{}, dir13{};  // travel direction of each strand
    int comp02 = -1, comp13 = -1;
};

struct Orientations {
    std::vector<CrossingPasses> passes;
    int components = 0;
};

inline Orientations trace_orientations(const PlanarDiagram& d) {
    int n = d.crossing_count();
    Orientations o;
    o.passes.resize(n);
    std::vector<int> mate = d.arc_partner();
    std::vector<bool> seen(4 * n, false);
    for (int s0 = 0; s0 < 4 * n; ++s0) {
        if (seen[s0]) continue;
        int comp = o.components++;
        int s = s0;
        do {
            seen[s] = true;
            int exit = s ^ 2;
            seen[exit] = true;
            int c = s / 4;
            std::array<int, 2> dir = {kSlotPos[exit % 4][0] - kSlotPos[s % 4][0],
                                      kSlotPos[exit % 4][1] - kSlotPos[s % 4][1]};
            if (s % 4 == 0 || s % 4 == 2) {
                o.passes[c].dir02 = dir;
                o.passes[c].comp02 = comp;
            } else {
                o.passes[c].dir13 = dir;
                o.passes[c].comp13 = comp;
            }
            s = mate[exit];
        } while (s != s0);
    }
    return o;
}

inline int writhe(const PlanarDiagram& d, const Orientations& o, std::uint32_t flips) {
    int w = 0;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& p = o.passes[c];
        auto over = d.over13[c] ? p.dir13 : p.dir02;
        auto under = d.over13[c] ? p.dir02 : p.dir13;
        int so = (flips >> (d.over13[c] ? p.comp13 : p.comp02) & 1) ? -1 : 1;
        int su = (flips >> (d.over13[c] ? p.comp02 : p.comp13) & 1) ? -1 : 1;
        int det = over[0] * under[1] - over[1] * under[0];
        w += so * su * (det > 0 ? 1 : -1);
    }
    return w;
}

// (-A)^(-3w) <D>, re-expressed in x = A^-2 = t^(1/2).
inline LaurentPolynomial normalize_bracket(const LaurentPolynomial& bracket, int w) {
    LaurentPolynomial v = bracket * LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
    LaurentPolynomial out;
    for (auto [e, c] : v.terms) {
        if (e % 2 != 0) throw std::logic_error("odd exponent in normalized bracket");
        out.add_term(-e / 2, c);
    }
    return out;
}

}  // namespace detail

// Jones polynomial in x = t^(1/2), for the orientation produced by the
// deterministic strand traversal.
inline LaurentPolynomial jones(const PlanarDiagram& d, int cap = kDefaultCrossingCap) {
    auto o = detail::trace_orientations(d);
    return detail::normalize_bracket(kauffman_bracket(d, cap), detail::writhe(d, o, 0));
}

// Jones values over all component orientations (singleton for knots); two
// diagrams present the same unoriented link only if these sets agree.
inline std::set<LaurentPolynomial> jones_values(const PlanarDiagram& d,
                                                int cap = kDefaultCrossingCap) {
    auto o = detail::trace_orientations(d);
    LaurentPolynomial bracket = kauffman_bracket(d, cap);
    std::set<LaurentPolynomial> out;
    std::uint32_t max_flip = o.components > 0 ? 1u << (o.components - 1) : 1u;
    for (std::uint32_t flips = 0; flips < max_flip; ++flips)
        out.insert(detail::normalize_bracket(bracket, detail::writhe(d, o, flips << 1)));
    return out;
}

inline std::set<LaurentPolynomial> mirrored(const std::set<LaurentPolynomial>& s) {
    std::set<LaurentPolynomial> out;
    for (const auto& p : s) out.insert(p.exponent_negated());
    return out;
}

// |det| of the reduced Goeritz matrix of a checkerboard coloring.
inline Int goeritz_determinant(const PlanarDiagram& d) {
    int n = d.crossing_count();
    if (n == 0) {
        if (d.free_loops == 1) return 1;
        throw std::invalid_argument("Goeritz matrix needs a connected diagram");
    }
    if (d.free_loops > 0)
        throw std::invalid_argument("Goeritz matrix needs a connected diagram");
    {
        detail::DisjointSet dsu(n);
        int parts = n;
        for (auto [a, b] : d.arcs)
            if (dsu.unite(a / 4, b / 4)) --parts;
        if (parts != 1) throw std::invalid_argument("Goeritz matrix needs a connected diagram");
    }

    // Faces as orbits of darts: a dart arriving at slot s continues from
    // slot s-1 (clockwise); record the face seen from each arrival slot.
    std::vector<int> mate = d.arc_partner();
    std::vector<int> face_at_arrival(4 * n, -1);
    int faces = 0;
    for (int s0 = 0; s0 < 4 * n; ++s0) {
        if (face_at_arrival[s0] >= 0) continue;
        int f = faces++;
        int s = s0;
        do {
            face_at_arrival[s] = f;
            int turn = (s & ~3) + ((s % 4) + 3) % 4;
            s = mate[turn];
        } while (s != s0);
    }
    if (faces != n + 2) throw std::logic_error("face count violates Euler's formula");

    // Checkerboard coloring: faces on the two sides of an arc differ.
    std::vector<int> color(faces, -1);
    std::vector<std::vector<int>> adjacency(faces);
    for (auto [a, b] : d.arcs) {
        adjacency[face_at_arrival[a]].push_back(face_at_arrival[b]);
        adjacency[face_at_arrival[b]].push_back(face_at_arrival[a]);
    }
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adjacency[f]) {
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                throw std::logic_error("diagram is not checkerboard colorable");
            }
        }
    }

    // Quadrant between slots s and s+1 lies in the face arriving at s+1.
    auto quadrant_face = [&](int c, int s) { return face_at_arrival[4 * c + (s + 1) % 4]; };

    std::vector<int> white_index(faces, -1);
    int whites = 0;
    for (int f = 0; f < faces; ++f)
        if (color[f] == 0) white_index[f] = whites++;

    std::vector<std::vector<Int>> g(whites, std::vector<Int>(whites, 0));
    for (int c = 0; c < n; ++c) {
        int f_south = quadrant_face(c, 0);
        bool white_pair_ns = color[f_south] == 0;
        int fa = white_pair_ns ? quadrant_face(c, 0) : quadrant_face(c, 1);
        int fb = white_pair_ns ? quadrant_face(c, 2) : quadrant_face(c, 3);
        if (fa == fb) continue;
        // A-quadrants are {N,S} for over (0,2) and {E,W} for over (1,3).
        bool white_is_a = d.over13[c] ? !white_pair_ns : white_pair_ns;
        Int eta = white_is_a ? 1 : -1;
        int i = white_index[fa], j = white_index[fb];
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }

    // Strike the first row and column, then a fraction-free determinant.
    int k = whites - 1;
    if (k <= 0) return 1;
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = g[i + 1][j + 1];
    __int128 prev = 1;
    int sign = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (a[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int row = col + 1; row < k; ++row) {
            for (int j = col + 1; j < k; ++j)
                a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
            a[row][col] = 0;
        }
        prev = a[col][col];
    }
    __int128 det = a[k - 1][k - 1] * sign;
    if (det < 0) det = -det;
    return static_cast<Int>(det);
}

}  // namespace tanglecalc
