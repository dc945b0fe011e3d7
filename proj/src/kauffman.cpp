#include "mont/kauffman.hpp"

#include <array>
#include <numeric>
#include <vector>

#include "mont/quantum.hpp"

namespace mont {
namespace {

// Corner indices of a crossing box.
enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

constexpr Corner opposite(Corner c) {
    switch (c) {
        case NW: return SE;
        case NE: return SW;
        case SW: return NE;
        default: return NW;
    }
}

struct Crossing {
    std::array<int, 4> port;  // arc id per corner
    int over_diag;            // 0: NW-SE strand over, 1: NE-SW strand over
};

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Diagram {
    std::vector<Crossing> crossings;
    UnionFind arcs;
};

struct TangleEnds {
    int nw, ne, sw, se;
};

// Positive horizontal twist: the NE-SW diagonal passes over. This convention
// was fixed by matching the bracket against the state sum on the smallest
// family instances.
constexpr int kPositiveTwistOverDiag = 0;

TangleEnds zero_tangle(Diagram& d) {
    TangleEnds t;
    t.nw = t.ne = d.arcs.make();
    t.sw = t.se = d.arcs.make();
    return t;
}

void add_horizontal_twists(Diagram& d, TangleEnds& t, long long count) {
    const long long n = count < 0 ? -count : count;
    const int over = count >= 0 ? kPositiveTwistOverDiag : 1 - kPositiveTwistOverDiag;
    for (long long i = 0; i < n; ++i) {
        Crossing c;
        c.over_diag = over;
        c.port[NW] = t.ne;
        c.port[SW] = t.se;
        c.port[NE] = d.arcs.make();
        c.port[SE] = d.arcs.make();
        t.ne = c.port[NE];
        t.se = c.port[SE];
        d.crossings.push_back(c);
    }
}

// Rotate the whole partial tangle a quarter turn counterclockwise. Crossing
// signs are preserved; the over-diagonal label swaps with the relabeling.
void rotate_ccw(Diagram& d, TangleEnds& t, size_t first_crossing) {
    for (size_t i = first_crossing; i < d.crossings.size(); ++i) {
        Crossing& c = d.crossings[i];
        Crossing old = c;
        c.port[NW] = old.port[NE];
        c.port[SW] = old.port[NW];
        c.port[SE] = old.port[SW];
        c.port[NE] = old.port[SE];
        c.over_diag = 1 - c.over_diag;
    }
    TangleEnds old = t;
    t.nw = old.ne;
    t.sw = old.nw;
    t.se = old.sw;
    t.ne = old.se;
}

// Tangle with fraction [x0,...,xL]: built inside out, one twist region plus a
// quarter turn per entry.
TangleEnds build_tangle(Diagram& d, const ContinuedFraction& cf) {
    const size_t first = d.crossings.size();
    TangleEnds t = zero_tangle(d);
    for (int i = cf.last_index(); i >= 0; --i) {
        add_horizontal_twists(d, t, -cf.entries[i]);
        rotate_ccw(d, t, first);
    }
    return t;
}

Diagram build_diagram(const MontesinosKnot& k, std::array<TangleEnds, 3>& ends) {
    Diagram d;
    ends[0] = build_tangle(d, k.r);
    ends[1] = build_tangle(d, k.s);
    ends[2] = build_tangle(d, k.t);
    for (int i = 0; i < 3; ++i) {
        const TangleEnds& a = ends[i];
        const TangleEnds& b = ends[(i + 1) % 3];
        d.arcs.unite(a.ne, b.nw);
        d.arcs.unite(a.se, b.sw);
    }
    return d;
}

int count_components(Diagram& d) {
    // Union arcs along the strands through every crossing.
    UnionFind uf;
    for (size_t i = 0; i < d.arcs.parent.size(); ++i) uf.make();
    for (const Crossing& c : d.crossings) {
        uf.unite(d.arcs.find(c.port[NW]), d.arcs.find(c.port[SE]));
        uf.unite(d.arcs.find(c.port[NE]), d.arcs.find(c.port[SW]));
    }
    std::vector<char> seen(uf.parent.size(), 0);
    int n = 0;
    for (size_t i = 0; i < uf.parent.size(); ++i) {
        if (d.arcs.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
        int root = uf.find(static_cast<int>(i));
        if (!seen[root]) {
            seen[root] = 1;
            ++n;
        }
    }
    return n;
}

constexpr std::array<std::array<int, 2>, 4> kCornerPos = {{{-1, 1}, {1, 1}, {-1, -1}, {1, -1}}};

long long diagram_writhe(Diagram& d) {
    // Walk the single component to orient every strand passage, then sum
    // crossing signs.
    const size_t nc = d.crossings.size();
    // port lookup: arc class -> up to two (crossing, corner)
    std::vector<std::vector<std::pair<int, Corner>>> by_arc(d.arcs.parent.size());
    for (size_t i = 0; i < nc; ++i)
        for (int c = 0; c < 4; ++c)
            by_arc[d.arcs.find(d.crossings[i].port[c])].push_back(
                {static_cast<int>(i), static_cast<Corner>(c)});

    // entry_dir[i][corner] = true when the passage through crossing i enters at
    // that corner (and exits at the opposite one)
    std::vector<std::array<char, 4>> entered(nc, {0, 0, 0, 0});
    std::vector<std::array<char, 4>> visited(nc, {0, 0, 0, 0});
    int cur_cross = 0;
    Corner cur_in = NW;
    size_t steps = 0;
    while (steps < 2 * nc) {
        entered[cur_cross][cur_in] = 1;
        visited[cur_cross][cur_in] = 1;
        Corner out = opposite(cur_in);
        visited[cur_cross][out] = 1;
        ++steps;
        // follow the arc leaving at `out`
        int arc = d.arcs.find(d.crossings[cur_cross].port[out]);
        std::pair<int, Corner> next{-1, NW};
        for (auto& pc : by_arc[arc])
            if (pc.first != cur_cross || pc.second != out) next = pc;
        if (next.first < 0) break;
        cur_cross = next.first;
        cur_in = next.second;
    }

    long long w = 0;
    for (size_t i = 0; i < nc; ++i) {
        const Crossing& c = d.crossings[i];
        // over passage along over_diag, under along the other diagonal
        Corner over_in = c.over_diag == 0 ? (entered[i][NW] ? NW : SE) : (entered[i][NE] ? NE : SW);
        Corner under_in = c.over_diag == 0 ? (entered[i][NE] ? NE : SW) : (entered[i][NW] ? NW : SE);
        auto dir = [](Corner in) {
            Corner out = opposite(in);
            return std::array<int, 2>{kCornerPos[out][0] - kCornerPos[in][0],
                                      kCornerPos[out][1] - kCornerPos[in][1]};
        };
        auto o = dir(over_in), u = dir(under_in);
        w += (o[0] * u[1] - o[1] * u[0]) > 0 ? -1 : 1;
    }
    return w;
}

}  // namespace

int diagram_components(const MontesinosKnot& k) {
    std::array<TangleEnds, 3> ends;
    Diagram d = build_diagram(k, ends);
    return count_components(d);
}

BracketResult kauffman_oracle(const MontesinosKnot& k, long long crossing_limit) {
    const long long nc = k.total_crossings();
    if (nc > crossing_limit) throw CrossingLimitExceeded(nc);

    std::array<TangleEnds, 3> ends;
    Diagram d = build_diagram(k, ends);
    BracketResult res;
    res.components = count_components(d);
    if (res.components != 1) throw NotAKnot(res.components);
    res.diagram_writhe = diagram_writhe(d);

    // Full state expansion; bracket as a Laurent polynomial in A.
    const size_t n = d.crossings.size();
    const LaurentPoly delta =
        LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);  // -A^2 - A^-2
    LaurentPoly bracket;
    UnionFind uf;
    for (unsigned long long state = 0; state < (1ull << n); ++state) {
        uf.parent.resize(0);
        for (size_t i = 0; i < d.arcs.parent.size(); ++i) uf.make();
        long long a_minus_b = 0;
        for (size_t i = 0; i < n; ++i) {
            const Crossing& c = d.crossings[i];
            const bool a_smooth = ((state >> i) & 1) == 0;
            a_minus_b += a_smooth ? 1 : -1;
            // A-smoothing: vertical pairs when NW-SE is over, horizontal when
            // NE-SW is over; B-smoothing is the other pairing.
            const bool vertical = a_smooth == (c.over_diag == 0);
            if (vertical) {
                uf.unite(d.arcs.find(c.port[NW]), d.arcs.find(c.port[SW]));
                uf.unite(d.arcs.find(c.port[NE]), d.arcs.find(c.port[SE]));
            } else {
                uf.unite(d.arcs.find(c.port[NW]), d.arcs.find(c.port[NE]));
                uf.unite(d.arcs.find(c.port[SW]), d.arcs.find(c.port[SE]));
            }
        }
        int loops = 0;
        std::vector<char> seen(uf.parent.size(), 0);
        for (size_t i = 0; i < uf.parent.size(); ++i) {
            if (d.arcs.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
            int root = uf.find(static_cast<int>(i));
            if (!seen[root]) {
                seen[root] = 1;
                ++loops;
            }
        }
        LaurentPoly term = LaurentPoly::monomial(1, a_minus_b);
        for (int l = 1; l < loops; ++l) term = term * delta;
        bracket += term;
    }
    // normalization: (-A^3)^{-w} * bracket, then v = A^{-1}, times [2]
    const long long w = res.diagram_writhe;
    LaurentPoly norm = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    LaurentPoly f = norm * bracket;
    LaurentPoly in_v;
    for (const auto& [e, coef] : f.terms()) in_v += LaurentPoly::monomial(coef, -e);
    res.jones2 = in_v * qint(2);
    return res;
}

}  // namespace mont
