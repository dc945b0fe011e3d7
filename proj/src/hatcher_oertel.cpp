#include "mont/hatcher_oertel.hpp"

#include <algorithm>

namespace mont {

Rational DiagramVertex::u() const {
    switch (kind) {
        case VertexKind::Arc: return Rational(rat_den(slope) - 1, rat_den(slope));
        case VertexKind::Circle: return Rational(1);
        default: return Rational(-1);
    }
}

Rational DiagramVertex::v() const {
    return kind == VertexKind::Infinity ? Rational(0) : slope;
}

bool vertices_adjacent(const DiagramVertex& a, const DiagramVertex& b) {
    if (a.kind != VertexKind::Arc || b.kind != VertexKind::Arc) return false;
    const BigInt d = rat_num(a.slope) * rat_den(b.slope) - rat_den(a.slope) * rat_num(b.slope);
    return d == 1 || d == -1;
}

std::pair<Rational, Rational> uv_point_on_edge(const DiagramVertex& far,
                                               const DiagramVertex& near, const Rational& t) {
    if (far == near) throw std::invalid_argument("degenerate edge");
    // 1/(1-u) = t*s + (1-t)*q;  v = (t*r + (1-t)*p) / (t*s + (1-t)*q)
    const Rational inv = t * Rational(rat_den(far.slope)) + (1 - t) * Rational(rat_den(near.slope));
    const Rational num = t * Rational(rat_num(far.slope)) + (1 - t) * Rational(rat_num(near.slope));
    return {1 - 1 / inv, num / inv};
}

std::pair<Rational, Rational> Edge::endpoint() const {
    if (fraction == 1) return {far.u(), far.v()};
    return uv_point_on_edge(far, near, fraction);
}

std::pair<Rational, Rational> Edgepath::ending_point() const {
    if (edges.empty()) return {start.u(), start.v()};
    return edges.back().endpoint();
}

Rational Edgepath::length() const {
    Rational total;
    for (const Edge& e : edges) total += e.fraction;
    return total;
}

Rational compute_u0(const MontesinosKnot& k) {
    if (k.case_tag != CaseTag::NegDisc) throw WrongCase("u0 is defined only when disc < 0");
    const long long s0 = k.s0(), t0 = k.t0();
    const Rational u0(s0 * t0, s0 * t0 + s0 + t0);
    const long long heads[3] = {k.r0(), s0, t0};
    for (long long h : heads) {
        // u-coordinate of <1/(h+1)>
        const long long q = h + 1 < 0 ? -(h + 1) : h + 1;
        if (!(u0 < Rational(q - 1, q))) throw WrongCase("u0 inequality violated");
    }
    return u0;
}

std::pair<long long, Rational> locate_k_and_fraction(const MontesinosKnot& k) {
    if (k.case_tag != CaseTag::NegDisc) throw WrongCase("partial edge requires disc < 0");
    const Rational c(k.s0() * k.t0(), k.s0() + k.t0());
    const Rational x = -k.r0() - 1 - c;
    const BigInt kf = rfloor(x);
    const long long kk = kf.convert_to<long long>();
    const Rational t = x - Rational(kf);
    if (kk < 1 || kk > -k.r0() - 2) throw std::logic_error("partial edge location out of range");
    return {kk, t};
}

namespace {

DiagramVertex vertex_of(const std::vector<long long>& entries) {
    if (entries.empty()) return DiagramVertex::arc(Rational(0));
    ContinuedFraction cf;
    cf.entries = entries;
    return DiagramVertex::arc(eval_continued_fraction(cf));
}

// Collapse trailing -1 entries: [.., a, -1] = [.., a+1].
void canon(std::vector<long long>& v) {
    while (v.size() > 1 && v.back() == -1) {
        v.pop_back();
        v.back() += 1;
    }
}

Edge make_edge(const DiagramVertex& near, const DiagramVertex& far, const Rational& fraction) {
    Edge e;
    e.near = near;
    e.far = far;
    e.fraction = fraction;
    if (rat_den(near.slope) == 1 && rat_den(far.slope) == 1)
        e.kind = EdgeKind::Vertical;
    else if (fraction != 1)
        e.kind = EdgeKind::Partial;
    else
        e.kind = EdgeKind::NonHorizontal;
    const Rational dv = e.endpoint().second - near.v();
    e.sign = dv > 0 ? 1 : (dv < 0 ? -1 : 0);
    return e;
}

Edgepath path_from_vertices(const Rational& tangle_slope, const std::vector<DiagramVertex>& pts) {
    Edgepath path;
    path.tangle_slope = tangle_slope;
    path.start = pts.front();
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        path.edges.push_back(make_edge(pts[i], pts[i + 1], Rational(1)));
    return path;
}

// One increment of the last entry, collapsing at -1; returns true when a
// collapse ended the run at this entry.
bool increment_step(std::vector<long long>& cur) {
    cur.back() += 1;
    bool collapsed = false;
    while (cur.size() > 1 && cur.back() == -1) {
        cur.pop_back();
        cur.back() += 1;
        collapsed = true;
    }
    return collapsed;
}

// Seifert path: from the canonical vertex, alternate increment-runs (last
// index odd) with truncations (last index even), ending at <0>. Runs are
// decreasing edges, truncations increasing; the row structure keeps the path
// on odd-denominator vertices.
Edgepath delta_path(const Rational& tangle_slope, std::vector<long long> cur) {
    canon(cur);
    std::vector<DiagramVertex> pts{vertex_of(cur)};
    while (!cur.empty()) {
        if (cur.size() % 2 == 0) {  // last index odd: increment run
            while (!increment_step(cur)) pts.push_back(vertex_of(cur));
            pts.push_back(vertex_of(cur));
        } else {  // last index even: truncate
            cur.pop_back();
            pts.push_back(vertex_of(cur));
        }
    }
    return path_from_vertices(tangle_slope, pts);
}

// Pure staircase down to [x0+1]; vertex list only, shared by beta and gamma.
std::vector<DiagramVertex> staircase_vertices(std::vector<long long> cur) {
    canon(cur);
    std::vector<DiagramVertex> pts{vertex_of(cur)};
    while (cur.size() > 1) {
        increment_step(cur);
        pts.push_back(vertex_of(cur));
    }
    return pts;
}

Edgepath beta_path(const Rational& tangle_slope, const std::vector<long long>& entries) {
    std::vector<DiagramVertex> pts = staircase_vertices(entries);
    pts.push_back(DiagramVertex::arc(Rational(0)));
    return path_from_vertices(tangle_slope, pts);
}

EdgepathSystem assemble(std::array<Edgepath, 3> paths) {
    EdgepathSystem sys;
    sys.paths = std::move(paths);
    sys.ending_u = sys.paths[0].ending_point().first;
    sys.type_tag = sys.ending_u > 0   ? SurfaceType::I
                   : sys.ending_u == 0 ? SurfaceType::II
                                       : SurfaceType::III;
    for (int i = 0; i < 3; ++i) {
        const Edge& last = sys.paths[i].edges.back();
        BigInt d = rat_den(last.far.slope) - rat_den(last.near.slope);
        if (d < 0) d = -d;
        sys.r_cycle[i] = d.convert_to<long long>();
    }
    return sys;
}

}  // namespace

EdgepathSystem build_seifert_system(const MontesinosKnot& k) {
    return assemble({delta_path(k.fr, k.r.entries), delta_path(k.fs, k.s.entries),
                     delta_path(k.ft, k.t.entries)});
}

EdgepathSystem build_type2_system(const MontesinosKnot& k) {
    return assemble({beta_path(k.fr, k.r.entries), beta_path(k.fs, k.s.entries),
                     beta_path(k.ft, k.t.entries)});
}

EdgepathSystem build_type1_system(const MontesinosKnot& k) {
    const auto [kk, t] = locate_k_and_fraction(k);
    const long long r0 = k.r0();

    // gamma_1: staircase to <1/(r0+1)>, the <1/(r0+j)> chain, then the partial
    // edge toward <1/(r0+k+1)> when t > 0.
    std::vector<DiagramVertex> pts = staircase_vertices(k.r.entries);
    for (long long j = 2; j <= kk; ++j)
        pts.push_back(DiagramVertex::arc(make_rational(1, r0 + j)));
    Edgepath g1 = path_from_vertices(k.fr, pts);
    if (t > 0)
        g1.edges.push_back(
            make_edge(pts.back(), DiagramVertex::arc(make_rational(1, r0 + kk + 1)), t));

    // gamma_2 / gamma_3: staircase to <1/(x0+1)>, then a partial edge toward
    // <0> of length s0/(s0+t0) resp. t0/(s0+t0).
    auto gamma_st = [&](const Rational& slope, const std::vector<long long>& entries,
                        long long len_num) {
        std::vector<DiagramVertex> sp = staircase_vertices(entries);
        Edgepath g = path_from_vertices(slope, sp);
        g.edges.push_back(make_edge(sp.back(), DiagramVertex::arc(Rational(0)),
                                    Rational(len_num, k.s0() + k.t0())));
        return g;
    };
    return assemble({std::move(g1), gamma_st(k.fs, k.s.entries, k.s0()),
                     gamma_st(k.ft, k.t.entries, k.t0())});
}

std::vector<AdmissibilityCondition> check_admissibility(const EdgepathSystem& sys) {
    std::vector<AdmissibilityCondition> bad;
    auto flag = [&](AdmissibilityCondition c) {
        if (std::find(bad.begin(), bad.end(), c) == bad.end()) bad.push_back(c);
    };

    for (const Edgepath& p : sys.paths) {
        // E1: starts at the tangle-fraction arc vertex (on its horizontal edge)
        if (p.start.kind != VertexKind::Arc || p.start.slope != p.tangle_slope ||
            p.edges.empty() || !(p.edges.front().near == p.start))
            flag(AdmissibilityCondition::E1);

        // E2: never stops, retraces, or runs along two sides of one triangle
        for (size_t i = 0; i < p.edges.size(); ++i) {
            const Edge& e = p.edges[i];
            if (e.far == e.near || e.fraction == 0) flag(AdmissibilityCondition::E2);
            if (i + 1 < p.edges.size()) {
                const Edge& f = p.edges[i + 1];
                if (!(f.near == e.far)) flag(AdmissibilityCondition::E2);
                if (f.far == e.near) flag(AdmissibilityCondition::E2);
                if (vertices_adjacent(e.near, e.far) && vertices_adjacent(e.far, f.far) &&
                    vertices_adjacent(e.near, f.far))
                    flag(AdmissibilityCondition::E2);
            }
        }

        // E4: u strictly decreases right to left, except along vertical edges
        Rational u_prev = p.start.u();
        for (const Edge& e : p.edges) {
            const Rational u_next = e.endpoint().first;
            if (!(u_next < u_prev || (u_next == u_prev && e.kind == EdgeKind::Vertical)))
                flag(AdmissibilityCondition::E4);
            u_prev = u_next;
        }
    }

    // E3: common ending u; ending v-coordinates sum to zero
    Rational vsum;
    bool u_equal = true;
    for (const Edgepath& p : sys.paths) {
        const auto [u, v] = p.ending_point();
        if (u != sys.paths[0].ending_point().first) u_equal = false;
        vsum += v;
    }
    if (!u_equal || vsum != 0) flag(AdmissibilityCondition::E3);

    return bad;
}

bool incompressibility_check(const EdgepathSystem& sys) {
    bool has_vertical = false;
    for (const Edgepath& p : sys.paths)
        for (const Edge& e : p.edges)
            if (e.kind == EdgeKind::Vertical) has_vertical = true;

    std::array<long long, 3> c = sys.r_cycle;
    std::sort(c.begin(), c.end());
    if (has_vertical) {
        // fails only on cycles (0,2,1) and (0,2,0)
        return !(c == std::array<long long, 3>{0, 1, 2} || c == std::array<long long, 3>{0, 0, 2});
    }
    // (1,1,r3) gives no guarantee; (1,2,r3) requires monotone final edges
    if (c[0] == 1 && c[1] == 1) return false;
    const bool has1 = std::find(c.begin(), c.end(), 1) != c.end();
    const bool has2 = std::find(c.begin(), c.end(), 2) != c.end();
    if (has1 && has2) {
        const int s0 = sys.paths[0].edges.back().sign;
        for (const Edgepath& p : sys.paths)
            if (p.edges.back().sign != s0) return false;
    }
    return true;
}

Rational twist(const EdgepathSystem& sys) {
    Rational total;
    for (const Edgepath& p : sys.paths)
        for (const Edge& e : p.edges) total += Rational(-2 * e.sign) * e.fraction;
    return total;
}

Rational euler_ratio(const EdgepathSystem& sys) {
    if (sys.type_tag == SurfaceType::III) throw Unsupported("type III surfaces not supported");
    if (sys.type_tag == SurfaceType::I) {
        // -chi/#S = sum of path lengths - N + (N-2)/(1-u0); no constant paths here
        Rational total;
        for (const Edgepath& p : sys.paths) total += p.length();
        return -(total - 3 + 1 / (1 - sys.ending_u));
    }
    // type II: -chi/#S = sum of positive-u lengths + |Gamma(+0)| - 2
    Rational pos_len, gamma0;
    for (const Edgepath& p : sys.paths) {
        for (const Edge& e : p.edges)
            if (e.kind != EdgeKind::Vertical) pos_len += e.fraction;
        // first point on the v-axis (u = 0), scanning right to left
        if (p.start.u() == 0) {
            gamma0 += p.start.v();
        } else {
            for (const Edge& e : p.edges)
                if (e.endpoint().first == 0) {
                    gamma0 += e.endpoint().second;
                    break;
                }
        }
    }
    if (gamma0 < 0) gamma0 = -gamma0;
    return -(pos_len + gamma0 - 2);
}

SurfaceInvariants closed_form_surface(const MontesinosKnot& k) {
    const long long mpq = k.m() + k.p() + k.q();
    const long long so = k.sum_odd_index();
    const long long s1 = k.sum_from_one();
    SurfaceInvariants inv;
    inv.twist_s0 = 2 - 2 * mpq - 2 * so;
    if (k.case_tag == CaseTag::NegDisc) {
        inv.twist = Rational(2 * k.t0() * k.t0(), k.s0() + k.t0()) -
                    2 * (k.r0() + k.t0() + 2) + 8 - 4 * mpq - 2 * s1;
        inv.chi_ratio = k.r0() + 2 * mpq + s1;
    } else {
        inv.twist = 8 - 4 * mpq - 2 * s1;
        inv.chi_ratio = 2 * mpq - 4 + s1;
    }
    inv.boundary_slope = inv.twist - inv.twist_s0;
    return inv;
}

}  // namespace mont
