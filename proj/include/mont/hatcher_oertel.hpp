#pragma once

#include <array>
#include <utility>

#include "mont/montesinos.hpp"

namespace mont {

enum class VertexKind { Arc, Circle, Infinity };

/// A vertex of the Hatcher-Oertel diagram. Arc vertices <p/q> sit at
/// ((q-1)/q, p/q), circle vertices at (1, p/q), <infinity> at (-1, 0).
struct DiagramVertex {
    VertexKind kind = VertexKind::Arc;
    Rational slope;  // reduced, denominator > 0; unused for Infinity

    static DiagramVertex arc(const Rational& s) { return {VertexKind::Arc, s}; }
    static DiagramVertex circle(const Rational& s) { return {VertexKind::Circle, s}; }
    static DiagramVertex infinity() { return {VertexKind::Infinity, Rational(0)}; }

    Rational u() const;
    Rational v() const;
    BigInt den() const { return rat_den(slope); }

    bool operator==(const DiagramVertex& o) const {
        return kind == o.kind && slope == o.slope;
    }
};

enum class EdgeKind { NonHorizontal, Horizontal, Vertical, Infinity, Constant, Partial };

/// One traversed edge; the path runs right to left, from `near` toward `far`.
/// A partial edge stops at `fraction` of the way (fraction in (0,1), complete
/// edges carry fraction 1).
struct Edge {
    DiagramVertex far, near;
    Rational fraction;
    int sign = 0;  // +1 increasing / -1 decreasing (in v, right to left), 0 otherwise
    EdgeKind kind = EdgeKind::NonHorizontal;

    std::pair<Rational, Rational> endpoint() const;  // uv of the stopping point
};

struct Edgepath {
    Rational tangle_slope;  // E1: the path must start at <tangle_slope>
    DiagramVertex start;
    std::vector<Edge> edges;

    std::pair<Rational, Rational> ending_point() const;
    Rational length() const;  // sum of edge fractions
};

enum class SurfaceType { I, II, III };
enum class AdmissibilityCondition { E1, E2, E3, E4 };

struct EdgepathSystem {
    std::array<Edgepath, 3> paths;
    Rational ending_u;
    SurfaceType type_tag = SurfaceType::II;
    std::array<long long, 3> r_cycle{};
};

struct SurfaceInvariants {
    Rational twist;           // tau(S)
    Rational twist_s0;        // tau(S_0), the Seifert reference
    Rational boundary_slope;  // tau(S) - tau(S_0)
    Rational chi_ratio;       // chi(S) / #S
};

struct WrongCase : std::logic_error {
    explicit WrongCase(const std::string& what) : std::logic_error(what) {}
};

struct Unsupported : std::logic_error {
    explicit Unsupported(const std::string& what) : std::logic_error(what) {}
};

/// |ps - qr| = 1 test for two arc vertices.
bool vertices_adjacent(const DiagramVertex& a, const DiagramVertex& b);

/// Point at parameter t in [0,1] along the edge from `near` (t=0) to `far`
/// (t=1): 1/(1-u) interpolates linearly between the denominators.
std::pair<Rational, Rational> uv_point_on_edge(const DiagramVertex& far,
                                               const DiagramVertex& near, const Rational& t);

/// u0 = s0 t0 / (s0 t0 + s0 + t0); requires disc < 0.
Rational compute_u0(const MontesinosKnot& k);

/// The chain edge <1/(r0+k+1)>--<1/(r0+k)> containing u0, and the partial-edge
/// fraction t = -(r0+k) - 1 - s0 t0/(s0+t0) in [0,1). Requires disc < 0.
std::pair<long long, Rational> locate_k_and_fraction(const MontesinosKnot& k);

EdgepathSystem build_seifert_system(const MontesinosKnot& k);
EdgepathSystem build_type1_system(const MontesinosKnot& k);  // requires disc < 0
EdgepathSystem build_type2_system(const MontesinosKnot& k);

/// Empty iff E1-E4 all hold.
std::vector<AdmissibilityCondition> check_admissibility(const EdgepathSystem& sys);

bool incompressibility_check(const EdgepathSystem& sys);

/// tau(S) = sum over edges of -2 sigma(e) |e|.
Rational twist(const EdgepathSystem& sys);

/// chi(S)/#S from the type I / type II length formulas; type III unsupported.
Rational euler_ratio(const EdgepathSystem& sys);

SurfaceInvariants closed_form_surface(const MontesinosKnot& k);

}  // namespace mont
