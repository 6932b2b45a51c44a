#ifndef SYSCODES_SURFACE_FAMILY_H
#define SYSCODES_SURFACE_FAMILY_H

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syscodes/chain_complex.h"
#include "syscodes/stabilizer.h"

namespace syscodes {

struct FamilyMember {
    std::string descriptor;
    CellComplex complex;
    bool is_triangulation = false;
};

/// Every face is a 3-edge walk through 3 distinct vertices. Needs rotation data.
bool is_triangulation(const CellComplex &c);

/// L x L square lattice on the torus. Vertex (x, y) is y L + x; horizontal
/// edge (x, y) runs to (x+1, y) with index y L + x; vertical edge (x, y) runs to
/// (x, y+1) with index L^2 + y L + x; face (x, y) has lower-left corner (x, y).
FamilyMember torus_lattice(size_t L);
/// torus_lattice with every square split along the (x, y)-(x+1, y+1) diagonal;
/// diagonal (x, y) has index 2 L^2 + y L + x and face (x, y) becomes faces
/// 2 (y L + x) (lower) and 2 (y L + x) + 1 (upper).
FamilyMember triangulated_torus(size_t L);
/// One vertex, 2g loop edges, one face bounded by a1 b1 a1^-1 b1^-1 ... .
FamilyMember genus_polygon(size_t g);
/// The 6-vertex, 15-edge, 10-face triangulation of RP^2.
FamilyMember projective_plane();
/// Boundary of the tetrahedron (a sphere).
FamilyMember tetrahedron_sphere();

/// Each round splits every edge (u, v) at a new midpoint m: edge e keeps index
/// e as (u, m) and edge E + e is (m, v). Faces keep their (now longer) walks.
FamilyMember edge_subdivide(const FamilyMember &member, size_t rounds);

/// "torus:L", "tritorus:L", "genus:g", "rp2", "sphere" and
/// "subdiv:<descriptor>:rounds=R".
FamilyMember parse_family(std::string_view descriptor);

/// Optional lower-bound comparison for families with systolic freedom function
/// f: the report gains d^2 / (f(n / c1) n / (c1 c2^2)).
struct FreedomFunction {
    std::function<double(double)> f;
    double c1 = 1.0;
    double c2 = 1.0;
};

struct BoundScanOptions {
    std::optional<FreedomFunction> freedom;
    HomologicalCodeOptions code_options{};
};

struct BoundReport {
    std::string descriptor;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    Rational d2_over_n;
    /// R delta^2 n^2 = k d^2 / n.
    Rational r_delta2_n2;
    bool bound_36_satisfied = false;
    bool is_triangulation = false;
    size_t csys_primal = 0;
    std::optional<size_t> csys_dual;
    std::optional<double> freedom_ratio;
};

/// Parameters of the i = 1 homological code of every member, in input order.
std::vector<BoundReport> bound_scan(std::span<const FamilyMember> members, const BoundScanOptions &options = {});

/// True when no triangulation member violates d^2 <= 36 n.
bool triangulation_bound_holds(std::span<const BoundReport> reports);

}  // namespace syscodes

#endif
