#ifndef SYSCODES_CHAIN_COMPLEX_H
#define SYSCODES_CHAIN_COMPLEX_H

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "syscodes/css.h"
#include "syscodes/gf2.h"
#include "syscodes/search.h"
#include "syscodes/stabilizer.h"

namespace syscodes {

struct OrientedEdge {
    size_t edge = 0;
    bool forward = true;

    bool operator==(const OrientedEdge &) const = default;
};

/// Rotation data for a 2-dimensional cellulation: edge endpoints plus each
/// face's boundary as a closed walk. Edges may be loops and may appear twice in
/// one face, which the mod-2 boundary matrices cannot express on their own.
struct SurfaceEmbedding {
    /// {tail, head} for each edge.
    std::vector<std::array<size_t, 2>> edge_ends;
    std::vector<std::vector<OrientedEdge>> faces;
};

/// Cells per dimension and the Z2 boundary maps between them.
///
/// boundary(p) has shape cells(p-1) x cells(p); column c lists the (p-1)-cells
/// appearing an odd number of times on the boundary of cell c. boundary(0) and
/// boundary(dim()+1) are the empty maps.
class CellComplex {
   public:
    CellComplex() = default;
    /// `boundaries[p-1]` is the map for dimension p; shapes are checked.
    CellComplex(std::vector<size_t> cells, std::vector<BitMatrix> boundaries);
    static CellComplex from_surface(size_t vertices, SurfaceEmbedding embedding);

    size_t dim() const {
        return cells_.empty() ? 0 : cells_.size() - 1;
    }
    size_t cells(size_t p) const {
        return p < cells_.size() ? cells_[p] : 0;
    }
    const std::vector<size_t> &cell_counts() const {
        return cells_;
    }
    const BitMatrix &boundary(size_t p) const;

    const std::optional<SurfaceEmbedding> &embedding() const {
        return embedding_;
    }
    /// Set for surfaces loaded without rotation data whose author vouches that
    /// they are closed surfaces.
    bool trusted_closed_surface() const {
        return trusted_closed_surface_;
    }
    void set_trusted_closed_surface(bool trusted) {
        trusted_closed_surface_ = trusted;
    }

    const std::vector<std::vector<std::string>> &labels() const {
        return labels_;
    }
    void set_labels(std::vector<std::vector<std::string>> labels);

    long euler_characteristic() const;

   private:
    friend CellComplex dual_surface_cellulation(const CellComplex &c);

    std::vector<size_t> cells_;
    std::vector<BitMatrix> boundary_;  // indexed 0..dim+1
    std::optional<SurfaceEmbedding> embedding_;
    bool trusted_closed_surface_ = false;
    std::vector<std::vector<std::string>> labels_;
};

/// Throws BoundarySquareNonzero(p, column) when boundary(p) boundary(p+1) != 0.
void validate_complex(const CellComplex &c);

struct HomologySummary {
    size_t p = 0;
    size_t dim_z = 0;
    size_t dim_b = 0;
    size_t dim_h = 0;
};

HomologySummary homology_dim(const CellComplex &c, size_t p);

/// delta_p = boundary(p+1)^T, shape cells(p+1) x cells(p); needs p < dim.
BitMatrix coboundary_matrix(const CellComplex &c, size_t p);

/// Basis of Z_p as rows of length cells(p).
BitMatrix cycle_basis(const CellComplex &c, size_t p);
/// Spanning set of B_p as rows of length cells(p) (the columns of boundary(p+1)).
BitMatrix boundary_rows(const CellComplex &c, size_t p);

enum class SystoleMethod {
    /// Graph cycles when p = 1 and every edge has 0 or 2 endpoints mod 2,
    /// otherwise weight-incremental search.
    Auto,
    WeightIncremental,
    /// Shortest non-bounding cycle among the fundamental cycles of every
    /// breadth-first tree (p = 1 only).
    GraphCycles,
};

/// Minimum weight of a p-cycle that is not a boundary. Throws TrivialHomology
/// when H_p vanishes.
SearchResult combinatorial_systole(const CellComplex &c, size_t p,
                                   size_t max_weight = std::numeric_limits<size_t>::max(),
                                   SystoleMethod method = SystoleMethod::Auto);

/// Throws NotClosedSurface when `c` is not a closed 2-dimensional cellulation:
/// every edge must occur exactly twice among the face walks and every vertex
/// link must be one cycle. Without rotation data only the trust flag and the
/// mod-2 edge/face incidence are checked.
void check_closed_surface(const CellComplex &c);
bool is_closed_surface(const CellComplex &c);

/// Poincare dual of a closed surface: i-cells become (2-i)-cells with the same
/// index and the boundary maps are transposed, so delta(*s) = *(boundary s).
CellComplex dual_surface_cellulation(const CellComplex &c);

struct HomologicalCodeOptions {
    size_t max_weight = std::numeric_limits<size_t>::max();
    /// Also run css_distance and require it to agree with the systole route.
    bool cross_check = true;
    /// Cross-checking is skipped above this many qubits.
    size_t cross_check_max_n = 64;
};

struct HomologicalCode {
    CssCode css;
    CodeParameters parameters;
    /// csys_i of the complex.
    SearchResult primal_systole;
    /// csys_{dim-i} of the dual, when the complex is a closed surface.
    std::optional<SearchResult> dual_systole;
    /// css_distance, when it was computed.
    std::optional<CssDistance> css_check;
};

/// CSS code with V1 = B_i and V2 = Z_i^perp: n = cells(i), k = dim H_i and
/// d = min(csys_i, csys_{dim-i} of the dual). Without a dual the distance comes
/// from css_distance. Throws std::logic_error if the two routes disagree.
HomologicalCode homological_code(const CellComplex &c, size_t i, const HomologicalCodeOptions &options = {});

}  // namespace syscodes

#endif
