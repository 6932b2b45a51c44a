#include "syscodes/chain_complex.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "syscodes/error.h"

namespace syscodes {

namespace {

constexpr size_t UNREACHED = std::numeric_limits<size_t>::max();

std::string count_str(size_t v) {
    return std::to_string(v);
}

// Occurrence/corner bookkeeping for a surface with rotation data. Occurrence o
// is position i of face f (numbered face by face); corner o sits between
// occurrence o and the next occurrence in the same face.
struct SurfaceWalks {
    std::vector<size_t> occ_face;
    std::vector<std::array<size_t, 2>> edge_occ;
    std::vector<std::vector<OrientedEdge>> vertex_faces;  // dual 2-cells
};

SurfaceWalks analyze_embedded_surface(const CellComplex &c) {
    const SurfaceEmbedding &emb = *c.embedding();
    size_t num_v = c.cells(0);
    size_t num_e = c.cells(1);
    size_t num_f = c.cells(2);
    if (emb.edge_ends.size() != num_e || emb.faces.size() != num_f) {
        throw Error(ErrorKind::NotClosedSurface, "rotation data does not match the cell counts");
    }
    for (size_t e = 0; e < num_e; e++) {
        for (size_t v : emb.edge_ends[e]) {
            if (v >= num_v) {
                throw Error(ErrorKind::NotClosedSurface, "edge " + count_str(e) + " has an endpoint out of range", e);
            }
        }
    }

    auto tail_of = [&](OrientedEdge o) { return emb.edge_ends[o.edge][o.forward ? 0 : 1]; };
    auto head_of = [&](OrientedEdge o) { return emb.edge_ends[o.edge][o.forward ? 1 : 0]; };

    SurfaceWalks out;
    std::vector<size_t> face_offset(num_f + 1, 0);
    std::vector<std::vector<size_t>> occurrences(num_e);
    for (size_t f = 0; f < num_f; f++) {
        const auto &walk = emb.faces[f];
        if (walk.empty()) {
            throw Error(ErrorKind::NotClosedSurface, "face " + count_str(f) + " has an empty boundary", f);
        }
        for (size_t i = 0; i < walk.size(); i++) {
            if (walk[i].edge >= num_e) {
                throw Error(ErrorKind::NotClosedSurface, "face " + count_str(f) + " uses an edge out of range", f);
            }
            if (head_of(walk[i]) != tail_of(walk[(i + 1) % walk.size()])) {
                throw Error(ErrorKind::NotClosedSurface, "boundary walk of face " + count_str(f) + " is not closed", f);
            }
            occurrences[walk[i].edge].push_back(face_offset[f] + i);
            out.occ_face.push_back(f);
        }
        face_offset[f + 1] = face_offset[f] + walk.size();
    }
    out.edge_occ.resize(num_e);
    for (size_t e = 0; e < num_e; e++) {
        if (occurrences[e].size() != 2) {
            throw Error(ErrorKind::NotClosedSurface,
                        "edge " + count_str(e) + " lies on " + count_str(occurrences[e].size()) +
                            " face sides instead of 2",
                        e);
        }
        out.edge_occ[e] = {occurrences[e][0], occurrences[e][1]};
    }

    // Link graph: nodes are edge ends (2e + end), arcs are corners. Corner k
    // has slot 2k at the arrival end of occurrence k and slot 2k+1 at the
    // departure end of the following occurrence.
    size_t num_occ = face_offset[num_f];
    std::vector<size_t> slot_node(2 * num_occ);
    std::vector<size_t> slot_occ(2 * num_occ);
    std::vector<std::vector<size_t>> node_slots(2 * num_e);
    for (size_t f = 0; f < num_f; f++) {
        const auto &walk = emb.faces[f];
        for (size_t i = 0; i < walk.size(); i++) {
            size_t k = face_offset[f] + i;
            size_t j = (i + 1) % walk.size();
            OrientedEdge arriving = walk[i];
            OrientedEdge leaving = walk[j];
            slot_node[2 * k] = 2 * arriving.edge + (arriving.forward ? 1 : 0);
            slot_occ[2 * k] = k;
            slot_node[2 * k + 1] = 2 * leaving.edge + (leaving.forward ? 0 : 1);
            slot_occ[2 * k + 1] = face_offset[f] + j;
            node_slots[slot_node[2 * k]].push_back(2 * k);
            node_slots[slot_node[2 * k + 1]].push_back(2 * k + 1);
        }
    }

    std::vector<std::vector<size_t>> nodes_at(num_v);
    for (size_t node = 0; node < 2 * num_e; node++) {
        nodes_at[emb.edge_ends[node / 2][node % 2]].push_back(node);
    }
    out.vertex_faces.resize(num_v);
    for (size_t v = 0; v < num_v; v++) {
        if (nodes_at[v].empty()) {
            throw Error(ErrorKind::NotClosedSurface, "vertex " + count_str(v) + " has no incident edges", v);
        }
        size_t start = nodes_at[v].front();
        size_t start_slot = node_slots[start][0];
        size_t node = start;
        size_t in_slot = start_slot;
        size_t steps = 0;
        auto &dual_walk = out.vertex_faces[v];
        do {
            const auto &slots = node_slots[node];
            size_t out_slot = slots[0] == in_slot ? slots[1] : slots[0];
            size_t e = node / 2;
            dual_walk.push_back(OrientedEdge{e, slot_occ[in_slot] == out.edge_occ[e][0]});
            size_t partner = out_slot ^ 1;
            node = slot_node[partner];
            in_slot = partner;
            steps++;
        } while (!(node == start && in_slot == start_slot) && steps <= nodes_at[v].size());
        if (steps != nodes_at[v].size()) {
            throw Error(ErrorKind::NotClosedSurface, "link of vertex " + count_str(v) + " is not a single cycle", v);
        }
    }
    return out;
}

std::optional<SurfaceWalks> analyze_surface(const CellComplex &c) {
    if (c.dim() != 2) {
        throw Error(ErrorKind::NotClosedSurface, "a closed surface cellulation must have dimension 2");
    }
    if (c.embedding()) {
        return analyze_embedded_surface(c);
    }
    if (!c.trusted_closed_surface()) {
        throw Error(ErrorKind::NotClosedSurface,
                    "complex has no rotation data and is not marked as a closed surface");
    }
    const BitMatrix &faces = c.boundary(2);
    for (size_t e = 0; e < faces.rows(); e++) {
        size_t w = faces.row(e).weight();
        if (w != 0 && w != 2) {
            throw Error(ErrorKind::NotClosedSurface,
                        "edge " + count_str(e) + " lies on " + count_str(w) + " faces (mod 2)", e);
        }
    }
    return std::nullopt;
}

SearchResult graph_systole(const CellComplex &c, size_t max_weight) {
    size_t num_v = c.cells(0);
    size_t num_e = c.cells(1);
    EchelonForm bounding = row_reduce(boundary_rows(c, 1));
    BitMatrix incidence = c.boundary(1).transpose();

    std::vector<std::array<size_t, 2>> ends(num_e);
    std::vector<std::vector<std::pair<size_t, size_t>>> adjacent(num_v);
    for (size_t e = 0; e < num_e; e++) {
        std::vector<size_t> s = incidence.row(e).support();
        if (s.empty()) {
            BitVector loop(num_e);
            loop.set(e, true);
            if (!bounding.contains(loop)) {
                return max_weight >= 1 ? SearchResult{true, 1, loop} : SearchResult{};
            }
            ends[e] = {UNREACHED, UNREACHED};
            continue;
        }
        if (s.size() != 2) {
            throw Error(ErrorKind::InvalidArgument, "graph systole needs every edge to have 0 or 2 endpoints", e);
        }
        ends[e] = {s[0], s[1]};
        adjacent[s[0]].emplace_back(s[1], e);
        adjacent[s[1]].emplace_back(s[0], e);
    }

    size_t best = UNREACHED;
    BitVector best_cycle;
    std::vector<size_t> dist(num_v);
    std::vector<size_t> parent_edge(num_v);
    std::vector<size_t> parent(num_v);
    for (size_t root = 0; root < num_v; root++) {
        std::fill(dist.begin(), dist.end(), UNREACHED);
        std::fill(parent_edge.begin(), parent_edge.end(), UNREACHED);
        dist[root] = 0;
        parent[root] = root;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (auto [w, e] : adjacent[u]) {
                if (dist[w] == UNREACHED) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    parent_edge[w] = e;
                    queue.push_back(w);
                }
            }
        }
        for (size_t e = 0; e < num_e; e++) {
            auto [u, v] = ends[e];
            if (u == UNREACHED || dist[u] == UNREACHED || dist[v] == UNREACHED) {
                continue;
            }
            if (parent_edge[u] == e || parent_edge[v] == e) {
                continue;
            }
            if (best != UNREACHED && dist[u] + dist[v] + 1 >= best) {
                continue;
            }
            BitVector cycle(num_e);
            cycle.flip(e);
            for (size_t x : {u, v}) {
                while (x != root) {
                    cycle.flip(parent_edge[x]);
                    x = parent[x];
                }
            }
            size_t w = cycle.weight();
            if (w == 0 || (best != UNREACHED && w >= best)) {
                continue;
            }
            if (!bounding.contains(cycle)) {
                best = w;
                best_cycle = std::move(cycle);
            }
        }
    }
    if (best == UNREACHED || best > max_weight) {
        return SearchResult{};
    }
    return SearchResult{true, best, std::move(best_cycle)};
}

bool is_graph_like(const BitMatrix &edges_to_vertices) {
    BitMatrix incidence = edges_to_vertices.transpose();
    for (size_t e = 0; e < incidence.rows(); e++) {
        size_t w = incidence.row(e).weight();
        if (w != 0 && w != 2) {
            return false;
        }
    }
    return true;
}

}  // namespace

CellComplex::CellComplex(std::vector<size_t> cells, std::vector<BitMatrix> boundaries) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "a cell complex needs at least one dimension");
    }
    if (boundaries.size() != cells_.size() - 1) {
        throw Error(ErrorKind::InvalidArgument, "expected " + count_str(cells_.size() - 1) + " boundary maps, got " +
                                                    count_str(boundaries.size()));
    }
    boundary_.reserve(cells_.size() + 1);
    boundary_.emplace_back(0, cells_[0]);
    for (size_t p = 1; p < cells_.size(); p++) {
        const BitMatrix &m = boundaries[p - 1];
        if (m.rows() != cells_[p - 1] || m.cols() != cells_[p]) {
            throw Error(ErrorKind::InvalidArgument, "boundary map " + count_str(p) + " has shape " +
                                                        count_str(m.rows()) + "x" + count_str(m.cols()) +
                                                        ", expected " + count_str(cells_[p - 1]) + "x" +
                                                        count_str(cells_[p]),
                        p);
        }
        boundary_.push_back(std::move(boundaries[p - 1]));
    }
    boundary_.emplace_back(cells_.back(), 0);
}

CellComplex CellComplex::from_surface(size_t vertices, SurfaceEmbedding embedding) {
    size_t num_e = embedding.edge_ends.size();
    size_t num_f = embedding.faces.size();
    BitMatrix d1(vertices, num_e);
    for (size_t e = 0; e < num_e; e++) {
        for (size_t v : embedding.edge_ends[e]) {
            if (v >= vertices) {
                throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range", e);
            }
            d1.flip(v, e);
        }
    }
    BitMatrix d2(num_e, num_f);
    for (size_t f = 0; f < num_f; f++) {
        for (const auto &o : embedding.faces[f]) {
            if (o.edge >= num_e) {
                throw Error(ErrorKind::InvalidArgument, "face uses an edge out of range", f);
            }
            d2.flip(o.edge, f);
        }
    }
    CellComplex c({vertices, num_e, num_f}, {std::move(d1), std::move(d2)});
    c.embedding_ = std::move(embedding);
    return c;
}

const BitMatrix &CellComplex::boundary(size_t p) const {
    if (p > dim() + 1) {
        throw Error(ErrorKind::DimensionOutOfRange, "no boundary map in dimension " + count_str(p), p);
    }
    return boundary_[p];
}

void CellComplex::set_labels(std::vector<std::vector<std::string>> labels) {
    if (!labels.empty()) {
        if (labels.size() != cells_.size()) {
            throw Error(ErrorKind::InvalidArgument, "labels must be given for every dimension");
        }
        for (size_t p = 0; p < labels.size(); p++) {
            if (labels[p].size() != cells_[p]) {
                throw Error(ErrorKind::InvalidArgument, "label count mismatch in dimension " + count_str(p), p);
            }
        }
    }
    labels_ = std::move(labels);
}

long CellComplex::euler_characteristic() const {
    long chi = 0;
    for (size_t p = 0; p < cells_.size(); p++) {
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(cells_[p]);
    }
    return chi;
}

void validate_complex(const CellComplex &c) {
    for (size_t p = 1; p < c.dim(); p++) {
        BitMatrix product = c.boundary(p).multiply(c.boundary(p + 1));
        for (size_t col = 0; col < product.cols(); col++) {
            if (!product.column(col).is_zero()) {
                throw Error(ErrorKind::BoundarySquareNonzero,
                            "boundary of the boundary of " + count_str(p + 1) + "-cell " + count_str(col) +
                                " is nonzero",
                            p, col);
            }
        }
    }
}

HomologySummary homology_dim(const CellComplex &c, size_t p) {
    if (p > c.dim()) {
        throw Error(ErrorKind::DimensionOutOfRange,
                    "dimension " + count_str(p) + " exceeds the complex dimension " + count_str(c.dim()), p);
    }
    HomologySummary h;
    h.p = p;
    h.dim_z = c.cells(p) - rank(c.boundary(p));
    h.dim_b = rank(c.boundary(p + 1));
    h.dim_h = h.dim_z - h.dim_b;
    return h;
}

BitMatrix coboundary_matrix(const CellComplex &c, size_t p) {
    if (p >= c.dim()) {
        throw Error(ErrorKind::DimensionOutOfRange, "no coboundary out of the top dimension", p);
    }
    return c.boundary(p + 1).transpose();
}

BitMatrix cycle_basis(const CellComplex &c, size_t p) {
    if (p > c.dim()) {
        throw Error(ErrorKind::DimensionOutOfRange, "dimension out of range", p);
    }
    return kernel_basis(c.boundary(p));
}

BitMatrix boundary_rows(const CellComplex &c, size_t p) {
    if (p > c.dim()) {
        throw Error(ErrorKind::DimensionOutOfRange, "dimension out of range", p);
    }
    return c.boundary(p + 1).transpose();
}

SearchResult combinatorial_systole(const CellComplex &c, size_t p, size_t max_weight, SystoleMethod method) {
    HomologySummary h = homology_dim(c, p);
    if (h.dim_h == 0) {
        throw Error(ErrorKind::TrivialHomology, "H_" + count_str(p) + " is trivial, so no systole exists", p);
    }
    if (method == SystoleMethod::Auto) {
        method = (p == 1 && is_graph_like(c.boundary(1))) ? SystoleMethod::GraphCycles
                                                          : SystoleMethod::WeightIncremental;
    }
    if (method == SystoleMethod::GraphCycles) {
        if (p != 1) {
            throw Error(ErrorKind::InvalidArgument, "graph cycle search only applies to 1-cycles");
        }
        return graph_systole(c, max_weight);
    }
    return min_weight_outside(c.boundary(p), boundary_rows(c, p), std::min(max_weight, c.cells(p)));
}

void check_closed_surface(const CellComplex &c) {
    analyze_surface(c);
}

bool is_closed_surface(const CellComplex &c) {
    try {
        analyze_surface(c);
        return true;
    } catch (const Error &) {
        return false;
    }
}

CellComplex dual_surface_cellulation(const CellComplex &c) {
    std::optional<SurfaceWalks> walks = analyze_surface(c);
    CellComplex dual({c.cells(2), c.cells(1), c.cells(0)}, {c.boundary(2).transpose(), c.boundary(1).transpose()});
    if (walks) {
        SurfaceEmbedding emb;
        emb.edge_ends.reserve(c.cells(1));
        for (const auto &occ : walks->edge_occ) {
            emb.edge_ends.push_back({walks->occ_face[occ[0]], walks->occ_face[occ[1]]});
        }
        emb.faces = std::move(walks->vertex_faces);
        dual.embedding_ = std::move(emb);
    }
    dual.trusted_closed_surface_ = c.trusted_closed_surface();
    if (!c.labels().empty()) {
        auto labels = c.labels();
        std::reverse(labels.begin(), labels.end());
        dual.labels_ = std::move(labels);
    }
    return dual;
}

HomologicalCode homological_code(const CellComplex &c, size_t i, const HomologicalCodeOptions &options) {
    HomologySummary h = homology_dim(c, i);
    if (h.dim_h == 0) {
        throw Error(ErrorKind::TrivialHomology, "H_" + count_str(i) + " is trivial, so the code encodes nothing", i);
    }
    BitMatrix v1 = row_basis(boundary_rows(c, i));
    BitMatrix v2 = orthogonal_complement(kernel_basis(c.boundary(i)));
    CssCode css = build_css(v1, v2);
    size_t n = c.cells(i);
    size_t bound = std::min(options.max_weight, n);

    SearchResult primal = combinatorial_systole(c, i, bound);
    std::optional<SearchResult> dual_sys;
    if (c.dim() == 2 && is_closed_surface(c)) {
        CellComplex dual = dual_surface_cellulation(c);
        dual_sys = combinatorial_systole(dual, 2 - i, bound);
    }

    std::optional<size_t> d;
    if (dual_sys) {
        if (primal.found) {
            d = primal.weight;
        }
        if (dual_sys->found && (!d || dual_sys->weight < *d)) {
            d = dual_sys->weight;
        }
    }

    std::optional<CssDistance> css_check;
    if (!dual_sys || (options.cross_check && n <= options.cross_check_max_n)) {
        // Searching past the systole route's answer cannot change the verdict.
        css_check = css_distance(css, d ? std::min(bound, *d) : bound);
        std::optional<size_t> via_css;
        if (css_check->found) {
            via_css = css_check->weight;
        }
        if (dual_sys && via_css != d) {
            throw std::logic_error("homological code distance: systole route and css_distance disagree");
        }
        d = via_css;
    }

    HomologicalCode out{std::move(css), CodeParameters{n, h.dim_h, d}, std::move(primal), std::move(dual_sys),
                        std::move(css_check)};
    return out;
}

}  // namespace syscodes
