#include "syscodes/surface_family.h"

#include <algorithm>
#include <charconv>
#include <exception>
#include <map>

#include "syscodes/error.h"
#include "syscodes/parallel.h"

namespace syscodes {

namespace {

FamilyMember make_member(std::string descriptor, CellComplex complex) {
    bool tri = is_triangulation(complex);
    return FamilyMember{std::move(descriptor), std::move(complex), tri};
}

// Builds a surface from vertex triples. Edge {u, v} with u < v runs u -> v and
// edges are numbered in order of first appearance.
CellComplex from_triangles(size_t vertices, const std::vector<std::array<size_t, 3>> &triangles) {
    SurfaceEmbedding emb;
    std::map<std::pair<size_t, size_t>, size_t> edge_index;
    auto edge_between = [&](size_t a, size_t b) {
        auto key = std::minmax(a, b);
        auto [it, inserted] = edge_index.emplace(key, emb.edge_ends.size());
        if (inserted) {
            emb.edge_ends.push_back({key.first, key.second});
        }
        return OrientedEdge{it->second, a < b};
    };
    for (const auto &t : triangles) {
        emb.faces.push_back({edge_between(t[0], t[1]), edge_between(t[1], t[2]), edge_between(t[2], t[0])});
    }
    return CellComplex::from_surface(vertices, std::move(emb));
}

size_t parse_count(std::string_view text, std::string_view descriptor) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::Parse, "bad number '" + std::string(text) + "' in family descriptor '" +
                                          std::string(descriptor) + "'");
    }
    return value;
}

}  // namespace

bool is_triangulation(const CellComplex &c) {
    if (c.dim() != 2 || !c.embedding()) {
        return false;
    }
    const SurfaceEmbedding &emb = *c.embedding();
    for (const auto &walk : emb.faces) {
        if (walk.size() != 3) {
            return false;
        }
        std::array<size_t, 3> corners{};
        for (size_t i = 0; i < 3; i++) {
            corners[i] = emb.edge_ends[walk[i].edge][walk[i].forward ? 0 : 1];
        }
        if (corners[0] == corners[1] || corners[1] == corners[2] || corners[0] == corners[2]) {
            return false;
        }
    }
    return true;
}

FamilyMember torus_lattice(size_t L) {
    if (L < 2) {
        throw Error(ErrorKind::InvalidArgument, "torus lattice needs L >= 2");
    }
    size_t sq = L * L;
    auto vertex = [&](size_t x, size_t y) { return (y % L) * L + (x % L); };
    SurfaceEmbedding emb;
    emb.edge_ends.resize(2 * sq);
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            emb.edge_ends[y * L + x] = {vertex(x, y), vertex(x + 1, y)};
            emb.edge_ends[sq + y * L + x] = {vertex(x, y), vertex(x, y + 1)};
        }
    }
    auto h = [&](size_t x, size_t y) { return vertex(x, y); };
    auto v = [&](size_t x, size_t y) { return sq + vertex(x, y); };
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            emb.faces.push_back({{h(x, y), true}, {v(x + 1, y), true}, {h(x, y + 1), false}, {v(x, y), false}});
        }
    }
    return make_member("torus:" + std::to_string(L), CellComplex::from_surface(sq, std::move(emb)));
}

FamilyMember triangulated_torus(size_t L) {
    if (L < 2) {
        throw Error(ErrorKind::InvalidArgument, "triangulated torus needs L >= 2");
    }
    size_t sq = L * L;
    auto vertex = [&](size_t x, size_t y) { return (y % L) * L + (x % L); };
    SurfaceEmbedding emb;
    emb.edge_ends.resize(3 * sq);
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            emb.edge_ends[y * L + x] = {vertex(x, y), vertex(x + 1, y)};
            emb.edge_ends[sq + y * L + x] = {vertex(x, y), vertex(x, y + 1)};
            emb.edge_ends[2 * sq + y * L + x] = {vertex(x, y), vertex(x + 1, y + 1)};
        }
    }
    auto h = [&](size_t x, size_t y) { return vertex(x, y); };
    auto v = [&](size_t x, size_t y) { return sq + vertex(x, y); };
    auto diag = [&](size_t x, size_t y) { return 2 * sq + vertex(x, y); };
    for (size_t y = 0; y < L; y++) {
        for (size_t x = 0; x < L; x++) {
            emb.faces.push_back({{h(x, y), true}, {v(x + 1, y), true}, {diag(x, y), false}});
            emb.faces.push_back({{diag(x, y), true}, {h(x, y + 1), false}, {v(x, y), false}});
        }
    }
    return make_member("tritorus:" + std::to_string(L), CellComplex::from_surface(sq, std::move(emb)));
}

FamilyMember genus_polygon(size_t g) {
    if (g < 1) {
        throw Error(ErrorKind::InvalidArgument, "genus polygon needs g >= 1");
    }
    SurfaceEmbedding emb;
    emb.edge_ends.assign(2 * g, {0, 0});
    std::vector<OrientedEdge> word;
    for (size_t j = 0; j < g; j++) {
        size_t a = 2 * j;
        size_t b = 2 * j + 1;
        word.insert(word.end(), {{a, true}, {b, true}, {a, false}, {b, false}});
    }
    emb.faces.push_back(std::move(word));
    return make_member("genus:" + std::to_string(g), CellComplex::from_surface(1, std::move(emb)));
}

FamilyMember projective_plane() {
    std::vector<std::array<size_t, 3>> triangles = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3},
    };
    return make_member("rp2", from_triangles(6, triangles));
}

FamilyMember tetrahedron_sphere() {
    std::vector<std::array<size_t, 3>> triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return make_member("sphere", from_triangles(4, triangles));
}

FamilyMember edge_subdivide(const FamilyMember &member, size_t rounds) {
    if (rounds < 1) {
        throw Error(ErrorKind::InvalidArgument, "edge subdivision needs at least one round");
    }
    const CellComplex &base = member.complex;
    if (!base.embedding()) {
        throw Error(ErrorKind::InvalidArgument, "edge subdivision needs rotation data");
    }
    size_t vertices = base.cells(0);
    SurfaceEmbedding emb = *base.embedding();
    for (size_t r = 0; r < rounds; r++) {
        size_t num_e = emb.edge_ends.size();
        SurfaceEmbedding next;
        next.edge_ends.resize(2 * num_e);
        for (size_t e = 0; e < num_e; e++) {
            size_t mid = vertices + e;
            next.edge_ends[e] = {emb.edge_ends[e][0], mid};
            next.edge_ends[num_e + e] = {mid, emb.edge_ends[e][1]};
        }
        for (const auto &walk : emb.faces) {
            std::vector<OrientedEdge> longer;
            longer.reserve(2 * walk.size());
            for (const auto &o : walk) {
                if (o.forward) {
                    longer.push_back({o.edge, true});
                    longer.push_back({num_e + o.edge, true});
                } else {
                    longer.push_back({num_e + o.edge, false});
                    longer.push_back({o.edge, false});
                }
            }
            next.faces.push_back(std::move(longer));
        }
        vertices += num_e;
        emb = std::move(next);
    }
    return make_member("subdiv:" + member.descriptor + ":rounds=" + std::to_string(rounds),
                       CellComplex::from_surface(vertices, std::move(emb)));
}

FamilyMember parse_family(std::string_view descriptor) {
    constexpr std::string_view subdiv = "subdiv:";
    constexpr std::string_view rounds_key = ":rounds=";
    if (descriptor.starts_with(subdiv)) {
        size_t at = descriptor.rfind(rounds_key);
        if (at == std::string_view::npos || at < subdiv.size()) {
            throw Error(ErrorKind::Parse, "subdivision descriptor needs ':rounds=R': '" + std::string(descriptor) + "'");
        }
        std::string_view base = descriptor.substr(subdiv.size(), at - subdiv.size());
        size_t rounds = parse_count(descriptor.substr(at + rounds_key.size()), descriptor);
        return edge_subdivide(parse_family(base), rounds);
    }
    if (descriptor == "rp2") {
        return projective_plane();
    }
    if (descriptor == "sphere") {
        return tetrahedron_sphere();
    }
    size_t colon = descriptor.find(':');
    if (colon != std::string_view::npos) {
        std::string_view name = descriptor.substr(0, colon);
        size_t value = parse_count(descriptor.substr(colon + 1), descriptor);
        if (name == "torus") {
            return torus_lattice(value);
        }
        if (name == "tritorus") {
            return triangulated_torus(value);
        }
        if (name == "genus") {
            return genus_polygon(value);
        }
    }
    throw Error(ErrorKind::Parse, "unknown family descriptor '" + std::string(descriptor) + "'");
}

std::vector<BoundReport> bound_scan(std::span<const FamilyMember> members, const BoundScanOptions &options) {
    std::vector<BoundReport> reports(members.size());
    std::vector<std::exception_ptr> failures(members.size());
    parallel_for(members.size(), [&](size_t m) {
        try {
            const FamilyMember &member = members[m];
            HomologicalCode code = homological_code(member.complex, 1, options.code_options);
            if (!code.parameters.d) {
                throw Error(ErrorKind::InvalidArgument,
                            "distance of '" + member.descriptor + "' exceeds the search bound");
            }
            BoundReport &r = reports[m];
            r.descriptor = member.descriptor;
            r.n = code.parameters.n;
            r.k = code.parameters.k;
            r.d = *code.parameters.d;
            auto n = static_cast<int64_t>(r.n);
            auto d2 = static_cast<int64_t>(r.d * r.d);
            r.d2_over_n = Rational(d2, n);
            r.r_delta2_n2 = Rational(static_cast<int64_t>(r.k) * d2, n);
            r.bound_36_satisfied = d2 <= 36 * n;
            r.is_triangulation = member.is_triangulation;
            r.csys_primal = code.primal_systole.weight;
            if (code.dual_systole && code.dual_systole->found) {
                r.csys_dual = code.dual_systole->weight;
            }
            if (options.freedom) {
                const FreedomFunction &ff = *options.freedom;
                double nd = static_cast<double>(r.n);
                double lower = ff.f(nd / ff.c1) * nd / (ff.c1 * ff.c2 * ff.c2);
                r.freedom_ratio = static_cast<double>(d2) / lower;
            }
        } catch (...) {
            failures[m] = std::current_exception();
        }
    });
    for (const auto &failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return reports;
}

bool triangulation_bound_holds(std::span<const BoundReport> reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const BoundReport &r) { return !r.is_triangulation || r.bound_36_satisfied; });
}

}  // namespace syscodes
