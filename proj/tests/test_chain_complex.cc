#include <gtest/gtest.h>

#include <map>

#include "oracle.h"
#include "random_util.h"
#include "syscodes/chain_complex.h"
#include "syscodes/error.h"
#include "syscodes/surface_family.h"

using namespace syscodes;

namespace {

CellComplex circle(size_t m) {
    BitMatrix d1(m, m);
    for (size_t e = 0; e < m; e++) {
        d1.flip(e, e);
        d1.flip((e + 1) % m, e);
    }
    return CellComplex({m, m}, {d1});
}

std::vector<FamilyMember> surfaces() {
    std::vector<FamilyMember> out;
    for (const char *d : {"torus:2", "torus:3", "torus:4", "tritorus:2", "tritorus:3", "genus:1", "genus:2", "genus:3",
                          "rp2", "sphere", "subdiv:torus:2:rounds=1", "subdiv:rp2:rounds=2", "subdiv:genus:2:rounds=1"}) {
        out.push_back(parse_family(d));
    }
    return out;
}

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(CellComplex, ShapesAreChecked) {
    EXPECT_THROW(CellComplex({2, 3}, {BitMatrix(3, 2)}), Error);
    EXPECT_THROW(CellComplex({2, 3, 1}, {BitMatrix(2, 3)}), Error);
    CellComplex c({3, 3}, {BitMatrix(3, 3)});
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_EQ(c.boundary(0).cols(), 3u);
    EXPECT_EQ(c.boundary(2).rows(), 3u);
    EXPECT_EQ(c.boundary(2).cols(), 0u);
}

TEST(ValidateComplex, Examples) {
    FamilyMember torus = torus_lattice(2);
    EXPECT_NO_THROW(validate_complex(torus.complex));
    EXPECT_NO_THROW(validate_complex(circle(3)));

    std::vector<BitMatrix> maps = {torus.complex.boundary(1), torus.complex.boundary(2)};
    maps[1].flip(0, 0);
    CellComplex broken(torus.complex.cell_counts(), maps);
    try {
        validate_complex(broken);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundarySquareNonzero);
        EXPECT_EQ(e.first(), 1u);
        EXPECT_EQ(e.second(), 0u);
    }
}

TEST(HomologyDim, Examples) {
    for (size_t L = 2; L <= 5; L++) {
        EXPECT_EQ(homology_dim(torus_lattice(L).complex, 1).dim_h, 2u);
    }
    EXPECT_EQ(homology_dim(tetrahedron_sphere().complex, 1).dim_h, 0u);
    HomologySummary rp2 = homology_dim(projective_plane().complex, 1);
    EXPECT_EQ(rp2.dim_h, 1u);
    EXPECT_EQ(rp2.dim_b, 9u);
    EXPECT_EQ(rp2.dim_z, 10u);
    EXPECT_EQ(rank(projective_plane().complex.boundary(1)), 5u);
    EXPECT_EQ(homology_dim(tetrahedron_sphere().complex, 0).dim_h, 1u);
    EXPECT_EQ(homology_dim(tetrahedron_sphere().complex, 2).dim_h, 1u);
}

TEST(HomologyDim, EulerCharacteristicFromBetti) {
    for (const auto &m : surfaces()) {
        long alt = 0;
        for (size_t p = 0; p <= 2; p++) {
            long h = static_cast<long>(homology_dim(m.complex, p).dim_h);
            alt += p % 2 ? -h : h;
        }
        EXPECT_EQ(alt, m.complex.euler_characteristic()) << m.descriptor;
    }
}

TEST(Coboundary, ZeroChainAndShape) {
    CellComplex c = torus_lattice(3).complex;
    BitMatrix delta = coboundary_matrix(c, 1);
    EXPECT_EQ(delta.rows(), 9u);
    EXPECT_EQ(delta.cols(), 18u);
    EXPECT_TRUE(delta.multiply(BitVector(18)).is_zero());
    EXPECT_EQ(delta, c.boundary(2).transpose());
    EXPECT_THROW(coboundary_matrix(c, 2), Error);
}

TEST(BoundariesAreCycles, EveryGeneratedSurface) {
    for (const auto &m : surfaces()) {
        for (size_t p = 0; p <= 2; p++) {
            BitMatrix b = boundary_rows(m.complex, p);
            for (size_t r = 0; r < b.rows(); r++) {
                EXPECT_TRUE(m.complex.boundary(p).multiply(b.row(r)).is_zero()) << m.descriptor;
            }
        }
    }
}

TEST(Systole, Examples) {
    for (size_t m = 3; m <= 7; m++) {
        SearchResult r = combinatorial_systole(circle(m), 1);
        ASSERT_TRUE(r.found);
        EXPECT_EQ(r.weight, m);
    }
    for (size_t L = 2; L <= 3; L++) {
        CellComplex c = torus_lattice(L).complex;
        auto expected = oracle::systole(c.boundary(1), c.boundary(2));
        ASSERT_TRUE(expected);
        EXPECT_EQ(*expected, L);
        EXPECT_EQ(combinatorial_systole(c, 1).weight, L);
        EXPECT_EQ(combinatorial_systole(c, 1, SIZE_MAX, SystoleMethod::WeightIncremental).weight, L);
    }
    EXPECT_EQ(kind_of([] { combinatorial_systole(tetrahedron_sphere().complex, 1); }), ErrorKind::TrivialHomology);
}

TEST(Systole, MethodsAgreeAndMatchOracle) {
    for (const auto &m : surfaces()) {
        const CellComplex &c = m.complex;
        if (homology_dim(c, 1).dim_h == 0) {
            continue;
        }
        SearchResult graph = combinatorial_systole(c, 1, SIZE_MAX, SystoleMethod::GraphCycles);
        // Support enumeration is only affordable for short systoles on few edges.
        if (c.cells(1) <= 32 && graph.weight <= 6) {
            SearchResult incremental = combinatorial_systole(c, 1, SIZE_MAX, SystoleMethod::WeightIncremental);
            EXPECT_EQ(graph.weight, incremental.weight) << m.descriptor;
        }
        EXPECT_TRUE(c.boundary(1).multiply(graph.witness).is_zero());
        EXPECT_FALSE(row_space_contains(boundary_rows(c, 1), graph.witness));
        if (c.cells(1) <= 18) {
            EXPECT_EQ(graph.weight, *oracle::systole(c.boundary(1), c.boundary(2))) << m.descriptor;
        }
    }
}

TEST(Systole, RandomGraphsAgreeWithOracle) {
    std::mt19937_64 rng(testutil::SEED);
    for (int t = 0; t < 60; t++) {
        size_t v = 1 + rng() % 6;
        size_t e = 1 + rng() % 10;
        BitMatrix d1(v, e);
        for (size_t j = 0; j < e; j++) {
            size_t a = rng() % v;
            size_t b = rng() % v;
            if (a != b) {
                d1.flip(a, j);
                d1.flip(b, j);
            }
        }
        CellComplex c({v, e}, {d1});
        if (homology_dim(c, 1).dim_h == 0) {
            EXPECT_THROW(combinatorial_systole(c, 1), Error);
            continue;
        }
        auto expected = oracle::systole(c.boundary(1), c.boundary(2));
        SearchResult graph = combinatorial_systole(c, 1, SIZE_MAX, SystoleMethod::GraphCycles);
        SearchResult incremental = combinatorial_systole(c, 1, SIZE_MAX, SystoleMethod::WeightIncremental);
        EXPECT_EQ(graph.weight, *expected);
        EXPECT_EQ(incremental.weight, *expected);
    }
}

TEST(Systole, HigherDimensionsUseWeightSearch) {
    // p = 2 on the torus: the fundamental class uses every face.
    CellComplex c = torus_lattice(2).complex;
    EXPECT_EQ(combinatorial_systole(c, 2).weight, 4u);
    EXPECT_THROW(combinatorial_systole(c, 2, SIZE_MAX, SystoleMethod::GraphCycles), Error);
    SearchResult bounded = combinatorial_systole(c, 2, 3);
    EXPECT_FALSE(bounded.found);
}

TEST(ClosedSurface, GeneratedSurfacesPass) {
    for (const auto &m : surfaces()) {
        EXPECT_TRUE(is_closed_surface(m.complex)) << m.descriptor;
    }
    EXPECT_FALSE(is_closed_surface(circle(4)));
}

TEST(ClosedSurface, BrokenRotationDataFails) {
    SurfaceEmbedding emb = *torus_lattice(2).complex.embedding();
    emb.faces.pop_back();
    EXPECT_EQ(kind_of([&] { check_closed_surface(CellComplex::from_surface(4, emb)); }), ErrorKind::NotClosedSurface);

    // Two tetrahedra glued at a vertex: edges are fine, the vertex link is not a single cycle.
    std::vector<std::array<size_t, 3>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                               {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}};
    SurfaceEmbedding pinched;
    std::map<std::pair<size_t, size_t>, size_t> index;
    auto edge = [&](size_t a, size_t b) {
        auto key = std::minmax(a, b);
        auto [it, inserted] = index.emplace(key, pinched.edge_ends.size());
        if (inserted) {
            pinched.edge_ends.push_back({key.first, key.second});
        }
        return OrientedEdge{it->second, a < b};
    };
    for (const auto &t : tris) {
        pinched.faces.push_back({edge(t[0], t[1]), edge(t[1], t[2]), edge(t[2], t[0])});
    }
    EXPECT_EQ(kind_of([&] { check_closed_surface(CellComplex::from_surface(7, pinched)); }),
              ErrorKind::NotClosedSurface);
}

TEST(ClosedSurface, TrustFlagWithoutRotationData) {
    CellComplex plain(torus_lattice(2).complex.cell_counts(),
                      {torus_lattice(2).complex.boundary(1), torus_lattice(2).complex.boundary(2)});
    EXPECT_FALSE(is_closed_surface(plain));
    plain.set_trusted_closed_surface(true);
    EXPECT_TRUE(is_closed_surface(plain));
    CellComplex dual = dual_surface_cellulation(plain);
    EXPECT_EQ(dual.cell_counts(), (std::vector<size_t>{4, 8, 4}));
}

TEST(Dual, TetrahedronIsSelfDual) {
    CellComplex dual = dual_surface_cellulation(tetrahedron_sphere().complex);
    EXPECT_EQ(dual.cell_counts(), (std::vector<size_t>{4, 6, 4}));
    EXPECT_NO_THROW(validate_complex(dual));
    EXPECT_EQ(dual.euler_characteristic(), 2);
    EXPECT_TRUE(is_closed_surface(dual));
}

TEST(Dual, TorusDualIsASquareTorus) {
    for (size_t L = 2; L <= 4; L++) {
        CellComplex dual = dual_surface_cellulation(torus_lattice(L).complex);
        EXPECT_EQ(dual.cell_counts(), (std::vector<size_t>{L * L, 2 * L * L, L * L}));
        ASSERT_TRUE(dual.embedding());
        for (const auto &walk : dual.embedding()->faces) {
            EXPECT_EQ(walk.size(), 4u);
        }
        BitMatrix d1 = dual.boundary(1);
        for (size_t v = 0; v < d1.rows(); v++) {
            EXPECT_EQ(d1.row(v).weight(), 4u);
        }
        EXPECT_EQ(homology_dim(dual, 1).dim_h, 2u);
        EXPECT_EQ(combinatorial_systole(dual, 1).weight, L);
    }
}

TEST(Dual, CoboundaryOfDualIsBoundary) {
    for (const auto &m : surfaces()) {
        CellComplex dual = dual_surface_cellulation(m.complex);
        EXPECT_NO_THROW(validate_complex(dual));
        for (size_t p = 1; p <= 2; p++) {
            EXPECT_EQ(coboundary_matrix(dual, 2 - p), m.complex.boundary(p)) << m.descriptor;
        }
    }
}

TEST(Dual, SpanIdentities) {
    for (const auto &m : surfaces()) {
        CellComplex dual = dual_surface_cellulation(m.complex);
        for (size_t i = 0; i <= 2; i++) {
            EXPECT_TRUE(same_row_space(orthogonal_complement(boundary_rows(m.complex, i)), cycle_basis(dual, 2 - i)))
                << m.descriptor << " i=" << i;
            EXPECT_TRUE(same_row_space(orthogonal_complement(cycle_basis(m.complex, i)), boundary_rows(dual, 2 - i)))
                << m.descriptor << " i=" << i;
        }
    }
}

TEST(Dual, DualOfDualMatchesOriginal) {
    for (const auto &m : surfaces()) {
        CellComplex twice = dual_surface_cellulation(dual_surface_cellulation(m.complex));
        EXPECT_EQ(twice.cell_counts(), m.complex.cell_counts());
        for (size_t p = 1; p <= 2; p++) {
            EXPECT_EQ(rank(twice.boundary(p)), rank(m.complex.boundary(p)));
        }
    }
}

TEST(Dual, LabelsFollowTheCells) {
    CellComplex c = torus_lattice(2).complex;
    std::vector<std::vector<std::string>> labels(3);
    for (size_t p = 0; p <= 2; p++) {
        for (size_t j = 0; j < c.cells(p); j++) {
            labels[p].push_back("c" + std::to_string(p) + "_" + std::to_string(j));
        }
    }
    c.set_labels(labels);
    CellComplex dual = dual_surface_cellulation(c);
    EXPECT_EQ(dual.labels()[0][0], "c2_0");
    EXPECT_EQ(dual.labels()[2][3], "c0_3");
    EXPECT_THROW(c.set_labels({{"only one"}}), Error);
}

TEST(HomologicalCode, Examples) {
    HomologicalCode t2 = homological_code(torus_lattice(2).complex, 1);
    EXPECT_EQ(t2.parameters.str(), "[[8,2,2]]");
    EXPECT_TRUE(t2.css_check);
    HomologicalCode t3 = homological_code(torus_lattice(3).complex, 1);
    EXPECT_EQ(t3.parameters.str(), "[[18,2,3]]");

    CellComplex rp2 = projective_plane().complex;
    HomologicalCode code = homological_code(rp2, 1);
    CellComplex dual = dual_surface_cellulation(rp2);
    size_t primal = *oracle::systole(rp2.boundary(1), rp2.boundary(2));
    size_t dual_sys = *oracle::systole(dual.boundary(1), dual.boundary(2));
    EXPECT_EQ(primal, 3u);
    EXPECT_EQ(code.primal_systole.weight, primal);
    EXPECT_EQ(code.dual_systole->weight, dual_sys);
    EXPECT_EQ(code.parameters.n, 15u);
    EXPECT_EQ(code.parameters.k, 1u);
    EXPECT_EQ(*code.parameters.d, std::min(primal, dual_sys));
}

TEST(HomologicalCode, SystoleRouteMatchesCssDistance) {
    for (const auto &m : surfaces()) {
        if (homology_dim(m.complex, 1).dim_h == 0 || m.complex.cells(1) > 20) {
            continue;
        }
        HomologicalCodeOptions opts;
        opts.cross_check = false;
        HomologicalCode code = homological_code(m.complex, 1, opts);
        CssDistance full = css_distance(code.css);
        EXPECT_EQ(*code.parameters.d, full.weight) << m.descriptor;
    }
}

TEST(HomologicalCode, OtherDimensionsAndNonSurfaces) {
    // i = 0 and i = 2 on the torus give repetition-like codes with k = 1.
    HomologicalCode c0 = homological_code(torus_lattice(3).complex, 0);
    EXPECT_EQ(c0.parameters.k, 1u);
    EXPECT_EQ(*c0.parameters.d, 1u);
    HomologicalCode c2 = homological_code(torus_lattice(3).complex, 2);
    EXPECT_EQ(c2.parameters.k, 1u);
    EXPECT_EQ(*c2.parameters.d, 1u);
    HomologicalCode ring = homological_code(circle(5), 1);
    EXPECT_FALSE(ring.dual_systole);
    EXPECT_EQ(ring.parameters.str(), "[[5,1,1]]");
    EXPECT_EQ(kind_of([] { homological_code(tetrahedron_sphere().complex, 1); }), ErrorKind::TrivialHomology);
    EXPECT_THROW(homological_code(torus_lattice(2).complex, 3), Error);
}

TEST(EulerCharacteristic, InvariantUnderSubdivision) {
    for (const char *base : {"torus:2", "genus:2", "rp2", "sphere", "tritorus:2"}) {
        FamilyMember m = parse_family(base);
        for (size_t r = 1; r <= 3; r++) {
            EXPECT_EQ(edge_subdivide(m, r).complex.euler_characteristic(), m.complex.euler_characteristic());
        }
    }
}
