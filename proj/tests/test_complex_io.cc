#include <gtest/gtest.h>

#include "syscodes/complex_io.h"
#include "syscodes/error.h"
#include "syscodes/surface_family.h"

using namespace syscodes;

namespace {

std::string parse_error(const std::string &text) {
    try {
        parse_input(text);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse) << e.what();
        return e.what();
    }
    ADD_FAILURE() << "expected a parse error for " << text;
    return "";
}

}  // namespace

TEST(ComplexIo, RoundTripsGeneratedSurfaces) {
    for (const char *d : {"torus:3", "rp2", "genus:2"}) {
        CellComplex c = parse_family(d).complex;
        InputFile file = parse_input(complex_to_json(c));
        ASSERT_TRUE(file.complex);
        EXPECT_EQ(file.complex->cell_counts(), c.cell_counts());
        for (size_t p = 1; p <= 2; p++) {
            EXPECT_EQ(file.complex->boundary(p), c.boundary(p));
        }
    }
}

TEST(ComplexIo, LabelsTrustAndRepeatedIndices) {
    InputFile f = parse_input(R"({"dims": [2, 2], "boundary": [[[0, 1], [0, 1, 1, 1]]],
                                 "labels": [["a", "b"], ["e", "f"]], "closed_surface": false})");
    ASSERT_TRUE(f.complex);
    EXPECT_EQ(f.complex->labels()[1][1], "f");
    EXPECT_FALSE(f.complex->trusted_closed_surface());
    EXPECT_TRUE(f.complex->boundary(1).get(0, 1));
    EXPECT_TRUE(f.complex->boundary(1).get(1, 1));
}

TEST(ComplexIo, TrustedSurfaceGetsADual) {
    CellComplex c = parse_family("torus:2").complex;
    CellComplex plain(c.cell_counts(), {c.boundary(1), c.boundary(2)});
    plain.set_trusted_closed_surface(true);
    InputFile f = parse_input(complex_to_json(plain));
    ASSERT_TRUE(f.complex->trusted_closed_surface());
    HomologicalCode code = homological_code(*f.complex, 1);
    EXPECT_TRUE(code.dual_systole);
    EXPECT_EQ(code.parameters.str(), "[[8,2,2]]");
}

TEST(ComplexIo, CssContainer) {
    InputFile f = parse_input(R"({"n": 4, "v1": [[0, 1, 2, 3]], "v2": [[0, 1, 2, 3]]})");
    ASSERT_TRUE(f.css);
    EXPECT_EQ(f.css->num_logical(), 2u);
    EXPECT_EQ(css_distance(*f.css).weight, 2u);
    try {
        parse_input(R"({"n": 3, "v1": [[0]], "v2": [[0]]})");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOrthogonal);
    }
}

TEST(ComplexIo, ErrorsNameTheField) {
    EXPECT_NE(parse_error("{not json").find("JSON"), std::string::npos);
    EXPECT_NE(parse_error("[]").find("<root>"), std::string::npos);
    EXPECT_NE(parse_error(R"({"boundary": []})").find("'dims'"), std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, 1]})").find("'boundary'"), std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, "x"], "boundary": [[[0, 1]]]})").find("'dims[1]'"), std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, 1], "boundary": [[[0, 5]]]})").find("'boundary[0][0][1]'"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, 2], "boundary": [[[0, 1]]]})").find("'boundary[0]'"), std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, 1], "boundary": [[[0, 1]]], "closed_surface": 1})")
                  .find("'closed_surface'"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"dims": [2, 1], "boundary": [[[0, 1]]], "labels": [["a"], ["e"]]})")
                  .find("'labels[0]'"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 2, "v1": [[0, 2]], "v2": []})").find("'v1[0][1]'"), std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 2, "v1": []})").find("'v2'"), std::string::npos);
}

TEST(ComplexIo, NonComplexIsRejected) {
    // dims [3, 3, 1] with a face whose boundary is not a cycle.
    try {
        parse_input(R"({"dims": [3, 3, 1], "boundary": [[[0, 1], [1, 2], [0, 2]], [[0, 1]]]})");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BoundarySquareNonzero);
    }
}

TEST(ComplexIo, MissingFile) {
    EXPECT_THROW(load_input("/nonexistent/complex.json"), Error);
}
