#include "syscodes/css.h"

#include "syscodes/error.h"

namespace syscodes {

CssCode::CssCode(BitMatrix v1, BitMatrix v2, StabilizerCode stabilizer)
    : v1_(std::move(v1)), v2_(std::move(v2)), stabilizer_(std::move(stabilizer)) {
}

CssCode build_css(const BitMatrix &v1, const BitMatrix &v2) {
    if (v1.cols() != v2.cols()) {
        throw Error(ErrorKind::LengthMismatch, "V1 and V2 live in spaces of different length");
    }
    size_t n = v1.cols();
    for (size_t i = 0; i < v1.rows(); i++) {
        BitVector a = v1.row(i);
        for (size_t j = 0; j < v2.rows(); j++) {
            if (a.dot(v2.row(j))) {
                throw Error(ErrorKind::NotOrthogonal,
                            "row " + std::to_string(i) + " of V1 and row " + std::to_string(j) + " of V2 have odd overlap",
                            i, j);
            }
        }
    }
    if (rank(v1) != v1.rows()) {
        throw Error(ErrorKind::Dependent, "rows of V1 are linearly dependent", NO_INDEX, 1);
    }
    if (rank(v2) != v2.rows()) {
        throw Error(ErrorKind::Dependent, "rows of V2 are linearly dependent", NO_INDEX, 2);
    }

    std::vector<PauliElement> generators;
    generators.reserve(v1.rows() + v2.rows());
    for (size_t i = 0; i < v1.rows(); i++) {
        generators.emplace_back(v1.row(i), BitVector(n));
    }
    for (size_t j = 0; j < v2.rows(); j++) {
        generators.emplace_back(BitVector(n), v2.row(j));
    }
    StabilizerCode stabilizer = validate_group(generators, n);
    return CssCode(v1, v2, std::move(stabilizer));
}

CssDistance css_distance(const CssCode &code, std::optional<size_t> max_weight) {
    if (code.num_logical() == 0) {
        throw Error(ErrorKind::ZeroLogicalQubits, "distance is undefined for a code with no logical qubits");
    }
    size_t n = code.num_qubits();
    size_t bound = max_weight.value_or(n);

    CssDistance out;
    out.x_sector = min_weight_outside(code.v2(), code.v1(), bound);
    out.z_sector = min_weight_outside(code.v1(), code.v2(), bound);

    bool take_x = out.x_sector.found && (!out.z_sector.found || out.x_sector.weight <= out.z_sector.weight);
    if (take_x) {
        out.found = true;
        out.weight = out.x_sector.weight;
        out.witness = out.x_sector.witness.concat(BitVector(n));
    } else if (out.z_sector.found) {
        out.found = true;
        out.weight = out.z_sector.weight;
        out.witness = BitVector(n).concat(out.z_sector.witness);
    }
    return out;
}

}  // namespace syscodes
