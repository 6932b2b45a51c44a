#include "syscodes/random_codes.h"

#include "syscodes/error.h"

namespace syscodes {

namespace {

BitVector random_vector(size_t n, Rng &rng) {
    BitVector v(n);
    std::bernoulli_distribution coin(0.5);
    for (size_t i = 0; i < n; i++) {
        v.set(i, coin(rng));
    }
    return v;
}

// `count` random independent rows from the row space of `basis`.
BitMatrix random_subspace(const BitMatrix &basis, size_t count, Rng &rng) {
    BitMatrix out(0, basis.cols());
    while (out.rows() < count) {
        BitVector coeffs = random_vector(basis.rows(), rng);
        BitVector row(basis.cols());
        for (size_t r : coeffs.support()) {
            row ^= basis.row(r);
        }
        if (!row.is_zero() && !row_space_contains(out, row)) {
            out.append_row(row);
        }
    }
    return out;
}

}  // namespace

StabilizerCode random_stabilizer_code(size_t n, size_t l, Rng &rng) {
    if (n == 0 || l > n) {
        throw Error(ErrorKind::InvalidArgument, "need 1 <= n and l <= n");
    }
    std::vector<PauliElement> gens;
    BitMatrix rows(0, 2 * n);
    std::bernoulli_distribution coin(0.5);
    while (gens.size() < l) {
        BitVector v = random_vector(2 * n, rng);
        if (v.is_zero() || row_space_contains(rows, v)) {
            continue;
        }
        bool commutes = true;
        for (size_t r = 0; r < rows.rows() && commutes; r++) {
            commutes = !twisted_product(rows.row(r), v);
        }
        if (!commutes) {
            continue;
        }
        rows.append_row(v);
        gens.push_back(PauliElement::from_symplectic(v, coin(rng) ? 2 : 0));
    }
    return validate_group(gens, n);
}

CssCode random_css_code(size_t n, size_t k1, size_t k2, Rng &rng) {
    if (k1 + k2 >= n) {
        throw Error(ErrorKind::InvalidArgument, "need k1 + k2 < n for a logical qubit");
    }
    BitMatrix v1 = random_subspace(BitMatrix::identity(n), k1, rng);
    BitMatrix v2 = random_subspace(orthogonal_complement(v1), k2, rng);
    return build_css(v1, v2);
}

}  // namespace syscodes
