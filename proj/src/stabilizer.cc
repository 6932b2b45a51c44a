#include "syscodes/stabilizer.h"

#include "syscodes/error.h"

namespace syscodes {

Rational CodeParameters::rate() const {
    if (n == 0) {
        return Rational(0);
    }
    return Rational(static_cast<int64_t>(k), static_cast<int64_t>(n));
}

std::optional<Rational> CodeParameters::relative_distance() const {
    if (!d || n == 0) {
        return std::nullopt;
    }
    return Rational(static_cast<int64_t>(*d), static_cast<int64_t>(n));
}

std::string CodeParameters::str() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : "?") + "]]";
}

StabilizerCode::StabilizerCode(size_t n, std::vector<PauliElement> generators, BitMatrix check_matrix)
    : n_(n), generators_(std::move(generators)), check_matrix_(std::move(check_matrix)) {
}

BitVector StabilizerCode::syndrome(const BitVector &error) const {
    BitVector s(generators_.size());
    for (size_t j = 0; j < generators_.size(); j++) {
        s.set(j, twisted_product(check_matrix_.row(j), error));
    }
    return s;
}

std::vector<std::string> StabilizerCode::to_words() const {
    std::vector<std::string> out;
    for (const auto &g : generators_) {
        out.push_back(g.str());
    }
    return out;
}

StabilizerCode validate_group(std::span<const PauliElement> generators, size_t n) {
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != n) {
            throw Error(ErrorKind::LengthMismatch,
                        "generator " + std::to_string(i) + " acts on " + std::to_string(generators[i].num_qubits()) +
                            " qubits, expected " + std::to_string(n),
                        i);
        }
    }
    std::vector<BitVector> images;
    images.reserve(generators.size());
    for (const auto &g : generators) {
        images.push_back(g.symplectic());
    }
    for (size_t i = 0; i < images.size(); i++) {
        for (size_t j = i + 1; j < images.size(); j++) {
            if (twisted_product(images[i], images[j])) {
                throw Error(ErrorKind::AntiCommuting,
                            "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute", i, j);
            }
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        if (!generators[i].is_hermitian()) {
            throw Error(ErrorKind::PhaseNotReal, "generator " + std::to_string(i) + " has an imaginary phase", i);
        }
    }

    // Incremental elimination. Each basis entry keeps the Pauli product whose
    // image is the reduced row; pivots are the lowest set coordinate.
    struct Entry {
        PauliElement element;
        BitVector image;
        size_t pivot;
    };
    std::vector<Entry> basis;
    for (size_t i = 0; i < generators.size(); i++) {
        PauliElement current = generators[i];
        BitVector image = images[i];
        for (const auto &entry : basis) {
            if (image.get(entry.pivot)) {
                image ^= entry.image;
                current = current * entry.element;
            }
        }
        if (image.is_zero()) {
            // The generators commute and are Hermitian, so the product is +I or -I.
            if (current.phase_exp() == 2) {
                throw Error(ErrorKind::MinusIdentity,
                            "generator " + std::to_string(i) + " times earlier generators gives -I", i);
            }
            throw Error(ErrorKind::Dependent,
                        "generator " + std::to_string(i) + " is a product of earlier generators", i);
        }
        size_t pivot = image.support().front();
        basis.push_back(Entry{std::move(current), std::move(image), pivot});
    }

    std::vector<PauliElement> kept(generators.begin(), generators.end());
    return StabilizerCode(n, std::move(kept), BitMatrix::from_rows(images, 2 * n));
}

StabilizerCode validate_words(const std::vector<std::string> &words, size_t n) {
    std::vector<PauliElement> gens;
    gens.reserve(words.size());
    for (const auto &w : words) {
        gens.push_back(PauliElement::parse(w));
    }
    if (!gens.empty()) {
        n = gens.front().num_qubits();
    }
    return validate_group(gens, n);
}

CodeParameters code_parameters(const StabilizerCode &code) {
    return CodeParameters{code.num_qubits(), code.num_logical(), std::nullopt};
}

SearchResult distance(const StabilizerCode &code, std::optional<size_t> max_weight) {
    if (code.num_logical() == 0) {
        throw Error(ErrorKind::ZeroLogicalQubits, "distance is undefined for a code with no logical qubits");
    }
    return min_symplectic_weight_outside(code.check_matrix(), code.check_matrix(),
                                         max_weight.value_or(code.num_qubits()));
}

size_t dense_fixed_dim(const StabilizerCode &code) {
    size_t n = code.num_qubits();
    if (n > DENSE_QUBIT_LIMIT) {
        throw Error(ErrorKind::TooLarge, "dense oracle is limited to " + std::to_string(DENSE_QUBIT_LIMIT) + " qubits");
    }
    size_t dim = size_t{1} << n;
    Eigen::MatrixXcd projector = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &g : code.generators()) {
        Eigen::MatrixXcd factor = (Eigen::MatrixXcd::Identity(dim, dim) + dense_matrix(g)) * 0.5;
        projector = projector * factor;
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(projector);
    lu.setThreshold(1e-9);
    return static_cast<size_t>(lu.rank());
}

}  // namespace syscodes
