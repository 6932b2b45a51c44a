#include "syscodes/pauli.h"

#include <bit>
#include <complex>

#include "syscodes/error.h"

namespace syscodes {

namespace {

size_t overlap_count(const BitVector &a, const BitVector &b) {
    BitVector both = a;
    both &= b;
    return both.weight();
}

}  // namespace

PauliElement::PauliElement(size_t n) : x_(n), z_(n), ybar_phase_(0) {
}

PauliElement::PauliElement(BitVector x_part, BitVector z_part, unsigned phase_exp)
    : x_(std::move(x_part)), z_(std::move(z_part)) {
    if (x_.size() != z_.size()) {
        throw Error(ErrorKind::LengthMismatch, "Pauli x and z parts differ in length");
    }
    // Y = -i Ybar, so each Y letter contributes i^3 to the Ybar-relative phase.
    ybar_phase_ = static_cast<unsigned>((phase_exp + 3 * overlap_count(x_, z_)) % 4);
}

PauliElement PauliElement::parse(std::string_view text) {
    unsigned phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) % 4;
        pos++;
    }
    size_t n = text.size() - pos;
    if (n == 0) {
        throw Error(ErrorKind::Parse, "empty Pauli word: '" + std::string(text) + "'");
    }
    BitVector x(n);
    BitVector z(n);
    for (size_t q = 0; q < n; q++) {
        switch (text[pos + q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            default:
                throw Error(ErrorKind::Parse, "unexpected character in Pauli word: '" + std::string(text) + "'");
        }
    }
    return PauliElement(std::move(x), std::move(z), phase);
}

PauliElement PauliElement::from_symplectic(const BitVector &xz, unsigned phase_exp) {
    if (xz.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "symplectic vector must have even length");
    }
    size_t n = xz.size() / 2;
    return PauliElement(xz.slice(0, n), xz.slice(n, n), phase_exp);
}

unsigned PauliElement::phase_exp() const {
    return static_cast<unsigned>((ybar_phase_ + overlap_count(x_, z_)) % 4);
}

PauliLetter PauliElement::letter(size_t q) const {
    bool x = x_.get(q);
    bool z = z_.get(q);
    if (x && z) {
        return PauliLetter::Y;
    }
    if (x) {
        return PauliLetter::X;
    }
    return z ? PauliLetter::Z : PauliLetter::I;
}

BitVector PauliElement::symplectic() const {
    return x_.concat(z_);
}

size_t PauliElement::weight() const {
    BitVector either = x_;
    either |= z_;
    return either.weight();
}

bool PauliElement::commutes_with(const PauliElement &other) const {
    return !twisted_product(symplectic(), other.symplectic());
}

std::string PauliElement::str() const {
    static constexpr const char *signs[] = {"+", "+i", "-", "-i"};
    static constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
    std::string out = signs[phase_exp()];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += letters[static_cast<size_t>(letter(q))];
    }
    return out;
}

PauliElement operator*(const PauliElement &a, const PauliElement &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::LengthMismatch, "Pauli product: qubit counts differ");
    }
    // (Z^b X^a)(Z^d X^c) = (-1)^{a.d} Z^{b+d} X^{a+c}
    PauliElement out;
    out.x_ = a.x_ ^ b.x_;
    out.z_ = a.z_ ^ b.z_;
    out.ybar_phase_ = static_cast<unsigned>((a.ybar_phase_ + b.ybar_phase_ + 2 * overlap_count(a.x_, b.z_)) % 4);
    return out;
}

PauliElement encode(std::string_view word) {
    return PauliElement::parse(word);
}

PauliElement multiply(const PauliElement &a, const PauliElement &b) {
    return a * b;
}

size_t weight(const PauliElement &a) {
    return a.weight();
}

bool twisted_product(const BitVector &u, const BitVector &v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "twisted product needs two vectors of equal even length");
    }
    size_t n = u.size() / 2;
    return u.slice(0, n).dot(v.slice(n, n)) ^ v.slice(0, n).dot(u.slice(n, n));
}

BitVector anticommuting_partner(const BitMatrix &generators, size_t target) {
    if (generators.cols() % 2 != 0) {
        throw Error(ErrorKind::LengthMismatch, "generator rows must have even length");
    }
    if (target >= generators.rows()) {
        throw Error(ErrorKind::InvalidArgument, "target index out of range", target);
    }
    if (rank(generators) != generators.rows()) {
        throw Error(ErrorKind::Dependent, "generator rows are linearly dependent");
    }
    // Row r of G Lambda is r with its x and z halves swapped.
    size_t n = generators.cols() / 2;
    BitMatrix swapped(generators.rows(), generators.cols());
    for (size_t r = 0; r < generators.rows(); r++) {
        for (size_t c = 0; c < 2 * n; c++) {
            if (generators.get(r, c)) {
                swapped.set(r, c < n ? c + n : c - n, true);
            }
        }
    }
    BitVector rhs(generators.rows());
    rhs.set(target, true);
    auto x = solve(swapped, rhs);
    if (!x) {
        throw Error(ErrorKind::Unsolvable, "no anticommuting partner exists", target);
    }
    return *x;
}

Eigen::MatrixXcd dense_matrix(const PauliElement &a) {
    size_t n = a.num_qubits();
    if (n > DENSE_QUBIT_LIMIT) {
        throw Error(ErrorKind::TooLarge, "dense Pauli matrices are limited to " + std::to_string(DENSE_QUBIT_LIMIT) +
                                             " qubits");
    }
    // Basis index bit (n-1-q) holds qubit q, so qubit 0 is the leftmost factor.
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (n - 1 - q);
        if (a.x_part().get(q)) {
            xmask |= bit;
        }
        if (a.z_part().get(q)) {
            zmask |= bit;
        }
    }
    static const std::complex<double> powers_of_i[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> global = powers_of_i[a.ybar_phase_exp()];
    size_t dim = size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        uint64_t row = col ^ xmask;
        bool negative = std::popcount(row & zmask) & 1;
        m(row, col) = negative ? -global : global;
    }
    return m;
}

}  // namespace syscodes
