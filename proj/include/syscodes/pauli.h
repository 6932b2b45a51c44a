#ifndef SYSCODES_PAULI_H
#define SYSCODES_PAULI_H

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>

#include "syscodes/gf2.h"

namespace syscodes {

enum class PauliLetter : uint8_t { I, X, Y, Z };

/// An element of the n-qubit Pauli group.
///
/// The symplectic image is (x | z): position q has x set where the factor is X
/// or Y and z set where it is Z or Y. Qubit 0 is the leftmost tensor factor.
///
/// Internally the unsigned word uses Ybar = ZX = iY, so the element is
/// i^e * prod_q Z^{z_q} X^{x_q}. Products then only need the x.z overlap to
/// update e. `phase_exp()` reports the phase relative to the Hermitian letters
/// I, X, Y, Z instead, which is what the text form prints.
class PauliElement {
   public:
    PauliElement() = default;
    /// Identity on n qubits.
    explicit PauliElement(size_t n);
    /// i^{phase_exp} times the letter word described by (x | z).
    PauliElement(BitVector x_part, BitVector z_part, unsigned phase_exp = 0);

    /// Accepts an optional leading sign ("+", "-", "i", "+i", "-i") followed by
    /// letters from IXYZ ('_' is also read as I).
    static PauliElement parse(std::string_view text);
    static PauliElement from_symplectic(const BitVector &xz, unsigned phase_exp = 0);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVector &x_part() const {
        return x_;
    }
    const BitVector &z_part() const {
        return z_;
    }
    /// Exponent of i in front of the letter word, mod 4.
    unsigned phase_exp() const;
    /// Exponent of i in front of prod Z^z X^x, mod 4.
    unsigned ybar_phase_exp() const {
        return ybar_phase_;
    }
    bool is_hermitian() const {
        return phase_exp() % 2 == 0;
    }

    PauliLetter letter(size_t q) const;
    BitVector symplectic() const;
    size_t weight() const;
    bool commutes_with(const PauliElement &other) const;

    std::string str() const;

    friend PauliElement operator*(const PauliElement &a, const PauliElement &b);
    bool operator==(const PauliElement &other) const = default;

   private:
    BitVector x_;
    BitVector z_;
    unsigned ybar_phase_ = 0;
};

/// Same as PauliElement::parse; fails on an empty word.
PauliElement encode(std::string_view word);
PauliElement multiply(const PauliElement &a, const PauliElement &b);
size_t weight(const PauliElement &a);

/// (a | b) * (a' | b') = a.b' + a'.b over Z2.
bool twisted_product(const BitVector &u, const BitVector &v);

/// Solves G Lambda x^T = e_target for linearly independent rows G, giving a
/// symplectic vector that commutes with every row except `target`.
BitVector anticommuting_partner(const BitMatrix &generators, size_t target);

inline constexpr size_t DENSE_QUBIT_LIMIT = 6;

/// Explicit 2^n x 2^n matrix; n is capped at DENSE_QUBIT_LIMIT.
Eigen::MatrixXcd dense_matrix(const PauliElement &a);

}  // namespace syscodes

#endif
