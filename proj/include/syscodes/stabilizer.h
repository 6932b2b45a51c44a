#ifndef SYSCODES_STABILIZER_H
#define SYSCODES_STABILIZER_H

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syscodes/gf2.h"
#include "syscodes/pauli.h"
#include "syscodes/search.h"

namespace syscodes {

using Rational = boost::rational<int64_t>;

struct CodeParameters {
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> d;

    Rational rate() const;
    std::optional<Rational> relative_distance() const;
    /// "[[n,k,d]]", with d printed as '?' when unknown.
    std::string str() const;
};

/// A stabilizer group that passed validation: pairwise commuting, Hermitian,
/// symplectically independent generators whose group does not contain -I.
class StabilizerCode {
   public:
    size_t num_qubits() const {
        return n_;
    }
    size_t num_generators() const {
        return generators_.size();
    }
    size_t num_logical() const {
        return n_ - generators_.size();
    }
    const std::vector<PauliElement> &generators() const {
        return generators_;
    }
    /// l x 2n matrix of symplectic images in (x | z) layout.
    const BitMatrix &check_matrix() const {
        return check_matrix_;
    }

    /// Twisted products of `error` (length 2n) with each generator.
    BitVector syndrome(const BitVector &error) const;
    /// Signed Pauli words, one per generator.
    std::vector<std::string> to_words() const;

   private:
    friend StabilizerCode validate_group(std::span<const PauliElement> generators, size_t n);
    StabilizerCode(size_t n, std::vector<PauliElement> generators, BitMatrix check_matrix);

    size_t n_ = 0;
    std::vector<PauliElement> generators_;
    BitMatrix check_matrix_;
};

/// Validates a generator list for an n-qubit code.
///
/// Checks, in order: qubit counts, pairwise commutation (AntiCommuting(i, j)),
/// real phases (PhaseNotReal(i)), and then runs an elimination over the
/// symplectic rows that carries each row's Pauli product along. A row that
/// reduces to the zero vector has been rewritten as a product of earlier
/// generators equal to +I (Dependent(i)) or -I (MinusIdentity(i)).
StabilizerCode validate_group(std::span<const PauliElement> generators, size_t n);
StabilizerCode validate_words(const std::vector<std::string> &words, size_t n = 0);

CodeParameters code_parameters(const StabilizerCode &code);

/// Minimum weight of a symplectic vector that commutes with every generator
/// but lies outside their span. `max_weight` defaults to n.
SearchResult distance(const StabilizerCode &code, std::optional<size_t> max_weight = std::nullopt);

/// Rank of prod_j (I + g_j) / 2 built from dense matrices (n <= 6).
size_t dense_fixed_dim(const StabilizerCode &code);

}  // namespace syscodes

#endif
