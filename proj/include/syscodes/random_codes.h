#ifndef SYSCODES_RANDOM_CODES_H
#define SYSCODES_RANDOM_CODES_H

#include <cstdint>
#include <random>

#include "syscodes/css.h"
#include "syscodes/stabilizer.h"

namespace syscodes {

using Rng = std::mt19937_64;

inline constexpr uint64_t DEFAULT_SEED = 20240611;

/// Uniformly random generators of an l-generator stabilizer group on n qubits
/// (l <= n). Signs are random; rows are drawn until commuting and independent.
StabilizerCode random_stabilizer_code(size_t n, size_t l, Rng &rng);

/// Random CSS code on n qubits with at least one logical qubit. v1 has
/// dimension k1 and v2 is a random k2-dimensional subspace of v1^perp.
CssCode random_css_code(size_t n, size_t k1, size_t k2, Rng &rng);

}  // namespace syscodes

#endif
