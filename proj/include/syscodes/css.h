#ifndef SYSCODES_CSS_H
#define SYSCODES_CSS_H

#include <optional>

#include "syscodes/gf2.h"
#include "syscodes/search.h"
#include "syscodes/stabilizer.h"

namespace syscodes {

/// CSS code from two mutually orthogonal subspaces of Z2^n. Rows of `v1`
/// become X-type generators and rows of `v2` Z-type generators.
class CssCode {
   public:
    size_t num_qubits() const {
        return v1_.cols();
    }
    size_t num_logical() const {
        return stabilizer_.num_logical();
    }
    const BitMatrix &v1() const {
        return v1_;
    }
    const BitMatrix &v2() const {
        return v2_;
    }
    const StabilizerCode &stabilizer() const {
        return stabilizer_;
    }

   private:
    friend CssCode build_css(const BitMatrix &v1, const BitMatrix &v2);
    CssCode(BitMatrix v1, BitMatrix v2, StabilizerCode stabilizer);

    BitMatrix v1_;
    BitMatrix v2_;
    StabilizerCode stabilizer_;
};

/// Fails with NotOrthogonal(i, j) for the first odd row pair and Dependent(i)
/// when either basis has a redundant row (`second` is 1 or 2 for the matrix).
CssCode build_css(const BitMatrix &v1, const BitMatrix &v2);

struct CssDistance {
    bool found = false;
    size_t weight = 0;
    /// Symplectic (x | z) witness of the minimising sector.
    BitVector witness;
    /// Minimum weight in V2^perp \ V1 (X-type logicals).
    SearchResult x_sector;
    /// Minimum weight in V1^perp \ V2 (Z-type logicals).
    SearchResult z_sector;
};

/// Minimum over the two classical coset problems; requires k >= 1.
CssDistance css_distance(const CssCode &code, std::optional<size_t> max_weight = std::nullopt);

}  // namespace syscodes

#endif
