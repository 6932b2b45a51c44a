#ifndef SYSCODES_GF2_H
#define SYSCODES_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syscodes {

inline constexpr size_t WORD_BITS = 64;

inline size_t words_for_bits(size_t bits) {
    return (bits + WORD_BITS - 1) / WORD_BITS;
}

/// A vector over Z2, packed 64 coordinates per word. Bits past `size()` in the
/// last word are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t length);

    /// Parses a string of '0'/'1' characters; index 0 is the leftmost character.
    static BitVector from_string(std::string_view bits);
    static BitVector from_support(size_t length, std::span<const size_t> ones);

    size_t size() const {
        return length_;
    }
    bool get(size_t index) const {
        return (words_[index / WORD_BITS] >> (index % WORD_BITS)) & 1;
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index / WORD_BITS] ^= uint64_t{1} << (index % WORD_BITS);
    }

    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> support() const;

    /// Z2 inner product (parity of the common support).
    bool dot(const BitVector &other) const;

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

    /// Sub-vector [begin, begin + count).
    BitVector slice(size_t begin, size_t count) const;
    /// Concatenation (*this | tail).
    BitVector concat(const BitVector &tail) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    std::string str() const;

   private:
    size_t length_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major Z2 matrix; every row is packed into `row_words()` words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, size_t cols);
    /// Rows given as '0'/'1' strings; `cols` is only consulted when `rows` is empty.
    static BitMatrix from_strings(const std::vector<std::string> &rows, size_t cols = 0);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t row_words() const {
        return stride_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * stride_ + c / WORD_BITS] >> (c % WORD_BITS)) & 1;
    }
    void set(size_t r, size_t c, bool value);
    void flip(size_t r, size_t c) {
        data_[r * stride_ + c / WORD_BITS] ^= uint64_t{1} << (c % WORD_BITS);
    }

    std::span<const uint64_t> row_span(size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<uint64_t> row_span(size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    BitVector row(size_t r) const;
    BitVector column(size_t c) const;
    std::vector<BitVector> row_list() const;

    void xor_row_into(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    void append_row(const BitVector &row);

    BitMatrix transpose() const;
    BitVector multiply(const BitVector &v) const;
    BitMatrix multiply(const BitMatrix &other) const;
    BitMatrix select_columns(std::span<const size_t> columns) const;
    bool is_zero() const;

    bool operator==(const BitMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Reduced row echelon form with leftmost pivots. `reduced` holds exactly
/// `rank()` nonzero rows; `pivots[i]` is the pivot column of row i (ascending).
struct EchelonForm {
    BitMatrix reduced;
    std::vector<size_t> pivots;

    size_t rank() const {
        return pivots.size();
    }
    /// Clears every pivot coordinate of `words` by XORing reduced rows into it.
    void reduce(std::span<uint64_t> words) const;
    bool contains(std::span<const uint64_t> words) const;
    bool contains(const BitVector &v) const;
};

EchelonForm row_reduce(const BitMatrix &m);
size_t rank(const BitMatrix &m);
/// Basis of the row space (the nonzero rows of the reduced echelon form).
BitMatrix row_basis(const BitMatrix &m);
/// Basis of {x : m x = 0}, one vector per free column in ascending order.
BitMatrix kernel_basis(const BitMatrix &m);
bool row_space_contains(const BitMatrix &m, const BitVector &v);
/// Basis of {x : r . x = 0 for every row r}. Over Z2 this is the kernel of m.
BitMatrix orthogonal_complement(const BitMatrix &m);
/// Some x with m x = rhs (free variables set to zero), or nullopt.
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &rhs);
/// True when both matrices have the same column count and equal row spaces.
bool same_row_space(const BitMatrix &a, const BitMatrix &b);

}  // namespace syscodes

#endif
