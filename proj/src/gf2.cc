#include "syscodes/gf2.h"

#include <algorithm>
#include <bit>

#include "syscodes/error.h"

namespace syscodes {

namespace {

void require_same_length(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw Error(ErrorKind::LengthMismatch,
                    std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

BitVector::BitVector(size_t length) : length_(length), words_(words_for_bits(length), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw Error(ErrorKind::Parse, "bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return v;
}

BitVector BitVector::from_support(size_t length, std::span<const size_t> ones) {
    BitVector v(length);
    for (size_t k : ones) {
        if (k >= length) {
            throw Error(ErrorKind::InvalidArgument, "support index out of range");
        }
        v.flip(k);
    }
    return v;
}

void BitVector::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (index % WORD_BITS);
    if (value) {
        words_[index / WORD_BITS] |= mask;
    } else {
        words_[index / WORD_BITS] &= ~mask;
    }
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * WORD_BITS + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector &other) const {
    require_same_length(length_, other.length_, "dot");
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_length(length_, other.length_, "xor");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_length(length_, other.length_, "and");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_length(length_, other.length_, "or");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::slice(size_t begin, size_t count) const {
    if (begin + count > length_) {
        throw Error(ErrorKind::InvalidArgument, "slice out of range");
    }
    BitVector out(count);
    for (size_t i = 0; i < count; i++) {
        if (get(begin + i)) {
            out.flip(i);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector out(length_ + tail.length_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (size_t i : tail.support()) {
        out.flip(length_ + i);
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(length_, '0');
    for (size_t i = 0; i < length_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        require_same_length(rows[r].size(), cols, "from_rows");
        auto words = rows[r].words();
        std::copy(words.begin(), words.end(), m.row_span(r).begin());
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows, size_t cols) {
    if (!rows.empty()) {
        cols = rows[0].size();
    }
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto &s : rows) {
        parsed.push_back(BitVector::from_string(s));
    }
    return from_rows(parsed, cols);
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    uint64_t mask = uint64_t{1} << (c % WORD_BITS);
    uint64_t &w = data_[r * stride_ + c / WORD_BITS];
    w = value ? (w | mask) : (w & ~mask);
}

BitVector BitMatrix::row(size_t r) const {
    BitVector v(cols_);
    auto src = row_span(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.flip(r);
        }
    }
    return v;
}

std::vector<BitVector> BitMatrix::row_list() const {
    std::vector<BitVector> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out.push_back(row(r));
    }
    return out;
}

void BitMatrix::xor_row_into(size_t dst, size_t src) {
    uint64_t *d = data_.data() + dst * stride_;
    const uint64_t *s = data_.data() + src * stride_;
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

void BitMatrix::append_row(const BitVector &row) {
    require_same_length(row.size(), cols_, "append_row");
    data_.insert(data_.end(), row.words().begin(), row.words().end());
    rows_++;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row_span(r);
        for (size_t k = 0; k < stride_; k++) {
            uint64_t w = words[k];
            while (w) {
                t.flip(k * WORD_BITS + std::countr_zero(w), r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    require_same_length(cols_, v.size(), "matrix-vector product");
    BitVector out(rows_);
    auto vw = v.words();
    for (size_t r = 0; r < rows_; r++) {
        auto rw = row_span(r);
        uint64_t acc = 0;
        for (size_t k = 0; k < stride_; k++) {
            acc ^= rw[k] & vw[k];
        }
        if (std::popcount(acc) & 1) {
            out.flip(r);
        }
    }
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix &other) const {
    require_same_length(cols_, other.rows_, "matrix product");
    BitMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        auto rw = row_span(r);
        auto dst = out.row_span(r);
        for (size_t k = 0; k < stride_; k++) {
            uint64_t w = rw[k];
            while (w) {
                auto src = other.row_span(k * WORD_BITS + std::countr_zero(w));
                for (size_t j = 0; j < dst.size(); j++) {
                    dst[j] ^= src[j];
                }
                w &= w - 1;
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::select_columns(std::span<const size_t> columns) const {
    BitMatrix out(rows_, columns.size());
    for (size_t r = 0; r < rows_; r++) {
        for (size_t j = 0; j < columns.size(); j++) {
            if (get(r, columns[j])) {
                out.flip(r, j);
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += row(r).str();
        s += '\n';
    }
    return s;
}

void EchelonForm::reduce(std::span<uint64_t> words) const {
    size_t stride = reduced.row_words();
    for (size_t i = 0; i < pivots.size(); i++) {
        size_t c = pivots[i];
        if ((words[c / WORD_BITS] >> (c % WORD_BITS)) & 1) {
            auto src = reduced.row_span(i);
            for (size_t k = c / WORD_BITS; k < stride; k++) {
                words[k] ^= src[k];
            }
        }
    }
}

bool EchelonForm::contains(std::span<const uint64_t> words) const {
    std::vector<uint64_t> scratch(words.begin(), words.end());
    reduce(scratch);
    return std::all_of(scratch.begin(), scratch.end(), [](uint64_t w) { return w == 0; });
}

bool EchelonForm::contains(const BitVector &v) const {
    require_same_length(v.size(), reduced.cols(), "row space membership");
    return contains(v.words());
}

EchelonForm row_reduce(const BitMatrix &m) {
    BitMatrix work = m;
    std::vector<size_t> pivots;
    size_t stride = work.row_words();
    size_t r = 0;
    for (size_t c = 0; c < work.cols() && r < work.rows(); c++) {
        size_t found = r;
        while (found < work.rows() && !work.get(found, c)) {
            found++;
        }
        if (found == work.rows()) {
            continue;
        }
        work.swap_rows(r, found);
        auto pivot_row = work.row_span(r);
        size_t w0 = c / WORD_BITS;
        for (size_t other = 0; other < work.rows(); other++) {
            if (other != r && work.get(other, c)) {
                auto dst = work.row_span(other);
                for (size_t k = w0; k < stride; k++) {
                    dst[k] ^= pivot_row[k];
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    BitMatrix reduced(pivots.size(), m.cols());
    for (size_t i = 0; i < pivots.size(); i++) {
        auto src = work.row_span(i);
        std::copy(src.begin(), src.end(), reduced.row_span(i).begin());
    }
    return EchelonForm{std::move(reduced), std::move(pivots)};
}

size_t rank(const BitMatrix &m) {
    return row_reduce(m).rank();
}

BitMatrix row_basis(const BitMatrix &m) {
    return row_reduce(m).reduced;
}

BitMatrix kernel_basis(const BitMatrix &m) {
    EchelonForm ef = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : ef.pivots) {
        is_pivot[c] = true;
    }
    BitMatrix basis(m.cols() - ef.rank(), m.cols());
    size_t out = 0;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        basis.set(out, f, true);
        for (size_t i = 0; i < ef.rank(); i++) {
            if (ef.reduced.get(i, f)) {
                basis.set(out, ef.pivots[i], true);
            }
        }
        out++;
    }
    return basis;
}

bool row_space_contains(const BitMatrix &m, const BitVector &v) {
    require_same_length(v.size(), m.cols(), "row_space_contains");
    return row_reduce(m).contains(v);
}

BitMatrix orthogonal_complement(const BitMatrix &m) {
    return kernel_basis(m);
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &rhs) {
    require_same_length(rhs.size(), m.rows(), "solve");
    // Reduce the augmented matrix [m | rhs].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row(r).support()) {
            aug.set(r, c, true);
        }
        aug.set(r, m.cols(), rhs.get(r));
    }
    EchelonForm ef = row_reduce(aug);
    BitVector x(m.cols());
    for (size_t i = 0; i < ef.rank(); i++) {
        if (ef.pivots[i] == m.cols()) {
            return std::nullopt;
        }
        x.set(ef.pivots[i], ef.reduced.get(i, m.cols()));
    }
    return x;
}

bool same_row_space(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    return row_reduce(a).reduced == row_reduce(b).reduced;
}

}  // namespace syscodes
