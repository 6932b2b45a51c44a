#ifndef SYSCODES_TESTS_ORACLE_H
#define SYSCODES_TESTS_ORACLE_H

// Slow reference implementations for tests. Nothing here calls into the
// library's algorithms: vectors are unpacked bytes, elimination is textbook and
// minimum weights come from enumerating every vector.

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syscodes/gf2.h"

namespace oracle {

using Bits = std::vector<uint8_t>;
using Mat = std::vector<Bits>;

inline Bits to_bits(const syscodes::BitVector &v) {
    Bits b(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        b[i] = v.get(i);
    }
    return b;
}

inline Mat to_mat(const syscodes::BitMatrix &m) {
    Mat out(m.rows(), Bits(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out[r][c] = m.get(r, c);
        }
    }
    return out;
}

inline Bits from_index(uint64_t mask, size_t n) {
    Bits b(n);
    for (size_t i = 0; i < n; i++) {
        b[i] = (mask >> i) & 1;
    }
    return b;
}

inline size_t weight(const Bits &b) {
    size_t w = 0;
    for (auto x : b) {
        w += x;
    }
    return w;
}

inline uint8_t dot(const Bits &a, const Bits &b) {
    uint8_t s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s ^= a[i] & b[i];
    }
    return s;
}

inline Bits add(Bits a, const Bits &b) {
    for (size_t i = 0; i < a.size(); i++) {
        a[i] ^= b[i];
    }
    return a;
}

inline size_t rank(Mat m) {
    size_t r = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && r < m.size(); c++) {
        size_t pivot = r;
        while (pivot < m.size() && !m[pivot][c]) {
            pivot++;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (size_t i = 0; i < m.size(); i++) {
            if (i != r && m[i][c]) {
                m[i] = add(m[i], m[r]);
            }
        }
        r++;
    }
    return r;
}

/// Every element of the row space (2^rows combinations, deduplicated).
inline std::set<Bits> span(const Mat &m, size_t cols) {
    std::set<Bits> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m.size()); mask++) {
        Bits v(cols, 0);
        for (size_t r = 0; r < m.size(); r++) {
            if ((mask >> r) & 1) {
                v = add(v, m[r]);
            }
        }
        out.insert(v);
    }
    return out;
}

inline bool in_span(const Mat &m, const Bits &v) {
    return span(m, v.size()).count(v) > 0;
}

inline Bits mat_vec(const Mat &m, const Bits &v) {
    Bits out(m.size());
    for (size_t r = 0; r < m.size(); r++) {
        out[r] = dot(m[r], v);
    }
    return out;
}

/// Minimum weight of x with constraints x = 0 and x outside span(excluded),
/// over all 2^n vectors.
inline std::optional<size_t> min_weight_outside(const Mat &constraints, const Mat &excluded, size_t n) {
    std::set<Bits> ex = span(excluded, n);
    std::optional<size_t> best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        Bits x = from_index(mask, n);
        if (best && weight(x) >= *best) {
            continue;
        }
        if (weight(mat_vec(constraints, x)) != 0 || ex.count(x)) {
            continue;
        }
        best = weight(x);
    }
    return best;
}

/// (a | b) * (a' | b') = a.b' + a'.b.
inline uint8_t twisted(const Bits &u, const Bits &v) {
    size_t n = u.size() / 2;
    uint8_t s = 0;
    for (size_t i = 0; i < n; i++) {
        s ^= (u[i] & v[n + i]) ^ (v[i] & u[n + i]);
    }
    return s;
}

/// Stabilizer distance over all 4^n Pauli classes: minimum Pauli weight of an
/// element commuting with every row of `checks` (length 2n) and not in their span.
inline std::optional<size_t> symplectic_distance(const Mat &checks, size_t n) {
    std::set<Bits> stab = span(checks, 2 * n);
    std::optional<size_t> best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << (2 * n)); mask++) {
        Bits e = from_index(mask, 2 * n);
        size_t w = 0;
        for (size_t i = 0; i < n; i++) {
            w += e[i] | e[n + i];
        }
        if (best && w >= *best) {
            continue;
        }
        bool commutes = true;
        for (const auto &g : checks) {
            commutes = commutes && !twisted(g, e);
        }
        if (commutes && !stab.count(e)) {
            best = w;
        }
    }
    return best;
}

using Complex = std::complex<double>;
using Dense = std::vector<std::vector<Complex>>;

inline Dense kron(const Dense &a, const Dense &b) {
    size_t ra = a.size();
    size_t rb = b.size();
    Dense out(ra * rb, std::vector<Complex>(ra * rb));
    for (size_t i = 0; i < ra; i++) {
        for (size_t j = 0; j < ra; j++) {
            for (size_t k = 0; k < rb; k++) {
                for (size_t l = 0; l < rb; l++) {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline Dense letter_matrix(char letter) {
    const Complex i(0, 1);
    switch (letter) {
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, -i}, {i, 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
        default:
            return {{1, 0}, {0, 1}};
    }
}

/// Dense matrix of a letter word such as "XYZ" (leftmost letter = leftmost
/// Kronecker factor) times `scalar`.
inline Dense word_matrix(const std::string &letters, Complex scalar = 1) {
    Dense m{{scalar}};
    for (char ch : letters) {
        m = kron(m, letter_matrix(ch));
    }
    return m;
}

inline Dense multiply(const Dense &a, const Dense &b) {
    size_t n = a.size();
    Dense out(n, std::vector<Complex>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            for (size_t j = 0; j < n; j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline double max_abs_diff(const Dense &a, const Dense &b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a.size(); j++) {
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
        }
    }
    return worst;
}

/// Minimum weight of a cycle (boundary_p x = 0) outside the span of the
/// columns of boundary_{p+1}, over all 2^n chains.
inline std::optional<size_t> systole(const syscodes::BitMatrix &boundary_p, const syscodes::BitMatrix &boundary_next) {
    size_t n = boundary_p.cols();
    Mat boundaries = to_mat(boundary_next.transpose());
    Mat constraints = to_mat(boundary_p);
    return min_weight_outside(constraints, boundaries, n);
}

}  // namespace oracle

#endif
