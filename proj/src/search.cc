#include "syscodes/search.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>

#include "syscodes/error.h"
#include "syscodes/parallel.h"

namespace syscodes {

namespace {

// Visits every support of size `w` whose smallest element is `first`, in
// lexicographic order, until `leaf` returns a vector.
class SupportWalker {
   public:
    SupportWalker(size_t n, size_t w) : n_(n), w_(w), idx_(w) {
    }

    template <typename Enter, typename Leaf>
    std::optional<BitVector> walk(size_t first, Enter &&enter, Leaf &&leaf) {
        idx_[0] = first;
        enter(0, first);
        if (w_ == 1) {
            return leaf(idx_);
        }
        return descend(1, enter, leaf);
    }

   private:
    template <typename Enter, typename Leaf>
    std::optional<BitVector> descend(size_t depth, Enter &enter, Leaf &leaf) {
        size_t last = n_ - (w_ - depth);
        for (size_t j = idx_[depth - 1] + 1; j <= last; j++) {
            idx_[depth] = j;
            enter(depth, j);
            std::optional<BitVector> hit = depth + 1 == w_ ? leaf(idx_) : descend(depth + 1, enter, leaf);
            if (hit) {
                return hit;
            }
        }
        return std::nullopt;
    }

    size_t n_;
    size_t w_;
    std::vector<size_t> idx_;
};

using PartitionSearch = std::function<std::optional<BitVector>(size_t first, size_t weight)>;

// Ascending weights; partitions (first support element) may run concurrently.
// The lowest partition with a hit supplies the witness, so the result does not
// depend on scheduling.
SearchResult by_ascending_weight(size_t n, size_t max_weight, const PartitionSearch &search) {
    size_t limit = std::min(max_weight, n);
    for (size_t w = 1; w <= limit; w++) {
        size_t parts = n - w + 1;
        std::vector<std::optional<BitVector>> hits(parts);
        std::atomic<size_t> best{parts};
        parallel_for(parts, [&](size_t f) {
            if (f > best.load()) {
                return;
            }
            auto hit = search(f, w);
            if (!hit) {
                return;
            }
            hits[f] = std::move(hit);
            size_t seen = best.load();
            while (f < seen && !best.compare_exchange_weak(seen, f)) {
            }
        });
        if (best.load() < parts) {
            return SearchResult{true, w, std::move(*hits[best.load()])};
        }
    }
    return SearchResult{};
}

bool all_zero(std::span<const uint64_t> words) {
    return std::all_of(words.begin(), words.end(), [](uint64_t w) { return w == 0; });
}

}  // namespace

SearchResult min_weight_outside(const BitMatrix &constraints, const BitMatrix &excluded, size_t max_weight) {
    size_t n = constraints.cols();
    if (excluded.cols() != n) {
        throw Error(ErrorKind::LengthMismatch, "min_weight_outside: constraint and excluded column counts differ");
    }
    EchelonForm excluded_form = row_reduce(excluded);
    BitMatrix syndromes = constraints.transpose();
    size_t stride = syndromes.row_words();

    return by_ascending_weight(n, max_weight, [&](size_t first, size_t w) {
        std::vector<uint64_t> acc(w * stride, 0);
        SupportWalker walker(n, w);
        auto enter = [&](size_t depth, size_t col) {
            auto col_words = syndromes.row_span(col);
            uint64_t *dst = acc.data() + depth * stride;
            const uint64_t *prev = depth == 0 ? nullptr : acc.data() + (depth - 1) * stride;
            for (size_t k = 0; k < stride; k++) {
                dst[k] = (prev ? prev[k] : 0) ^ col_words[k];
            }
        };
        auto leaf = [&](const std::vector<size_t> &support) -> std::optional<BitVector> {
            if (!all_zero({acc.data() + (w - 1) * stride, stride})) {
                return std::nullopt;
            }
            BitVector x = BitVector::from_support(n, support);
            if (excluded_form.contains(x)) {
                return std::nullopt;
            }
            return x;
        };
        return walker.walk(first, enter, leaf);
    });
}

SearchResult min_symplectic_weight_outside(const BitMatrix &checks, const BitMatrix &excluded, size_t max_weight) {
    if (checks.cols() % 2 != 0 || excluded.cols() != checks.cols()) {
        throw Error(ErrorKind::LengthMismatch, "min_symplectic_weight_outside: expected matching even column counts");
    }
    size_t n = checks.cols() / 2;
    EchelonForm excluded_form = row_reduce(excluded);

    return by_ascending_weight(n, max_weight, [&](size_t first, size_t w) {
        SupportWalker walker(n, w);
        std::vector<size_t> columns(2 * w);
        auto enter = [](size_t, size_t) {};
        auto leaf = [&](const std::vector<size_t> &support) -> std::optional<BitVector> {
            // e_x(q) pairs with the z-part of each check and e_z(q) with the x-part.
            for (size_t t = 0; t < w; t++) {
                columns[2 * t] = n + support[t];
                columns[2 * t + 1] = support[t];
            }
            BitMatrix restricted = checks.select_columns(columns);
            BitMatrix local_kernel = kernel_basis(restricted);
            for (size_t r = 0; r < local_kernel.rows(); r++) {
                BitVector e(2 * n);
                for (size_t t = 0; t < w; t++) {
                    if (local_kernel.get(r, 2 * t)) {
                        e.flip(support[t]);
                    }
                    if (local_kernel.get(r, 2 * t + 1)) {
                        e.flip(n + support[t]);
                    }
                }
                if (!excluded_form.contains(e)) {
                    return e;
                }
            }
            return std::nullopt;
        };
        return walker.walk(first, enter, leaf);
    });
}

}  // namespace syscodes
