#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "looksay/errors.hpp"

namespace looksay {

/* One (row, col, value) entry of a sparse matrix under construction. */
struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;
};

/* Immutable column-sparse integer matrix (CSC layout).  Indices are 0-based;
 * callers that present ids 1-based (element numbering) subtract one. */
class SparseMatrix {
public:
    SparseMatrix() = default;

    /* Builds from triplets; duplicates at the same (row, col) are summed and
     * resulting zeros are dropped.  Throws domain_error on out-of-range
     * indices. */
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return values_.size(); }

    /* Entry lookup by binary search within the column. */
    std::int64_t at(std::size_t row, std::size_t col) const;

    /* Raw column access: entries k in [col_start(j), col_start(j+1)) have row
     * row_index(k) and value value(k), sorted by row. */
    std::size_t col_start(std::size_t j) const { return col_starts_[j]; }
    std::size_t row_index(std::size_t k) const { return row_indices_[k]; }
    std::int64_t value(std::size_t k) const { return values_[k]; }

    std::vector<std::int64_t> column_sums() const;
    std::int64_t column_norm_squared(std::size_t j) const;

    /* Largest entry value; optionally reports every position attaining it. */
    std::int64_t max_entry(std::vector<std::pair<std::size_t, std::size_t>>* where
                           = nullptr) const;

    /* y = A * x for any arithmetic-like T (double, int64, bignum).  Existing
     * storage in y is reused when the size already matches, so types with
     * per-value state (multiple-precision floats) keep their precision. */
    template <class T>
    void multiply(const std::vector<T>& x, std::vector<T>& y) const {
        if (x.size() != cols_) throw domain_error("matrix-vector size mismatch");
        if (y.size() != rows_) {
            y.assign(rows_, T(0));
        } else {
            for (T& entry : y) entry = 0;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            if (x[j] == 0) continue;
            for (std::size_t k = col_starts_[j]; k < col_starts_[j + 1]; ++k)
                y[row_indices_[k]] += T(values_[k]) * x[j];
        }
    }

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> col_starts_;  /* size cols_+1 */
    std::vector<std::size_t> row_indices_;
    std::vector<std::int64_t> values_;
};

} // namespace looksay
