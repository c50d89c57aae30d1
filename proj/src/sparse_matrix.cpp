#include "looksay/sparse_matrix.hpp"

#include <algorithm>

namespace looksay {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
    for (const auto& t : entries)
        if (t.row >= rows || t.col >= cols)
            throw domain_error("triplet index out of range");
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });

    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.col_starts_.assign(cols + 1, 0);
    for (std::size_t k = 0; k < entries.size();) {
        std::size_t r = k;
        std::int64_t sum = 0;
        while (r < entries.size() && entries[r].row == entries[k].row &&
               entries[r].col == entries[k].col)
            sum += entries[r++].value;
        if (sum != 0) {
            m.row_indices_.push_back(entries[k].row);
            m.values_.push_back(sum);
            ++m.col_starts_[entries[k].col + 1];
        }
        k = r;
    }
    for (std::size_t j = 0; j < cols; ++j) m.col_starts_[j + 1] += m.col_starts_[j];
    return m;
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw domain_error("matrix index out of range");
    auto first = row_indices_.begin() + static_cast<std::ptrdiff_t>(col_starts_[col]);
    auto last = row_indices_.begin() + static_cast<std::ptrdiff_t>(col_starts_[col + 1]);
    auto it = std::lower_bound(first, last, row);
    if (it == last || *it != row) return 0;
    return values_[static_cast<std::size_t>(it - row_indices_.begin())];
}

std::vector<std::int64_t> SparseMatrix::column_sums() const {
    std::vector<std::int64_t> sums(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = col_starts_[j]; k < col_starts_[j + 1]; ++k)
            sums[j] += values_[k];
    return sums;
}

std::int64_t SparseMatrix::column_norm_squared(std::size_t j) const {
    if (j >= cols_) throw domain_error("matrix index out of range");
    std::int64_t s = 0;
    for (std::size_t k = col_starts_[j]; k < col_starts_[j + 1]; ++k)
        s += values_[k] * values_[k];
    return s;
}

std::int64_t SparseMatrix::max_entry(
    std::vector<std::pair<std::size_t, std::size_t>>* where) const {
    std::int64_t best = 0;
    for (std::int64_t v : values_) best = std::max(best, v);
    if (where) {
        where->clear();
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t k = col_starts_[j]; k < col_starts_[j + 1]; ++k)
                if (values_[k] == best) where->emplace_back(row_indices_[k], j);
    }
    return best;
}

} // namespace looksay
