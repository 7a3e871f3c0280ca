#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sx/error.hpp"

namespace sx {

/// Sparse symmetric 0/1 matrix with zero diagonal, stored as sorted rows.
class BooleanMatrix {
public:
    using Index = std::uint32_t;

    BooleanMatrix() = default;
    explicit BooleanMatrix(std::size_t n) : rows_(n) {}

    /// Builds the symmetric closure of `pairs`; diagonal pairs are rejected.
    static BooleanMatrix from_pairs(std::size_t n, std::span<const std::pair<Index, Index>> pairs) {
        BooleanMatrix m(n);
        for (auto [i, j] : pairs) {
            if (i >= n || j >= n) throw InputError("matrix entry out of range");
            if (i == j) throw InputError("boolean adjacency must have a zero diagonal");
            m.rows_[i].push_back(j);
            m.rows_[j].push_back(i);
        }
        m.finalize();
        return m;
    }

    /// `rows` may be unsorted and contain duplicates but must already be symmetric.
    static BooleanMatrix from_rows(std::vector<std::vector<Index>> rows) {
        BooleanMatrix m;
        m.rows_ = std::move(rows);
        m.finalize();
        return m;
    }

    std::size_t size() const noexcept { return rows_.size(); }

    std::span<const Index> row(std::size_t i) const { return rows_[i]; }

    std::size_t row_sum(std::size_t i) const { return rows_[i].size(); }

    bool operator()(std::size_t i, std::size_t j) const {
        const auto& r = rows_[i];
        return std::binary_search(r.begin(), r.end(), static_cast<Index>(j));
    }

    /// Number of nonzero entries (each undirected pair counts twice).
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (Index j : rows_[i])
                if (!(*this)(j, i)) return false;
        return true;
    }

    bool has_zero_diagonal() const {
        for (std::size_t i = 0; i < size(); ++i)
            if ((*this)(i, i)) return false;
        return true;
    }

    /// Entries present here and absent in `other`.
    BooleanMatrix minus(const BooleanMatrix& other) const {
        if (other.size() != size()) throw InputError("matrix size mismatch");
        BooleanMatrix out(size());
        for (std::size_t i = 0; i < size(); ++i)
            std::set_difference(rows_[i].begin(), rows_[i].end(), other.rows_[i].begin(),
                                other.rows_[i].end(), std::back_inserter(out.rows_[i]));
        return out;
    }

    std::vector<std::vector<std::uint8_t>> to_dense() const {
        std::vector<std::vector<std::uint8_t>> d(size(), std::vector<std::uint8_t>(size(), 0));
        for (std::size_t i = 0; i < size(); ++i)
            for (Index j : rows_[i]) d[i][j] = 1;
        return d;
    }

    friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

private:
    void finalize() {
        for (auto& r : rows_) {
            std::sort(r.begin(), r.end());
            r.erase(std::unique(r.begin(), r.end()), r.end());
        }
    }

    std::vector<std::vector<Index>> rows_;
};

} // namespace sx
