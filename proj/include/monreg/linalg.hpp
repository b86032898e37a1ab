#ifndef MONREG_LINALG_HPP
#define MONREG_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monreg/field.hpp"

namespace monreg {

/// A sparse matrix with small integer entries, stored by rows.  This is the
/// only matrix shape the chain complexes here produce (boundary maps have
/// entries in {-1, 0, 1}).
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Columns within one row must be distinct.
    void add_entry(std::size_t row, std::size_t col, std::int64_t value);

    const std::vector<std::pair<std::uint32_t, std::int64_t>>& row(std::size_t r) const {
        return entries_[r];
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries_;
};

/// Rank over the given field, by exact sparse Gaussian elimination (rational
/// arithmetic over the rationals, modular arithmetic over prime fields).
/// Pivots are chosen by a Markowitz-style fill estimate with deterministic
/// tie-breaking, so the elimination order is reproducible.
std::size_t rank_exact(const SparseIntMatrix& matrix, const CoefficientField& field);

} // namespace monreg

#endif
