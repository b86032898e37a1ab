#include "monreg/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>

namespace monreg {

namespace {

using Rational = boost::multiprecision::mpq_rational;

struct RationalOps {
    using Elem = Rational;
    Elem from_int(std::int64_t v) const { return Elem(v); }
    bool is_zero(const Elem& v) const { return v == 0; }
    // factor = entry / pivot, then row -= factor * pivot_row.
    Elem ratio(const Elem& entry, const Elem& pivot) const { return entry / pivot; }
    Elem fused(const Elem& value, const Elem& factor, const Elem& pivot_value) const {
        return value - factor * pivot_value;
    }
};

struct PrimeOps {
    using Elem = std::uint64_t;
    std::uint64_t p;

    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0)
            r += static_cast<std::int64_t>(p);
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem v) const { return v == 0; }
    Elem inverse(Elem a) const {
        // Extended Euclid; p is prime and a is nonzero mod p.
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0)
            t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem ratio(Elem entry, Elem pivot) const { return entry * inverse(pivot) % p; }
    Elem fused(Elem value, Elem factor, Elem pivot_value) const {
        Elem sub = factor * pivot_value % p;
        return (value + p - sub) % p;
    }
};

template <typename Ops>
std::size_t eliminate(const SparseIntMatrix& matrix, const Ops& ops) {
    using Elem = typename Ops::Elem;
    using Row = std::vector<std::pair<std::uint32_t, Elem>>;

    std::vector<Row> rows(matrix.rows());
    std::vector<std::size_t> col_nnz(matrix.cols(), 0);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (const auto& [c, v] : matrix.row(r)) {
            Elem e = ops.from_int(v);
            if (!ops.is_zero(e)) {
                rows[r].emplace_back(c, std::move(e));
                ++col_nnz[c];
            }
        }
        std::sort(rows[r].begin(), rows[r].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    auto find_in_row = [](const Row& row, std::uint32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        return (it != row.end() && it->first == col) ? it : row.end();
    };

    std::vector<bool> active(matrix.rows(), true);
    std::size_t rank = 0;

    for (;;) {
        // Sparsest remaining column, then sparsest row holding it.
        std::uint32_t pivot_col = 0;
        std::size_t best_col_nnz = 0;
        for (std::uint32_t c = 0; c < matrix.cols(); ++c)
            if (col_nnz[c] > 0 && (best_col_nnz == 0 || col_nnz[c] < best_col_nnz)) {
                best_col_nnz = col_nnz[c];
                pivot_col = c;
            }
        if (best_col_nnz == 0)
            break;

        std::size_t pivot_row = matrix.rows();
        std::size_t best_row_nnz = 0;
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            if (!active[r] || rows[r].empty())
                continue;
            if (find_in_row(rows[r], pivot_col) == rows[r].end())
                continue;
            if (pivot_row == matrix.rows() || rows[r].size() < best_row_nnz) {
                pivot_row = r;
                best_row_nnz = rows[r].size();
            }
        }

        const Row pivot = std::move(rows[pivot_row]);
        rows[pivot_row].clear();
        active[pivot_row] = false;
        for (const auto& [c, v] : pivot)
            --col_nnz[c];
        const Elem pivot_value = find_in_row(pivot, pivot_col)->second;
        ++rank;

        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            if (!active[r])
                continue;
            auto hit = find_in_row(rows[r], pivot_col);
            if (hit == rows[r].end())
                continue;
            Elem factor = ops.ratio(hit->second, pivot_value);
            Row merged;
            merged.reserve(rows[r].size() + pivot.size());
            auto a = rows[r].begin();
            auto b = pivot.begin();
            while (a != rows[r].end() || b != pivot.end()) {
                if (b == pivot.end() || (a != rows[r].end() && a->first < b->first)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == rows[r].end() || b->first < a->first) {
                    Elem updated = ops.fused(ops.from_int(0), factor, b->second);
                    if (!ops.is_zero(updated)) {
                        merged.emplace_back(b->first, std::move(updated));
                        ++col_nnz[b->first];
                    }
                    ++b;
                } else {
                    Elem updated = ops.fused(a->second, factor, b->second);
                    if (!ops.is_zero(updated))
                        merged.emplace_back(a->first, std::move(updated));
                    else
                        --col_nnz[a->first];
                    ++a;
                    ++b;
                }
            }
            rows[r] = std::move(merged);
        }
    }
    return rank;
}

} // namespace

void SparseIntMatrix::add_entry(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_ || col >= cols_)
        throw DomainError("matrix entry out of bounds");
    if (value != 0)
        entries_[row].emplace_back(static_cast<std::uint32_t>(col), value);
}

std::size_t rank_exact(const SparseIntMatrix& matrix, const CoefficientField& field) {
    if (field.kind() == CoefficientField::Kind::Rationals)
        return eliminate(matrix, RationalOps{});
    return eliminate(matrix, PrimeOps{field.characteristic()});
}

} // namespace monreg
