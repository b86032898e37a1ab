#include "monreg/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <vector>

namespace monreg {

ChainComplexDims::ChainComplexDims(std::map<int, std::int64_t> dims) : dims_(std::move(dims)) {
    for (auto it = dims_.begin(); it != dims_.end();) {
        if (it->second < 0)
            throw DomainError("negative homology dimension");
        it = it->second == 0 ? dims_.erase(it) : std::next(it);
    }
}

std::int64_t ChainComplexDims::dim(int i) const {
    auto it = dims_.find(i);
    return it == dims_.end() ? 0 : it->second;
}

ChainComplexDims reduced_homology(const SimplicialComplex& complex, const CoefficientField& field) {
    if (complex.is_void())
        return ChainComplexDims{};

    const std::vector<Face> faces = complex.all_faces();
    const int top = complex.dim();

    // Faces bucketed by dimension; bucket d holds the d-dimensional faces,
    // with d = -1 for the empty face of the augmented complex.
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
    std::vector<std::unordered_map<Face, std::size_t>> index(static_cast<std::size_t>(top + 2));
    for (Face f : faces) {
        int d = std::popcount(f) - 1;
        auto& bucket = by_dim[static_cast<std::size_t>(d + 1)];
        index[static_cast<std::size_t>(d + 1)].emplace(f, bucket.size());
        bucket.push_back(f);
    }

    // ranks[d + 1] = rank of the boundary map from d-chains to (d-1)-chains.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d) {
        const auto& domain = by_dim[static_cast<std::size_t>(d + 1)];
        const auto& target_index = index[static_cast<std::size_t>(d)];
        SparseIntMatrix boundary(domain.size(), by_dim[static_cast<std::size_t>(d)].size());
        for (std::size_t r = 0; r < domain.size(); ++r) {
            Face f = domain[r];
            int sign = 1;
            for (Face bits = f; bits != 0; bits &= bits - 1) {
                Face vertex = bits & (~bits + 1);
                boundary.add_entry(r, target_index.at(f & ~vertex), sign);
                sign = -sign;
            }
        }
        ranks[static_cast<std::size_t>(d) + 1] = rank_exact(boundary, field);
    }

    std::map<int, std::int64_t> dims;
    for (int i = -1; i <= top; ++i) {
        std::size_t chains = by_dim[static_cast<std::size_t>(i + 1)].size();
        std::size_t killed = ranks[static_cast<std::size_t>(i + 1)] +
                             (i + 2 <= top + 1 ? ranks[static_cast<std::size_t>(i + 2)] : 0);
        std::int64_t h = static_cast<std::int64_t>(chains) - static_cast<std::int64_t>(killed);
        if (h != 0)
            dims[i] = h;
    }
    return ChainComplexDims(std::move(dims));
}

} // namespace monreg
