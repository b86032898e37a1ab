#ifndef MONREG_HOMOLOGY_HPP
#define MONREG_HOMOLOGY_HPP

#include <cstdint>
#include <map>

#include "monreg/field.hpp"
#include "monreg/linalg.hpp"
#include "monreg/simplicial.hpp"

namespace monreg {

/// Dimensions of the reduced homology groups of a complex; indices with no
/// entry are zero.
class ChainComplexDims {
public:
    ChainComplexDims() = default;
    explicit ChainComplexDims(std::map<int, std::int64_t> dims);

    std::int64_t dim(int i) const;
    const std::map<int, std::int64_t>& nonzero() const { return dims_; }
    bool all_zero() const { return dims_.empty(); }

    bool operator==(const ChainComplexDims& other) const = default;

private:
    std::map<int, std::int64_t> dims_;
};

/// Reduced simplicial homology dimensions over the given field, computed
/// from the augmented chain complex by exact rank.
///
/// Conventions, which the rest of the library relies on:
///   - the void complex has no homology at all;
///   - the irrelevant complex {emptyset} has H~_{-1} of dimension 1;
///   - any complex with a vertex has H~_{-1} = 0.
ChainComplexDims reduced_homology(const SimplicialComplex& complex, const CoefficientField& field);

} // namespace monreg

#endif
