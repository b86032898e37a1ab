#ifndef MONREG_BETTI_HPP
#define MONREG_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "monreg/field.hpp"
#include "monreg/monomial.hpp"

namespace monreg {

/// Castelnuovo-Mumford regularity; minus infinity exactly for the zero module.
class Regularity {
public:
    static Regularity minus_infinity() { return Regularity(true, 0); }
    static Regularity of(std::int64_t value) { return Regularity(false, value); }

    bool is_minus_infinity() const { return minus_infinity_; }
    /// Throws DomainError when minus infinity.
    std::int64_t value() const;

    bool operator==(const Regularity& other) const = default;

    /// Decimal value, or "-inf".
    std::string str() const;

private:
    Regularity(bool minus_infinity, std::int64_t value)
        : minus_infinity_(minus_infinity), value_(value) {}

    bool minus_infinity_;
    std::int64_t value_;
};

/// Multigraded Betti numbers of a monomial ideal over a fixed field.
/// Keys are (homological index, multidegree); only nonzero multiplicities
/// are stored.  Index 0 entries are exactly the minimal generators.
class BettiTable {
public:
    using Entries = std::map<std::pair<int, Monomial>, std::int64_t>;

    BettiTable(CoefficientField field, Entries entries)
        : field_(std::move(field)), entries_(std::move(entries)) {}

    const CoefficientField& field() const { return field_; }
    const Entries& entries() const { return entries_; }

    /// Coarse table: (i, total degree) -> summed multiplicity.
    std::map<std::pair<int, std::int64_t>, std::int64_t> coarse() const;

    /// max |a| - i over the entries; minus infinity iff there are none.
    Regularity regularity() const;

private:
    CoefficientField field_;
    Entries entries_;
};

/// Multigraded Betti numbers, computed one multidegree at a time.  For each
/// lcm of a generator subset, the generator subsets with exactly that lcm
/// form a complex graded by subset size (an (i+1)-subset sits in homological
/// position i); the differential drops a generator with the usual alternating
/// sign, keeping only the terms whose lcm is unchanged.  The dimension of
/// homology in position i is the Betti number in that multidegree.
///
/// Generator subsets are enumerated exhaustively, so the number of minimal
/// generators is capped; exceeding `mu_cap` raises ResourceError.
BettiTable betti_table(const MonomialIdeal& ideal, const CoefficientField& field,
                       std::int64_t mu_cap = 16);

/// Regularity of the ideal via the Betti table; minus infinity for the zero
/// ideal.
Regularity regularity(const MonomialIdeal& ideal, const CoefficientField& field,
                      std::int64_t mu_cap = 16);

} // namespace monreg

#endif
