#include "monreg/betti.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <vector>

#include "monreg/linalg.hpp"

namespace monreg {

std::int64_t Regularity::value() const {
    if (minus_infinity_)
        throw DomainError("regularity is minus infinity");
    return value_;
}

std::string Regularity::str() const {
    return minus_infinity_ ? "-inf" : std::to_string(value_);
}

std::map<std::pair<int, std::int64_t>, std::int64_t> BettiTable::coarse() const {
    std::map<std::pair<int, std::int64_t>, std::int64_t> out;
    for (const auto& [key, count] : entries_)
        out[{key.first, key.second.degree()}] += count;
    return out;
}

Regularity BettiTable::regularity() const {
    if (entries_.empty())
        return Regularity::minus_infinity();
    std::int64_t best = 0;
    bool any = false;
    for (const auto& [key, count] : entries_) {
        (void)count;
        std::int64_t v = key.second.degree() - key.first;
        if (!any || v > best)
            best = v;
        any = true;
    }
    return Regularity::of(best);
}

namespace {

using Mask = std::uint32_t;

// Subsets of one multidegree stratum, bucketed by cardinality.
struct Stratum {
    std::vector<Exponent> lcm;
    std::vector<Mask> masks;
};

} // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const CoefficientField& field,
                       std::int64_t mu_cap) {
    if (ideal.is_zero())
        throw DomainError("Betti table of the zero ideal");
    const auto& gens = ideal.gens();
    const std::size_t r = gens.size();
    if (static_cast<std::int64_t>(r) > mu_cap)
        throw ResourceError("mu_cap", mu_cap,
                            "ideal has " + std::to_string(r) + " minimal generators");
    // Subset enumeration is 2^mu; beyond this nothing terminates anyway.
    if (r > 24)
        throw ResourceError("mu_hard_cap", 24,
                            "ideal has " + std::to_string(r) + " minimal generators");
    const int n = ideal.nvars();

    // Assign every nonempty generator subset to its lcm stratum.
    std::map<std::vector<Exponent>, std::size_t> stratum_of_lcm;
    std::vector<Stratum> strata;
    std::vector<std::uint32_t> stratum_id(std::size_t{1} << r);
    for (Mask mask = 1; mask < (Mask{1} << r); ++mask) {
        std::vector<Exponent> lcm(static_cast<std::size_t>(n), 0);
        for (Mask bits = mask; bits != 0; bits &= bits - 1) {
            const Monomial& g = gens[static_cast<std::size_t>(std::countr_zero(bits))];
            for (int j = 0; j < n; ++j)
                lcm[static_cast<std::size_t>(j)] =
                    std::max(lcm[static_cast<std::size_t>(j)], g.exponent(j));
        }
        auto [it, inserted] = stratum_of_lcm.try_emplace(lcm, strata.size());
        if (inserted)
            strata.push_back(Stratum{std::move(lcm), {}});
        strata[it->second].masks.push_back(mask);
        stratum_id[mask] = static_cast<std::uint32_t>(it->second);
    }

    BettiTable::Entries entries;
    for (std::size_t sid = 0; sid < strata.size(); ++sid) {
        const Stratum& stratum = strata[sid];

        std::vector<std::vector<Mask>> by_size(r + 1);
        std::vector<std::unordered_map<Mask, std::size_t>> index(r + 1);
        for (Mask mask : stratum.masks) {
            auto size = static_cast<std::size_t>(std::popcount(mask));
            index[size].emplace(mask, by_size[size].size());
            by_size[size].push_back(mask);
        }

        // ranks[s] = rank of the map from s-subsets to (s-1)-subsets.
        std::vector<std::size_t> ranks(r + 2, 0);
        for (std::size_t s = 2; s <= r; ++s) {
            if (by_size[s].empty() || by_size[s - 1].empty())
                continue;
            SparseIntMatrix boundary(by_size[s].size(), by_size[s - 1].size());
            for (std::size_t row = 0; row < by_size[s].size(); ++row) {
                Mask mask = by_size[s][row];
                for (Mask bits = mask; bits != 0; bits &= bits - 1) {
                    Mask bit = bits & (~bits + 1);
                    Mask facet = mask & ~bit;
                    if (stratum_id[facet] != sid)
                        continue;
                    int sign = std::popcount(mask & (bit - 1)) % 2 == 0 ? 1 : -1;
                    boundary.add_entry(row, index[s - 1].at(facet), sign);
                }
            }
            ranks[s] = rank_exact(boundary, field);
        }

        Monomial multidegree{stratum.lcm};
        for (std::size_t s = 1; s <= r; ++s) {
            std::int64_t homology = static_cast<std::int64_t>(by_size[s].size()) -
                                    static_cast<std::int64_t>(ranks[s]) -
                                    static_cast<std::int64_t>(ranks[s + 1]);
            if (homology != 0)
                entries[{static_cast<int>(s) - 1, multidegree}] = homology;
        }
    }
    return BettiTable(field, std::move(entries));
}

Regularity regularity(const MonomialIdeal& ideal, const CoefficientField& field,
                      std::int64_t mu_cap) {
    if (ideal.is_zero())
        return Regularity::minus_infinity();
    return betti_table(ideal, field, mu_cap).regularity();
}

} // namespace monreg
