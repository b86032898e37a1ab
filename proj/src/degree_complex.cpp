#include "monreg/degree_complex.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "monreg/errors.hpp"
#include "monreg/powers.hpp"

namespace monreg {

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a) {
    if (ideal.is_zero())
        throw DomainError("degree_complex: requires a nonzero ideal");
    if (a.nvars() != ideal.nvars())
        throw DomainError("degree_complex: variable counts differ");
    return stanley_reisner(radical(colon_monomial(ideal, a)));
}

bool verify_reg_witness(const MonomialIdeal& ideal, const RegWitness& witness) {
    if (witness.i < 0) return false;
    if (witness.value != witness.a.degree() + witness.i + 1) return false;
    const SimplicialComplex complex = degree_complex(ideal, witness.a);
    if (!complex.has_face(witness.face)) return false;
    if (witness.face & witness.a.support_mask()) return false;
    const ChainComplexDims dims =
        reduced_homology(complex.link(witness.face), witness.field);
    return dims.dim(witness.i - 1) >= 1;
}

namespace {

// Enumerates the points of [0, box_0] x ... x [0, box_{n-1}] ordered by
// (total degree, lexicographic).  Throws when the box exceeds the cap.
std::vector<std::vector<Exponent>> box_points(const std::vector<Exponent>& box,
                                              std::int64_t cell_cap) {
    std::int64_t cells = 1;
    for (Exponent b : box) {
        if (b < 0) throw DomainError("witness box bound must be nonnegative");
        if (cells > cell_cap / (b + 1)) {
            cells = cell_cap + 1;
            break;
        }
        cells *= b + 1;
    }
    if (cells > cell_cap)
        throw ResourceError("witness_box_cap", cell_cap,
                            "degree-complex search box is too large");

    std::vector<std::vector<Exponent>> points;
    points.reserve(static_cast<std::size_t>(cells));
    std::vector<Exponent> point(box.size(), 0);
    for (;;) {
        points.push_back(point);
        std::size_t j = 0;
        while (j < box.size() && point[j] == box[j]) {
            point[j] = 0;
            ++j;
        }
        if (j == box.size()) break;
        ++point[j];
    }
    std::sort(points.begin(), points.end(),
              [](const std::vector<Exponent>& lhs, const std::vector<Exponent>& rhs) {
                  const Exponent dl = std::accumulate(lhs.begin(), lhs.end(), Exponent(0));
                  const Exponent dr = std::accumulate(rhs.begin(), rhs.end(), Exponent(0));
                  if (dl != dr) return dl < dr;
                  return lhs < rhs;
              });
    return points;
}

}  // namespace

RegWitness reg_witness_search_in_box(const MonomialIdeal& ideal,
                                     const CoefficientField& field,
                                     const std::vector<Exponent>& box,
                                     std::int64_t cell_cap) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("reg_witness_search: requires a proper nonzero ideal");
    if (static_cast<int>(box.size()) != ideal.nvars())
        throw DomainError("reg_witness_search: box has wrong dimension");

    std::optional<RegWitness> best;
    for (const auto& point : box_points(box, cell_cap)) {
        const Monomial a(point);
        const SimplicialComplex complex = degree_complex(ideal, a);
        if (complex.is_void()) continue;
        const std::uint64_t support = a.support_mask();
        for (Face face : complex.all_faces()) {
            if (face & support) continue;
            const SimplicialComplex link = complex.link(face);
            const ChainComplexDims dims = reduced_homology(link, field);
            for (const auto& [index, dimension] : dims.nonzero()) {
                (void)dimension;  // nonzero by construction
                const int i = index + 1;
                const std::int64_t value = a.degree() + i + 1;
                if (!best || value > best->value)
                    best = RegWitness{a, face, i, value, field};
            }
        }
    }
    if (!best)
        throw std::logic_error(
            "reg_witness_search: no witness in box for " + ideal.str() +
            "; a proper nonzero ideal always has one");
    return *best;
}

RegWitness reg_witness_search(const MonomialIdeal& ideal,
                              const CoefficientField& field,
                              std::int64_t cell_cap) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("reg_witness_search: requires a proper nonzero ideal");
    std::vector<Exponent> box = per_variable_max(ideal);
    for (Exponent& b : box) b = std::max<Exponent>(b - 1, 0);
    return reg_witness_search_in_box(ideal, field, box, cell_cap);
}

bool check_delta_stability(const MonomialIdeal& ideal, std::int64_t s,
                           const Monomial& a, bool closed) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("check_delta_stability: requires a proper nonzero ideal");
    if (s < 1) throw DomainError("check_delta_stability: power must be positive");
    if (a.degree() > gamma(ideal) * s - 1)
        throw DomainError(
            "check_delta_stability: |a| must be at most gamma(I)*s - 1");
    const MonomialIdeal power_ideal =
        closed ? integral_closure_power(ideal, s) : power(ideal, s);
    return degree_complex(power_ideal, a) == stanley_reisner(radical(ideal));
}

}  // namespace monreg
