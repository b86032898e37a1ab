#pragma once

#include <cstdint>

#include "monreg/field.hpp"
#include "monreg/homology.hpp"
#include "monreg/monomial.hpp"
#include "monreg/simplicial.hpp"

namespace monreg {

/// The degree complex of J at the exponent vector a:
///
///     Delta_a(J) = stanley_reisner(radical(J : x^a))
///
/// Requires J nonzero.  The complex is void exactly when x^a lies in J.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a);

/// A certificate that reg(J) >= value: a face F of Delta_a(J) disjoint from
/// the support of a whose link has nonvanishing reduced homology in
/// dimension i - 1, giving value = |a| + i + 1.
struct RegWitness {
    Monomial a;
    Face face = 0;
    int i = 0;
    std::int64_t value = 0;
    CoefficientField field = CoefficientField::rationals();
};

/// Re-derives every invariant of the witness from scratch (complex, link,
/// homology) and checks value = |a| + i + 1.  True iff all hold.
bool verify_reg_witness(const MonomialIdeal& ideal, const RegWitness& witness);

/// Maximizes |a| + i + 1 over the box 0 <= a_j <= max(rho_j - 1, 0), all
/// faces F of Delta_a(J) disjoint from supp(a), and all i >= 0 with
/// nonvanishing reduced link homology in dimension i - 1.  The maximum equals
/// reg(J); the search returns the first arg-max in the deterministic order
/// (increasing |a|, then lexicographic a, then faces by (size, mask), then
/// increasing i).
///
/// Requires J nonzero proper.  Throws ResourceError("witness_box_cap") when
/// the a-box holds more than `cell_cap` points.
RegWitness reg_witness_search(const MonomialIdeal& ideal,
                              const CoefficientField& field,
                              std::int64_t cell_cap = 65536);

/// Same search over a caller-supplied box 0 <= a_j <= box[j].  The result is
/// always a sound lower-bound witness, but only the default box carries the
/// completeness guarantee.
RegWitness reg_witness_search_in_box(const MonomialIdeal& ideal,
                                     const CoefficientField& field,
                                     const std::vector<Exponent>& box,
                                     std::int64_t cell_cap = 65536);

/// Compares the degree complex of ideal^s (or of its integral closure when
/// `closed` is set) at a against the Stanley-Reisner complex of radical(I).
/// The two agree for every |a| <= gamma(I)*s - 1; that precondition is
/// enforced with a domain error so a vacuous comparison can't pass silently.
bool check_delta_stability(const MonomialIdeal& ideal, std::int64_t s,
                           const Monomial& a, bool closed);

}  // namespace monreg
