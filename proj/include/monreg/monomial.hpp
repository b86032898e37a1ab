#ifndef MONREG_MONOMIAL_HPP
#define MONREG_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "monreg/errors.hpp"

namespace monreg {

using Exponent = std::int64_t;

/// A monomial in n variables, stored as its exponent tuple.  Immutable
/// after construction; all arithmetic is overflow-checked.
class Monomial {
public:
    /// Throws DomainError on negative entries.
    explicit Monomial(std::vector<Exponent> exponents);

    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index);

    int nvars() const { return static_cast<int>(exponents_.size()); }
    Exponent exponent(int index) const { return exponents_[static_cast<std::size_t>(index)]; }
    const std::vector<Exponent>& exponents() const { return exponents_; }

    Exponent degree() const;
    /// Bit j set iff the exponent of variable j is positive.  Requires n <= 64.
    std::uint64_t support_mask() const;

    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(Exponent k) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    /// this / gcd(this, other); total on all pairs.
    Monomial quotient_by_gcd(const Monomial& other) const;
    /// Componentwise min with the given bounds.
    Monomial clamp(const std::vector<Exponent>& bounds) const;
    /// Squarefree part: every positive exponent replaced by 1.
    Monomial squarefree_part() const;

    bool operator==(const Monomial& other) const = default;
    /// Lexicographic on exponent tuples.
    std::strong_ordering operator<=>(const Monomial& other) const;

    /// "x^2*y" for n <= 3 (variables x, y, z), "x1^2*x2" beyond; "1" for the
    /// trivial monomial.
    std::string str() const;

private:
    std::vector<Exponent> exponents_;
};

/// A monomial ideal given by its unique minimal generating set, kept sorted
/// (descending lexicographic) so equal ideals compare equal as values.
/// The zero ideal has no generators; the unit ideal has the single trivial
/// generator.  Immutable after construction.
class MonomialIdeal {
public:
    /// Minimizes, deduplicates and sorts the generators.  Throws DomainError
    /// if a generator has the wrong number of variables.
    MonomialIdeal(int nvars, std::vector<Monomial> generators);

    static MonomialIdeal zero(int nvars);
    static MonomialIdeal unit(int nvars);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;

    /// True iff some generator divides u.
    bool contains(const Monomial& u) const;

    bool operator==(const MonomialIdeal& other) const = default;

    /// "(x^2*y, y^3)"; "(0)" for the zero ideal.
    std::string str() const;

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

/// The ideal generated by the divisibility-minimal elements of `generators`.
MonomialIdeal minimize(const std::vector<Monomial>& generators, int nvars);

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// I^m for m >= 1; throws DomainError on m == 0 so the unit ideal is never
/// produced silently.
MonomialIdeal power(const MonomialIdeal& ideal, Exponent m);

/// Generated by lcm(u, v) over generator pairs.
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// I : v, generated by u / gcd(u, v) over the generators u.
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& v);

/// I : v^infinity, the fixed point of the colon iteration.
MonomialIdeal saturate_monomial(const MonomialIdeal& ideal, const Monomial& v);

/// Radical: generated by the squarefree parts of the generators.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Smallest positive exponent of any variable in any minimal generator.
/// Requires a nonzero proper ideal.
Exponent gamma(const MonomialIdeal& ideal);

/// Number of minimal generators; requires a nonzero ideal.
std::size_t mu(const MonomialIdeal& ideal);

/// Componentwise lcm of all generators; requires a nonzero ideal.
Monomial lcm_of_gens(const MonomialIdeal& ideal);

/// rho_j = max exponent of variable j over the generators; 0 exactly when
/// variable j divides no generator.  Requires a nonzero ideal.
std::vector<Exponent> per_variable_max(const MonomialIdeal& ideal);

} // namespace monreg

#endif
