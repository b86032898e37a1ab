#pragma once

#include <cstdint>

#include "monreg/monomial.hpp"

namespace monreg {

/// m-th symbolic power I^(m), the intersection of the P-primary pieces of I^m
/// over the minimal primes P of I.  Computed as
///
///     I^(m) = intersection over minimal primes P of  (I^m : (prod of the
///             variables outside P)^infinity)
///
/// which is valid for every monomial ideal.  When the ideal is squarefree the
/// result is also computed by the direct formula  intersection of P^m  and the
/// two answers are required to agree.
///
/// Requires a proper nonzero ideal and m >= 1.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::int64_t m);

/// True iff `candidate` lies in the integral closure of ideal^s, decided by
/// exact rational feasibility of the Newton-polyhedron membership system
///
///     exists lambda_g >= 0 with sum lambda_g = s and
///     sum lambda_g * exponents(g) <= exponents(candidate) componentwise
///
/// over the minimal generators g of the ideal.  Requires s >= 1 and matching
/// variable counts.
bool newton_member(const Monomial& candidate, const MonomialIdeal& ideal,
                   std::int64_t s);

/// The integral closure of ideal^s as a monomial ideal.  Every minimal
/// generator of the closure divides the componentwise bound s * rho, where
/// rho_j is the largest exponent of variable j among the generators, so the
/// search box [0, s*rho_1] x ... x [0, s*rho_n] is exhaustive.  Throws
/// ResourceError("closure_box_cap") when the box holds more than `cell_cap`
/// candidate exponent vectors.  Requires s >= 1.
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal,
                                     std::int64_t s,
                                     std::int64_t cell_cap = 262144);

/// Integral closure of the ideal itself (s = 1).
MonomialIdeal integral_closure(const MonomialIdeal& ideal,
                               std::int64_t cell_cap = 262144);

/// True iff the ideal equals its own integral closure.
bool is_integrally_closed(const MonomialIdeal& ideal,
                          std::int64_t cell_cap = 262144);

/// Least s >= 1 such that u^s lies in ideal^s for every minimal generator u
/// of the integral closure of the ideal.  Such an s always exists; the search
/// stops at `s_cap` with ResourceError("power_scale_cap") if none was found
/// by then.  Requires a proper nonzero ideal.
std::int64_t uniform_power_scale(const MonomialIdeal& ideal,
                                 std::int64_t s_cap = 12,
                                 std::int64_t cell_cap = 262144);

}  // namespace monreg
