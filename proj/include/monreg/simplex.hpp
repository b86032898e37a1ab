#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace monreg {

using Rational = boost::multiprecision::mpq_rational;

/// Decides feasibility of the system
///
///     A * lambda <= b   (componentwise)
///     sum(lambda) == s
///     lambda >= 0
///
/// over the rationals, where A is dense (rows = constraints, cols = variables).
/// Returns true iff a feasible point exists.  Exact arithmetic throughout; the
/// answer carries no rounding error.  Uses a phase-1 simplex with Bland's rule,
/// so it terminates on every input.
bool rational_feasible(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const Rational& s);

}  // namespace monreg
