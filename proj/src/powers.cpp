#include "monreg/powers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "monreg/errors.hpp"
#include "monreg/simplex.hpp"
#include "monreg/simplicial.hpp"

namespace monreg {

namespace {

Monomial complement_product(int nvars, Face prime) {
    std::vector<Exponent> e(static_cast<std::size_t>(nvars), 0);
    for (int j = 0; j < nvars; ++j)
        if (!(prime >> j & 1)) e[static_cast<std::size_t>(j)] = 1;
    return Monomial(std::move(e));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& pieces) {
    MonomialIdeal acc = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) acc = intersect(acc, pieces[i]);
    return acc;
}

}  // namespace

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::int64_t m) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("symbolic_power: requires a proper nonzero ideal");
    if (m < 1) throw DomainError("symbolic_power: exponent must be positive");

    const int n = ideal.nvars();
    const std::vector<Face> primes = minimal_primes(ideal);
    const MonomialIdeal ordinary = power(ideal, m);

    std::vector<MonomialIdeal> pieces;
    pieces.reserve(primes.size());
    for (Face prime : primes)
        pieces.push_back(saturate_monomial(ordinary, complement_product(n, prime)));
    MonomialIdeal result = intersect_all(pieces);

    if (ideal.is_squarefree()) {
        // Independent route for squarefree input: the symbolic power is the
        // intersection of the m-th powers of the minimal primes.  Both routes
        // must agree; a mismatch means one of them is implemented wrongly.
        std::vector<MonomialIdeal> prime_powers;
        prime_powers.reserve(primes.size());
        for (Face prime : primes) {
            std::vector<Monomial> vars;
            for (int j = 0; j < n; ++j)
                if (prime >> j & 1) vars.push_back(Monomial::variable(n, j));
            prime_powers.push_back(power(MonomialIdeal(n, std::move(vars)), m));
        }
        if (intersect_all(prime_powers) != result)
            throw std::logic_error(
                "symbolic_power: saturation and prime-power routes disagree");
    }
    return result;
}

bool newton_member(const Monomial& candidate, const MonomialIdeal& ideal,
                   std::int64_t s) {
    if (candidate.nvars() != ideal.nvars())
        throw DomainError("newton_member: variable counts differ");
    if (s < 1) throw DomainError("newton_member: power must be positive");
    if (ideal.is_zero()) return false;

    const int n = ideal.nvars();
    const std::size_t k = ideal.gens().size();
    std::vector<std::vector<Rational>> lhs(
        static_cast<std::size_t>(n), std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(n));
    for (std::size_t g = 0; g < k; ++g)
        for (int j = 0; j < n; ++j)
            lhs[static_cast<std::size_t>(j)][g] = ideal.gens()[g].exponent(j);
    for (int j = 0; j < n; ++j)
        rhs[static_cast<std::size_t>(j)] = candidate.exponent(j);
    return rational_feasible(lhs, rhs, Rational(s));
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal,
                                     std::int64_t s, std::int64_t cell_cap) {
    if (s < 1)
        throw DomainError("integral_closure_power: power must be positive");
    if (ideal.is_zero() || ideal.is_unit()) return ideal;

    const int n = ideal.nvars();
    const std::vector<Exponent> rho = per_variable_max(ideal);

    // Any member of the closure clamps to a member inside [0, s*rho] that
    // still divides it, so the box contains every minimal generator.
    std::vector<Exponent> bound(static_cast<std::size_t>(n));
    std::int64_t cells = 1;
    for (int j = 0; j < n; ++j) {
        const Exponent limit = std::numeric_limits<Exponent>::max();
        if (rho[static_cast<std::size_t>(j)] > limit / s)
            throw OverflowError("integral_closure_power: box bound overflow");
        bound[static_cast<std::size_t>(j)] = s * rho[static_cast<std::size_t>(j)];
        const Exponent width = bound[static_cast<std::size_t>(j)] + 1;
        if (cells > cell_cap / width) {
            cells = cell_cap + 1;
            break;
        }
        cells *= width;
    }
    if (cells > cell_cap)
        throw ResourceError("closure_box_cap", cell_cap,
                            "candidate box for " + ideal.str() + " at power " +
                                std::to_string(s) + " is too large");

    // Visit candidates in increasing total degree.  A candidate divisible by
    // an already-found generator is a non-minimal member; an indivisible
    // member must be a minimal generator, because all of its proper divisors
    // were visited earlier and none was a member.
    std::vector<std::vector<Exponent>> box;
    box.reserve(static_cast<std::size_t>(cells));
    std::vector<Exponent> point(static_cast<std::size_t>(n), 0);
    for (;;) {
        box.push_back(point);
        int j = 0;
        while (j < n && point[static_cast<std::size_t>(j)] ==
                            bound[static_cast<std::size_t>(j)]) {
            point[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        if (j == n) break;
        ++point[static_cast<std::size_t>(j)];
    }
    std::sort(box.begin(), box.end(),
              [](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
                  const Exponent da = std::accumulate(a.begin(), a.end(), Exponent(0));
                  const Exponent db = std::accumulate(b.begin(), b.end(), Exponent(0));
                  if (da != db) return da < db;
                  return a < b;
              });

    std::vector<Monomial> found;
    for (auto& e : box) {
        Monomial p(std::move(e));
        const bool dominated =
            std::any_of(found.begin(), found.end(),
                        [&p](const Monomial& g) { return g.divides(p); });
        if (!dominated && newton_member(p, ideal, s)) found.push_back(std::move(p));
    }
    return MonomialIdeal(n, std::move(found));
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal,
                               std::int64_t cell_cap) {
    return integral_closure_power(ideal, 1, cell_cap);
}

bool is_integrally_closed(const MonomialIdeal& ideal, std::int64_t cell_cap) {
    return integral_closure(ideal, cell_cap) == ideal;
}

std::int64_t uniform_power_scale(const MonomialIdeal& ideal, std::int64_t s_cap,
                                 std::int64_t cell_cap) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("uniform_power_scale: requires a proper nonzero ideal");
    const MonomialIdeal closure = integral_closure(ideal, cell_cap);
    for (std::int64_t s = 1; s <= s_cap; ++s) {
        const MonomialIdeal ideal_power = power(ideal, s);
        const bool all_in = std::all_of(
            closure.gens().begin(), closure.gens().end(),
            [&](const Monomial& u) { return ideal_power.contains(u.pow(s)); });
        if (all_in) return s;
    }
    throw ResourceError("power_scale_cap", s_cap,
                        "no uniform scale found for " + ideal.str());
}

}  // namespace monreg
