#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "monreg/errors.hpp"
#include "monreg/powers.hpp"
#include "monreg/simplex.hpp"

using namespace monreg;
using test::make_ideal;
using test::mono;

TEST_CASE("symbolic powers of the triangle edge ideal") {
    const MonomialIdeal triangle =
        make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

    const MonomialIdeal sym2 = symbolic_power(triangle, 2);
    CHECK(sym2 == make_ideal(3, {{2, 2, 0}, {0, 2, 2}, {2, 0, 2}, {1, 1, 1}}));

    const MonomialIdeal ord2 = power(triangle, 2);
    CHECK(ord2.gens().size() == 6);
    CHECK_FALSE(ord2.contains(mono({1, 1, 1})));
    CHECK(sym2.contains(mono({1, 1, 1})));
    // The ordinary power sits inside the symbolic power.
    for (const Monomial& g : ord2.gens()) CHECK(sym2.contains(g));

    CHECK(symbolic_power(triangle, 1) == triangle);
}

TEST_CASE("symbolic power of a prime is the ordinary power") {
    const MonomialIdeal prime = make_ideal(3, {{1, 0, 0}, {0, 0, 1}});
    for (Exponent m = 1; m <= 3; ++m)
        CHECK(symbolic_power(prime, m) == power(prime, m));
}

TEST_CASE("symbolic power localizes away embedded components") {
    // (x^2, xy) = x(x, y) has (x) as its only minimal prime, so the second
    // symbolic power is (x^2).
    const MonomialIdeal ideal = make_ideal(2, {{2, 0}, {1, 1}});
    CHECK(symbolic_power(ideal, 2) == make_ideal(2, {{2, 0}}));
    CHECK_FALSE(power(ideal, 2).contains(mono({2, 0})));
}

TEST_CASE("symbolic power input validation") {
    const MonomialIdeal triangle =
        make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK_THROWS_AS(symbolic_power(triangle, 0), DomainError);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(2), 1), DomainError);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::unit(2), 1), DomainError);
}

TEST_CASE("rational feasibility solver") {
    using Row = std::vector<Rational>;
    // lambda1 + lambda2 = 1 with lambda1 + 2*lambda2 <= 1: feasible only at
    // the vertex (1, 0).
    CHECK(rational_feasible({Row{1, 2}}, {Rational(1)}, Rational(1)));
    // ... but infeasible if we also require lambda1 <= 1/2.
    CHECK_FALSE(rational_feasible({Row{1, 2}, Row{1, 0}},
                                  {Rational(1), Rational(1, 2)}, Rational(1)));
    // Negative right-hand sides are legal inputs.
    CHECK_FALSE(rational_feasible({Row{1, 1}}, {Rational(-1)}, Rational(1)));
}

TEST_CASE("Newton polyhedron membership") {
    const MonomialIdeal diag2 = make_ideal(2, {{2, 0}, {0, 2}});
    CHECK(newton_member(mono({1, 1}), diag2, 1));
    CHECK_FALSE(newton_member(mono({1, 0}), diag2, 1));
    CHECK(newton_member(mono({2, 0}), diag2, 1));

    const MonomialIdeal diag4 = make_ideal(2, {{4, 0}, {0, 4}});
    CHECK(newton_member(mono({3, 3}), diag4, 1));
    CHECK_FALSE(newton_member(mono({3, 3}), diag4, 2));
    CHECK(newton_member(mono({4, 4}), diag4, 2));
}

TEST_CASE("integral closure golden values") {
    CHECK(integral_closure(make_ideal(2, {{2, 0}, {0, 2}})) ==
          make_ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(integral_closure(make_ideal(2, {{3, 0}, {0, 3}})) ==
          make_ideal(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
    // Already closed: the Newton polyhedron adds nothing.
    const MonomialIdeal closed = make_ideal(2, {{3, 0}, {1, 1}, {0, 3}});
    CHECK(integral_closure(closed) == closed);
    // Degenerate inputs are fixed points.
    CHECK(integral_closure(MonomialIdeal::zero(2)) == MonomialIdeal::zero(2));
    CHECK(integral_closure(MonomialIdeal::unit(2)) == MonomialIdeal::unit(2));
}

TEST_CASE("squarefree ideals are integrally closed") {
    const MonomialIdeal triangle =
        make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(is_integrally_closed(triangle));
    CHECK(is_integrally_closed(make_ideal(2, {{1, 0}, {0, 1}})));
    CHECK_FALSE(is_integrally_closed(make_ideal(2, {{2, 0}, {0, 2}})));
}

TEST_CASE("closure of powers") {
    const MonomialIdeal diag3 = make_ideal(2, {{3, 0}, {0, 3}});
    // closure((x^3, y^3)^2) is spanned by all monomials of degree 6.
    CHECK(integral_closure_power(diag3, 2) ==
          make_ideal(2, {{6, 0}, {5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}, {0, 6}}));

    // Idempotence of the closure.
    for (const MonomialIdeal& ideal :
         {make_ideal(2, {{2, 0}, {0, 2}}), make_ideal(2, {{4, 0}, {1, 2}}),
          make_ideal(3, {{2, 1, 0}, {0, 0, 3}})}) {
        const MonomialIdeal once = integral_closure(ideal);
        CHECK(integral_closure(once) == once);
    }

    // closure(I^{s+1}) sits inside closure(I^s).
    for (Exponent s = 1; s <= 3; ++s) {
        const MonomialIdeal big = integral_closure_power(diag3, s);
        const MonomialIdeal next = integral_closure_power(diag3, s + 1);
        for (const Monomial& g : next.gens()) CHECK(big.contains(g));
    }
}

TEST_CASE("closure generators scale into closures of powers") {
    for (const MonomialIdeal& ideal :
         {make_ideal(2, {{2, 0}, {0, 2}}), make_ideal(2, {{3, 0}, {0, 3}}),
          make_ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 1, 1}})}) {
        const MonomialIdeal closed_ideal = integral_closure(ideal);
        for (const Monomial& u : closed_ideal.gens())
            for (Exponent k = 1; k <= 6; ++k) {
                const std::string ideal_str = ideal.str();
                const std::string gen_str = u.str();
                CAPTURE(ideal_str);
                CAPTURE(gen_str);
                CHECK(newton_member(u.pow(k), ideal, k));
            }
    }
}

TEST_CASE("uniform power scale") {
    CHECK(uniform_power_scale(make_ideal(2, {{2, 0}, {0, 2}})) == 2);
    CHECK(uniform_power_scale(make_ideal(2, {{3, 0}, {0, 3}})) == 3);
    // Integrally closed ideals have scale 1 and conversely.
    CHECK(uniform_power_scale(make_ideal(2, {{1, 0}, {0, 1}})) == 1);
    CHECK(uniform_power_scale(make_ideal(2, {{2, 0}, {1, 1}, {0, 2}})) == 1);
    const MonomialIdeal triangle =
        make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(uniform_power_scale(triangle) == 1);

    CHECK_THROWS_AS(uniform_power_scale(make_ideal(2, {{2, 0}, {0, 2}}), 1),
                    ResourceError);
}

TEST_CASE("resource caps on closure boxes") {
    const MonomialIdeal ideal = make_ideal(2, {{9, 0}, {0, 9}});
    CHECK_THROWS_AS(integral_closure_power(ideal, 3, 100), ResourceError);
    try {
        integral_closure_power(ideal, 3, 100);
    } catch (const ResourceError& error) {
        CHECK(error.cap_name() == "closure_box_cap");
    }
}
