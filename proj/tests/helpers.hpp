// Shared construction helpers for the test suite.
#pragma once

#include <initializer_list>
#include <vector>

#include "monreg/monomial.hpp"

namespace test {

inline monreg::Monomial mono(std::vector<monreg::Exponent> exponents) {
    return monreg::Monomial(std::move(exponents));
}

inline monreg::MonomialIdeal make_ideal(
    int nvars, std::initializer_list<std::vector<monreg::Exponent>> rows) {
    std::vector<monreg::Monomial> gens;
    for (const auto& row : rows) gens.emplace_back(row);
    return monreg::MonomialIdeal(nvars, std::move(gens));
}

}  // namespace test
