#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"

namespace monreg {

/// A labeled test ideal; the label records how it was produced.
struct CorpusItem {
    std::string label;
    MonomialIdeal ideal;
};

/// Every proper nonzero squarefree monomial ideal on n variables, one
/// representative per variable-permutation orbit, deterministically ordered.
/// Squarefree ideals are antichains of nonempty variable subsets, so this is
/// a filtered antichain enumeration; n is capped at 4, where the raw search
/// space (all families of nonempty subsets) is still only 2^15.
std::vector<CorpusItem> exhaustive_squarefree(int n);

/// `count` pseudo-random monomial ideals: up to `max_vars` variables, up to
/// `max_mu` generators drawn with total degree in [1, max_deg].  The same
/// seed always yields the same sequence (the generator and the bounded draw
/// are both fixed, not implementation-defined).
std::vector<CorpusItem> random_monomial_corpus(int max_vars, Exponent max_deg,
                                               int max_mu, int count,
                                               std::uint64_t seed);

/// Known-behavior anchors: edge ideals of paths (P2..P5), cycles (C3..C5)
/// and complete graphs (K4, K5; K2 and K3 coincide with P2 and C3), powers
/// of the maximal ideal in up to 3 variables with exponent up to 3, and the
/// two-variable diagonal ideals (x^d, y^d) for d = 2, 3.
std::vector<CorpusItem> named_families();

/// The full acceptance corpus: exhaustive squarefree on 3 variables, then
/// 100 random ideals (up to 3 variables, degree <= 3, at most 4 generators)
/// from the seed, then the named families.
std::vector<CorpusItem> acceptance_corpus(std::uint64_t seed);

}  // namespace monreg
