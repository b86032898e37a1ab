#include "monreg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "monreg/errors.hpp"

namespace monreg {

namespace {

using Mask = std::uint32_t;

Monomial mask_to_monomial(int n, Mask mask) {
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        if (mask >> j & 1) e[static_cast<std::size_t>(j)] = 1;
    return Monomial(std::move(e));
}

Mask permute_mask(Mask mask, const std::vector<int>& perm) {
    Mask out = 0;
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (mask >> j & 1) out |= Mask{1} << perm[j];
    return out;
}

/// Canonical form of a set of variable subsets under variable permutation:
/// the lexicographically least sorted mask vector over all permutations.
std::vector<Mask> canonical_orbit(const std::vector<Mask>& masks, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
        std::vector<Mask> image;
        image.reserve(masks.size());
        for (Mask m : masks) image.push_back(permute_mask(m, perm));
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Uniform-enough draw in [0, bound); deterministic because the engine's
/// output sequence is fixed by the standard.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

MonomialIdeal edge_ideal(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Monomial> gens;
    gens.reserve(edges.size());
    for (auto [u, v] : edges)
        gens.push_back(Monomial::variable(n, u) * Monomial::variable(n, v));
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal maximal_ideal(int n) {
    std::vector<Monomial> vars;
    for (int j = 0; j < n; ++j) vars.push_back(Monomial::variable(n, j));
    return MonomialIdeal(n, std::move(vars));
}

}  // namespace

std::vector<CorpusItem> exhaustive_squarefree(int n) {
    if (n < 1 || n > 4)
        throw DomainError("exhaustive_squarefree: n must be between 1 and 4");
    const Mask full = (Mask{1} << n) - 1;

    // Subsets of the nonempty variable subsets that form antichains under
    // inclusion; for squarefree monomials inclusion is divisibility, so each
    // antichain is already a minimal generating set.
    std::set<std::vector<Mask>> canon;
    for (Mask choice = 1; choice < (Mask{1} << full); ++choice) {
        std::vector<Mask> masks;
        for (Mask m = 1; m <= full; ++m)
            if (choice >> (m - 1) & 1) masks.push_back(m);
        bool antichain = true;
        for (std::size_t i = 0; i < masks.size() && antichain; ++i)
            for (std::size_t j = 0; j < masks.size() && antichain; ++j)
                if (i != j && (masks[i] & masks[j]) == masks[i]) antichain = false;
        if (!antichain) continue;
        canon.insert(canonical_orbit(masks, n));
    }

    std::vector<CorpusItem> items;
    int index = 0;
    for (const std::vector<Mask>& masks : canon) {
        std::vector<Monomial> gens;
        gens.reserve(masks.size());
        for (Mask m : masks) gens.push_back(mask_to_monomial(n, m));
        items.push_back({"sqfree" + std::to_string(n) + "-" + std::to_string(index++),
                         MonomialIdeal(n, std::move(gens))});
    }
    return items;
}

std::vector<CorpusItem> random_monomial_corpus(int max_vars, Exponent max_deg,
                                               int max_mu, int count,
                                               std::uint64_t seed) {
    if (max_vars < 1 || max_deg < 1 || max_mu < 1 || count < 0)
        throw DomainError("random_monomial_corpus: caps must be positive");
    std::mt19937_64 rng(seed);
    std::vector<CorpusItem> items;
    items.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_vars)));
        const int g = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_mu)));
        std::vector<Monomial> gens;
        for (int t = 0; t < g; ++t) {
            const Exponent degree =
                1 + static_cast<Exponent>(bounded(rng, static_cast<std::uint64_t>(max_deg)));
            std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
            for (Exponent d = 0; d < degree; ++d)
                ++e[bounded(rng, static_cast<std::uint64_t>(n))];
            gens.emplace_back(std::move(e));
        }
        items.push_back({"random-" + std::to_string(i),
                         MonomialIdeal(n, std::move(gens))});
    }
    return items;
}

std::vector<CorpusItem> named_families() {
    std::vector<CorpusItem> items;

    for (int k = 2; k <= 5; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
        items.push_back({"path-" + std::to_string(k), edge_ideal(k, edges)});
    }
    for (int k = 3; k <= 5; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
        items.push_back({"cycle-" + std::to_string(k), edge_ideal(k, edges)});
    }
    for (int k = 4; k <= 5; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
        items.push_back({"complete-" + std::to_string(k), edge_ideal(k, edges)});
    }
    for (int n = 1; n <= 3; ++n)
        for (Exponent d = 1; d <= 3; ++d)
            items.push_back({"maxpow-n" + std::to_string(n) + "-d" + std::to_string(d),
                             power(maximal_ideal(n), d)});
    for (Exponent d = 2; d <= 3; ++d) {
        std::vector<Monomial> gens{Monomial::variable(2, 0).pow(d),
                                   Monomial::variable(2, 1).pow(d)};
        items.push_back({"diagonal-" + std::to_string(d),
                         MonomialIdeal(2, std::move(gens))});
    }
    return items;
}

std::vector<CorpusItem> acceptance_corpus(std::uint64_t seed) {
    std::vector<CorpusItem> items = exhaustive_squarefree(3);
    for (CorpusItem& item : random_monomial_corpus(3, 3, 4, 100, seed))
        items.push_back(std::move(item));
    for (CorpusItem& item : named_families()) items.push_back(std::move(item));
    return items;
}

}  // namespace monreg
