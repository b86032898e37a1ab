#include <doctest.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "helpers.hpp"
#include "monreg/corpus.hpp"
#include "monreg/errors.hpp"
#include "monreg/simplicial.hpp"

using namespace monreg;
using test::make_ideal;
using test::mono;

namespace {

Monomial face_monomial(int n, Face face) {
    std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (face >> v & 1) exps[static_cast<std::size_t>(v)] = 1;
    return Monomial(std::move(exps));
}

// Minimal variable covers of the generator supports, by brute force.
std::vector<Face> brute_minimal_covers(const MonomialIdeal& ideal) {
    const int n = ideal.nvars();
    std::vector<Face> covers;
    for (Face c = 0; c < (Face{1} << n); ++c) {
        bool hits_all = true;
        for (const Monomial& g : ideal.gens())
            if ((g.support_mask() & c) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all) covers.push_back(c);
    }
    std::vector<Face> minimal;
    for (Face c : covers) {
        bool is_minimal = true;
        for (Face d : covers)
            if (d != c && (d & c) == d) {
                is_minimal = false;
                break;
            }
        if (is_minimal) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](Face a, Face b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return minimal;
}

}  // namespace

TEST_CASE("complex construction and states") {
    const SimplicialComplex cx =
        SimplicialComplex::from_faces(3, {0b011, 0b001, 0b011, 0b100});
    CHECK(cx.facets() == std::vector<Face>{0b100, 0b011});
    CHECK(cx.dim() == 1);
    CHECK(cx.has_face(0b010));
    CHECK(cx.has_face(0));
    CHECK_FALSE(cx.has_face(0b101));

    const SimplicialComplex none = SimplicialComplex::void_complex(3);
    CHECK(none.is_void());
    CHECK_FALSE(none.has_face(0));
    CHECK_THROWS_AS(none.dim(), DomainError);

    const SimplicialComplex empty_only = SimplicialComplex::irrelevant_complex(3);
    CHECK(empty_only.is_irrelevant());
    CHECK(empty_only.dim() == -1);
    CHECK(empty_only.has_face(0));
    CHECK_FALSE(empty_only.has_face(0b001));

    CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {0b100}), DomainError);
}

TEST_CASE("all_faces is sorted and capped") {
    const SimplicialComplex simplex = SimplicialComplex::from_faces(4, {0b1111});
    const std::vector<Face> faces = simplex.all_faces();
    CHECK(faces.size() == 16);
    CHECK(faces.front() == 0);
    for (std::size_t i = 1; i < faces.size(); ++i) {
        const int pa = std::popcount(faces[i - 1]), pb = std::popcount(faces[i]);
        CHECK((pa < pb || (pa == pb && faces[i - 1] < faces[i])));
    }
    CHECK_THROWS_AS(simplex.all_faces(7), ResourceError);
}

TEST_CASE("links") {
    // Hollow triangle.
    const SimplicialComplex cx =
        SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
    CHECK(cx.link(0) == cx);
    CHECK(cx.link(0b001) == SimplicialComplex::from_faces(3, {0b010, 0b100}));
    CHECK(cx.link(0b011) == SimplicialComplex::irrelevant_complex(3));
    CHECK_THROWS_AS(cx.link(0b111), DomainError);
}

TEST_CASE("stanley_reisner states") {
    CHECK(stanley_reisner(MonomialIdeal::unit(3)).is_void());
    CHECK(stanley_reisner(make_ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))
              .is_irrelevant());
    CHECK(stanley_reisner(MonomialIdeal::zero(3)) ==
          SimplicialComplex::from_faces(3, {0b111}));
    CHECK_THROWS_AS(stanley_reisner(make_ideal(2, {{2, 0}})), DomainError);
}

TEST_CASE("stanley_reisner known complexes") {
    // Edge ideal of the triangle graph: only the three vertices survive.
    CHECK(stanley_reisner(
              make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) ==
          SimplicialComplex::from_faces(3, {0b001, 0b010, 0b100}));
    // One cubic generator: boundary of the 2-simplex.
    CHECK(stanley_reisner(make_ideal(3, {{1, 1, 1}})) ==
          SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110}));
}

TEST_CASE("stanley_reisner against the face-membership oracle") {
    for (int n : {3, 4}) {
        for (const CorpusItem& item : exhaustive_squarefree(n)) {
            if (!item.ideal.is_proper()) continue;
            const SimplicialComplex cx = stanley_reisner(item.ideal);
            for (Face f = 0; f < (Face{1} << n); ++f) {
                CAPTURE(item.label);
                CAPTURE(f);
                CHECK(cx.has_face(f) ==
                      !item.ideal.contains(face_monomial(n, f)));
            }
        }
    }
}

TEST_CASE("minimal primes against the brute-force cover oracle") {
    CHECK(minimal_primes(make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) ==
          std::vector<Face>{0b011, 0b101, 0b110});
    CHECK(minimal_primes(make_ideal(3, {{2, 1, 0}, {0, 0, 1}})) ==
          std::vector<Face>{0b101, 0b110});

    for (int n : {3, 4}) {
        for (const CorpusItem& item : exhaustive_squarefree(n)) {
            if (!item.ideal.is_proper() || item.ideal.is_zero()) continue;
            CAPTURE(item.label);
            CHECK(minimal_primes(item.ideal) == brute_minimal_covers(item.ideal));
        }
    }
    // Exponents never matter, only supports.
    const MonomialIdeal fat = make_ideal(3, {{4, 2, 0}, {0, 3, 5}, {1, 0, 7}});
    CHECK(minimal_primes(fat) == brute_minimal_covers(fat));

    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::zero(2)), DomainError);
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(2)), DomainError);
}

TEST_CASE("height") {
    CHECK(height(make_ideal(2, {{1, 0}})) == 1);
    CHECK(height(make_ideal(2, {{2, 0}, {0, 2}})) == 2);
    CHECK(height(make_ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
    CHECK(height(make_ideal(3, {{1, 1, 1}})) == 1);
}
