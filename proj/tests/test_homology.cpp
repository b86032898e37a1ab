#include <doctest.h>

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "monreg/corpus.hpp"
#include "monreg/field.hpp"
#include "monreg/homology.hpp"
#include "monreg/simplicial.hpp"

using namespace monreg;
using test::make_ideal;

namespace {

ChainComplexDims dims(std::map<int, std::int64_t> values) {
    return ChainComplexDims(std::move(values));
}

// The 6-vertex triangulation of the real projective plane (antipodal
// quotient of the icosahedron).  Every pair is an edge; each of the 15
// edges lies in exactly two of the 10 triangles.
SimplicialComplex projective_plane() {
    auto f = [](int a, int b, int c) {
        return (Face{1} << a) | (Face{1} << b) | (Face{1} << c);
    };
    return SimplicialComplex::from_faces(
        6, {f(0, 1, 3), f(0, 1, 5), f(0, 2, 3), f(0, 2, 4), f(0, 4, 5),
            f(1, 2, 4), f(1, 2, 5), f(1, 3, 4), f(2, 3, 5), f(3, 4, 5)});
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& cx) {
    std::int64_t chi = 0;
    for (Face face : cx.all_faces())
        chi += (std::popcount(face) % 2 == 0) ? -1 : 1;
    return chi;
}

std::int64_t homology_alternating_sum(const ChainComplexDims& h) {
    std::int64_t sum = 0;
    for (const auto& [i, d] : h.nonzero())
        sum += (i % 2 == 0) ? d : -d;
    return sum;
}

}  // namespace

TEST_CASE("homology conventions") {
    const CoefficientField q = CoefficientField::rationals();
    CHECK(reduced_homology(SimplicialComplex::void_complex(3), q).all_zero());
    CHECK(reduced_homology(SimplicialComplex::irrelevant_complex(3), q) ==
          dims({{-1, 1}}));
    CHECK(reduced_homology(SimplicialComplex::from_faces(3, {0b001}), q)
              .all_zero());
}

TEST_CASE("small complexes over the rationals") {
    const CoefficientField q = CoefficientField::rationals();
    // Two points.
    CHECK(reduced_homology(SimplicialComplex::from_faces(2, {0b01, 0b10}), q) ==
          dims({{0, 1}}));
    // Hollow triangle: a circle.
    CHECK(reduced_homology(
              SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110}), q) ==
          dims({{1, 1}}));
    // Full simplex: contractible.
    CHECK(reduced_homology(SimplicialComplex::from_faces(4, {0b1111}), q)
              .all_zero());
    // Cone over the hollow triangle: contractible.
    CHECK(reduced_homology(SimplicialComplex::from_faces(
                               4, {0b1011, 0b1101, 0b1110}),
                           q)
              .all_zero());
    // Three isolated vertices.
    CHECK(reduced_homology(
              SimplicialComplex::from_faces(3, {0b001, 0b010, 0b100}), q) ==
          dims({{0, 2}}));
    // Disjoint union of two hollow triangles.
    CHECK(reduced_homology(SimplicialComplex::from_faces(
                               6, {0b000011, 0b000101, 0b000110, 0b011000,
                                   0b101000, 0b110000}),
                           q) == dims({{0, 1}, {1, 2}}));
}

TEST_CASE("boundary of the d-simplex is a (d-1)-sphere") {
    const CoefficientField q = CoefficientField::rationals();
    for (int d : {2, 3, 4}) {
        const int n = d + 1;
        std::vector<Face> facets;
        const Face full = (Face{1} << n) - 1;
        for (int v = 0; v < n; ++v) facets.push_back(full ^ (Face{1} << v));
        const ChainComplexDims h =
            reduced_homology(SimplicialComplex::from_faces(n, facets), q);
        CAPTURE(d);
        CHECK(h == dims({{d - 1, 1}}));
    }
}

TEST_CASE("projective plane: homology depends on the field") {
    const SimplicialComplex rp2 = projective_plane();
    REQUIRE(rp2.dim() == 2);
    REQUIRE(reduced_euler_characteristic(rp2) == 0);

    CHECK(reduced_homology(rp2, CoefficientField::rationals()).all_zero());
    CHECK(reduced_homology(rp2, CoefficientField::prime(2)) ==
          dims({{1, 1}, {2, 1}}));
    CHECK(reduced_homology(rp2, CoefficientField::prime(3)).all_zero());
    CHECK(reduced_homology(rp2, CoefficientField::prime(97)).all_zero());
}

TEST_CASE("homology is invariant under vertex relabeling") {
    const SimplicialComplex rp2 = projective_plane();
    // Relabel v -> (v + 2) mod 6 and v -> 5 - v.
    for (int mode : {0, 1}) {
        std::vector<Face> relabeled;
        for (Face facet : rp2.facets()) {
            Face image = 0;
            for (int v = 0; v < 6; ++v)
                if (facet >> v & 1) {
                    const int w = mode == 0 ? (v + 2) % 6 : 5 - v;
                    image |= Face{1} << w;
                }
            relabeled.push_back(image);
        }
        const SimplicialComplex moved =
            SimplicialComplex::from_faces(6, relabeled);
        for (const CoefficientField& field :
             {CoefficientField::rationals(), CoefficientField::prime(2)}) {
            CHECK(reduced_homology(moved, field) ==
                  reduced_homology(rp2, field));
        }
    }
}

TEST_CASE("Euler-Poincare across fields") {
    std::vector<SimplicialComplex> complexes;
    complexes.push_back(projective_plane());
    for (const CorpusItem& item : exhaustive_squarefree(4)) {
        if (!item.ideal.is_proper()) continue;
        complexes.push_back(stanley_reisner(item.ideal));
    }
    for (const SimplicialComplex& cx : complexes) {
        const std::int64_t chi = reduced_euler_characteristic(cx);
        for (const CoefficientField& field :
             {CoefficientField::rationals(), CoefficientField::prime(2),
              CoefficientField::prime(5)}) {
            const std::string complex_str = cx.str();
            const std::string field_str = field.str();
            CAPTURE(complex_str);
            CAPTURE(field_str);
            CHECK(homology_alternating_sum(reduced_homology(cx, field)) == chi);
        }
    }
}
