#ifndef MONREG_SIMPLICIAL_HPP
#define MONREG_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"

namespace monreg {

/// A face is a subset of the vertex set {0, ..., n-1} encoded as a bitmask.
using Face = std::uint64_t;

/// A simplicial complex on n <= 64 vertices, stored by its facets.
/// Three states are distinct: the void complex (no faces at all), the
/// irrelevant complex (single face, the empty set), and everything else.
class SimplicialComplex {
public:
    /// Builds the complex generated by the given faces; keeps the
    /// inclusion-maximal ones.  An empty list yields the void complex.
    static SimplicialComplex from_faces(int nvertices, std::vector<Face> faces);
    static SimplicialComplex void_complex(int nvertices);
    static SimplicialComplex irrelevant_complex(int nvertices);

    int nvertices() const { return nvertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }

    /// Dimension of the complex: max facet size - 1.  The irrelevant complex
    /// has dimension -1; calling this on the void complex is an error.
    int dim() const;

    bool has_face(Face face) const;

    /// All faces including the empty set, sorted by (cardinality, mask).
    /// Throws ResourceError if more than `cap` faces would be produced.
    std::vector<Face> all_faces(std::size_t cap = 1u << 20) const;

    /// Faces G disjoint from `face` with G union face still a face.
    /// Throws DomainError if `face` is not a face.
    SimplicialComplex link(Face face) const;

    bool operator==(const SimplicialComplex& other) const = default;

    std::string str() const;

private:
    SimplicialComplex(int nvertices, std::vector<Face> facets);

    int nvertices_;
    std::vector<Face> facets_;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the subsets F
/// with x_F outside the ideal.  The unit ideal gives the void complex, the
/// ideal of all variables gives the irrelevant complex, and the zero ideal
/// gives the full simplex.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Minimal primes of a nonzero proper monomial ideal, as variable subsets:
/// the inclusion-minimal transversals of the generator-support hypergraph.
/// Sorted by (cardinality, mask).
std::vector<Face> minimal_primes(const MonomialIdeal& ideal);

/// Minimum cardinality of a minimal prime.
int height(const MonomialIdeal& ideal);

} // namespace monreg

#endif
