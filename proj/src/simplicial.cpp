#include "monreg/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace monreg {

namespace {

bool face_order(Face a, Face b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb)
        return pa < pb;
    return a < b;
}

void check_vertex_count(int nvertices) {
    if (nvertices < 0 || nvertices > 64)
        throw DomainError("simplicial complexes support 0 <= n <= 64 vertices");
}

// Enumerates the inclusion-minimal transversals of the hypergraph given by
// `edges` (all nonempty).  Branches on the vertices of the first uncovered
// edge; vertices already branched over at an ancestor are excluded, which
// keeps the enumeration finite and duplicate-light.  Non-minimal covers can
// still be produced and are filtered by the caller.
void enumerate_transversals(const std::vector<Face>& edges, Face chosen, Face excluded,
                            std::set<Face>& out) {
    auto uncovered = std::find_if(edges.begin(), edges.end(),
                                  [&](Face e) { return (e & chosen) == 0; });
    if (uncovered == edges.end()) {
        out.insert(chosen);
        return;
    }
    Face candidates = *uncovered & ~excluded;
    Face used = 0;
    while (candidates != 0) {
        Face bit = candidates & (~candidates + 1);
        enumerate_transversals(edges, chosen | bit, excluded | used, out);
        used |= bit;
        candidates &= ~bit;
    }
}

} // namespace

SimplicialComplex::SimplicialComplex(int nvertices, std::vector<Face> facets)
    : nvertices_(nvertices), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_faces(int nvertices, std::vector<Face> faces) {
    check_vertex_count(nvertices);
    const Face universe = nvertices == 64 ? ~Face{0} : (Face{1} << nvertices) - 1;
    std::vector<Face> maximal;
    std::sort(faces.begin(), faces.end(), face_order);
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        Face f = *it;
        if ((f & ~universe) != 0)
            throw DomainError("face uses a vertex outside the vertex set");
        bool contained = std::any_of(maximal.begin(), maximal.end(),
                                     [&](Face m) { return (f & ~m) == 0; });
        if (!contained)
            maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), face_order);
    return SimplicialComplex(nvertices, std::move(maximal));
}

SimplicialComplex SimplicialComplex::void_complex(int nvertices) {
    check_vertex_count(nvertices);
    return SimplicialComplex(nvertices, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int nvertices) {
    check_vertex_count(nvertices);
    return SimplicialComplex(nvertices, {0});
}

int SimplicialComplex::dim() const {
    if (is_void())
        throw DomainError("the void complex has no dimension");
    int d = -1;
    for (Face f : facets_)
        d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::has_face(Face face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](Face m) { return (face & ~m) == 0; });
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
    std::set<Face> faces;
    for (Face facet : facets_) {
        // Iterate over all submasks of the facet, including 0.
        Face sub = facet;
        for (;;) {
            faces.insert(sub);
            if (faces.size() > cap)
                throw ResourceError("face_enumeration", static_cast<long long>(cap),
                                    "too many faces to enumerate");
            if (sub == 0)
                break;
            sub = (sub - 1) & facet;
        }
    }
    std::vector<Face> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

SimplicialComplex SimplicialComplex::link(Face face) const {
    if (!has_face(face))
        throw DomainError("link requires a face of the complex");
    std::vector<Face> link_facets;
    for (Face m : facets_)
        if ((face & ~m) == 0)
            link_facets.push_back(m & ~face);
    return from_faces(nvertices_, std::move(link_facets));
}

std::string SimplicialComplex::str() const {
    if (is_void())
        return "{}";
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << "{";
        bool first = true;
        for (int v = 0; v < nvertices_; ++v)
            if (facets_[i] >> v & 1) {
                if (!first)
                    out << ",";
                out << v + 1;
                first = false;
            }
        out << "}";
    }
    out << ">";
    return out.str();
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw DomainError("Stanley-Reisner complex requires a squarefree ideal");
    const int n = ideal.nvars();
    check_vertex_count(n);
    if (ideal.is_unit())
        return SimplicialComplex::void_complex(n);
    if (ideal.is_zero()) {
        const Face universe = n == 64 ? ~Face{0} : (Face{1} << n) - 1;
        return SimplicialComplex::from_faces(n, {universe});
    }
    // F is a face iff no generator support is contained in F, i.e. the
    // complement of F is a transversal; facets are complements of minimal
    // transversals.
    const Face universe = n == 64 ? ~Face{0} : (Face{1} << n) - 1;
    std::vector<Face> facets;
    for (Face cover : minimal_primes(ideal))
        facets.push_back(universe & ~cover);
    return SimplicialComplex::from_faces(n, std::move(facets));
}

std::vector<Face> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw DomainError("minimal primes require a nonzero proper ideal");
    std::vector<Face> edges;
    edges.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens())
        edges.push_back(g.support_mask());
    std::set<Face> covers;
    enumerate_transversals(edges, 0, 0, covers);
    std::vector<Face> minimal;
    for (Face c : covers) {
        bool dominated = std::any_of(covers.begin(), covers.end(),
                                     [&](Face d) { return d != c && (d & ~c) == 0; });
        if (!dominated)
            minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), face_order);
    return minimal;
}

int height(const MonomialIdeal& ideal) {
    int best = 65;
    for (Face c : minimal_primes(ideal))
        best = std::min(best, std::popcount(c));
    return best;
}

} // namespace monreg
