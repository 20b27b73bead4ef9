#ifndef SQG_HOMOLOGY_HPP
#define SQG_HOMOLOGY_HPP

#include <vector>

#include "sqg/complex.hpp"

namespace sqg {

/// Betti numbers over GF(2) of the simplicial complex generated by `facets`
/// (unreduced, so beta_0 counts connected components). Vertex ids may be
/// sparse. Index = degree; size = dim + 1. Empty input yields {}.
std::vector<long long> betti_gf2(const std::vector<Face>& facets);

/// Betti numbers over GF(2) of the quotient by a free involution: cells are
/// the face orbits of the complex generated by `facets`, with `antipode[v]`
/// the partner of vertex v. Distinct orbits may share a vertex-label image;
/// they stay distinct cells here, which is what makes the quotient of a
/// suspension come out as a projective space and not something smaller.
std::vector<long long> betti_gf2_orbits(const std::vector<Face>& facets,
                                        const std::vector<int>& antipode);

} // namespace sqg

#endif
