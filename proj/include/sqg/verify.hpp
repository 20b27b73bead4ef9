#ifndef SQG_VERIFY_HPP
#define SQG_VERIFY_HPP

#include <string>
#include <vector>

#include "sqg/complex.hpp"

namespace sqg {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // witness on failure, short summary on success
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Is `k` a triangulated d-sphere? Checks purity, the two-facets-per-ridge
/// condition, connectivity, Euler characteristic 1 + (-1)^d, and GF(2) Betti
/// numbers (1,0,...,0,1). Vertex links are checked recursively when d <= 3 or
/// `deep_links` is set.
CheckResult check_sphere(const Complex& k, int d, bool deep_links = false);

/// The antipode must be a fixed-point-free involution that preserves labels,
/// swaps colours, maps facets onto facets, and pairs no two vertices of a
/// common face.
CheckResult check_antisymmetry(const Complex& k);

/// Every maximal face contains both colours.
CheckResult check_no_monochromatic_facets(const Complex& k);

/// The labels across any bichromatic edge are disjoint sets.
CheckResult check_edge_label_disjointness(const Complex& k);

/// Every label of V(n,kk) appears exactly once per colour.
CheckResult check_label_census(const Complex& k, int n, int kk);

/// Levels across a bichromatic edge differ by at most one, with equality only
/// at level zero.
CheckResult check_edge_levels(const Complex& k, int n);

/// A black label is nonsingular iff for every realized white core value some
/// facet through it avoids all whites with that core (kk >= 2; and the mirror
/// statement for white labels).
CheckResult check_core_avoidance(const Complex& k, int kk);

/// Across a monochromatic edge with a singular endpoint, the two cores agree.
CheckResult check_singular_neighbour_cores(const Complex& k, int kk);

/// Every facet of `sub` is a face of `super`, matching vertices by colour and
/// label (a subcomplex embedding; not necessarily induced).
CheckResult check_subcomplex(const Complex& sub, const Complex& super);

/// Each quotient facet is covered by exactly one antipodal pair of facets.
CheckResult check_quotient_faces(const Complex& k);

/// Every facet of the quotient induces a complete bipartite graph with at
/// least one edge in the quotient graph.
CheckResult check_quadrangulation(const Complex& k);

/// GF(2) Betti numbers of the quotient are 1 in every degree 0..d.
CheckResult check_quotient_homology(const Complex& k, int d);

/// All checks applicable to a finished sphere for circuit length n and set
/// size kk, in a fixed order.
Report verify_sphere(const Complex& k, int n, int kk, bool deep_links = false);

} // namespace sqg

#endif
