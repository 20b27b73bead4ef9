#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sqg/complex.hpp"

namespace sqg {

// The seed circuit for set size k: a 2(2k+1)-gon whose position p carries the
// arithmetic label family member starting at (p mod (2k+1))+1, coloured black
// on even positions. Antipodes sit 2k+1 steps apart.
Complex build_base_cycle(int k);

// A hemisphere: triangulated (n-2k)-ball whose boundary sphere is the one for
// circuit length n-1. boundary_ids / boundary_facets track that embedded
// boundary inside `complex`.
struct Ball {
    Complex complex;
    std::vector<int> boundary_ids;
    std::vector<Face> boundary_facets;
};

// Builds the whole recursive tower with memoisation. Every structural claim
// the recursion relies on is recomputed and checked at runtime; a violation
// raises construction_error rather than producing a silently wrong complex.
class Builder {
public:
    struct Options {
        // Fuse each temporary-clone pass with its contraction pass. Useful to
        // confirm that pass order does not change the output.
        bool interleave_contractions = false;
    };

    Builder() = default;
    explicit Builder(Options o) : opts_(o) {}

    // Sphere of dimension n-2k on the independent k-subsets of an n-circuit.
    // Requires n >= 2k+1, k >= 1.
    const Complex& sphere(int n, int k);

    // One-step thickening of sphere(n-1,k) with primary colour c. Requires
    // n >= 2k+2. For k == 1 the interior boundary degenerates to one apex.
    const Shell& shell(int n, int k, Colour c);

    // Hemisphere ball with primary colour c: the shell with its inner cavity
    // filled by a relabelled copy of ball(n-2,k-1,opposite(c)).
    const Ball& ball(int n, int k, Colour c);

private:
    Options opts_;
    std::map<std::pair<int, int>, Complex> spheres_;
    std::map<std::tuple<int, int, int>, Shell> shells_;
    std::map<std::tuple<int, int, int>, Ball> balls_;

    Complex make_sphere(int n, int k);
    Shell make_shell(int n, int k, Colour c);
    Ball make_ball(int n, int k, Colour c);
};

// Colour-preserving vertex map from the shell's interior boundary onto
// `target` (the sphere two circuit steps and one set size down), taking each
// label to its shifted core. Throws construction_error unless the map is a
// simplicial isomorphism.
std::map<int, int> interior_boundary_isomorphism(const Shell& s, const Complex& target);

}  // namespace sqg
