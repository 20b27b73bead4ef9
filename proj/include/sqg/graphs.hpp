#ifndef SQG_GRAPHS_HPP
#define SQG_GRAPHS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sqg/complex.hpp"
#include "sqg/labels.hpp"

namespace sqg {

/// A finite simple graph with labelled vertices. `colours` is empty unless
/// the vertices carry colours (graphs derived from a 2-coloured complex).
struct SimpleGraph {
    std::vector<Label> labels;
    std::vector<Colour> colours;
    std::vector<std::pair<int, int>> edges;  // u < v, list sorted

    int order() const { return (int)labels.size(); }
    std::vector<std::vector<bool>> adjacency() const;
    SimpleGraph without_edge(std::size_t index) const;
    SimpleGraph without_vertex(int v) const;
};

/// Kneser graph: vertices are all k-subsets of [n] (lex order), edges join
/// disjoint pairs. Requires n >= 2k, k >= 1.
SimpleGraph kneser_graph(int n, int k);

/// Schrijver graph: the subgraph of the Kneser graph induced on the subsets
/// independent in the circuit C_n. Requires n >= 2k + 1.
SimpleGraph schrijver_graph(int n, int k);

/// The graph of a complex: its vertices and its bichromatic edges.
SimpleGraph associated_graph(const Complex& k);

/// A complex modulo its antipodal involution: vertices become labels, and
/// each antipodal pair of facets becomes one cell. The result is a
/// generalised complex: two cells may carry the same label set, and `facets`
/// then holds that label face twice.
struct Quotient {
    std::vector<Label> labels;   // lex-sorted, one per antipodal vertex pair
    std::vector<Face> facets;    // one per facet orbit, indices into labels
    SimpleGraph graph;           // edges induced by bichromatic 1-faces
};

/// Requires an antipode on `k` whose facet images are again facets; see
/// check_quotient_faces for the validating counterpart.
Quotient quotient_complex(const Complex& k);

/// True iff the graphs have equal label sets and every edge of `sub` (as a
/// label pair) is an edge of `super`.
bool is_spanning_subgraph(const SimpleGraph& sub, const SimpleGraph& super);

/// Exact chromatic number by branch and bound (DSATUR ordering, greedy clique
/// lower bound). `max_nodes` < 0 means unbounded. When the budget runs out the
/// result carries proven bounds with lower < upper.
struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    long long nodes = 0;  // decisions explored
    bool exact() const { return lower == upper; }
};
ChromaticResult chromatic_number(const SimpleGraph& g, long long max_nodes = -1);

/// Can g be properly coloured with `colours` colours? Returns 1 yes, 0 no,
/// -1 budget exhausted.
int colourable(const SimpleGraph& g, int colours, long long max_nodes,
               long long* nodes_used = nullptr);

/// For every edge e, does deleting e drop the chromatic number? Also asserts
/// the drop is by exactly one.
struct CriticalityResult {
    int chi = 0;
    bool conclusive = false;
    bool critical = false;
    std::vector<std::size_t> robust_edges;  // edges whose deletion keeps chi
};
CriticalityResult check_edge_critical(const SimpleGraph& g, long long max_nodes = -1);

/// Same question for vertex deletions.
CriticalityResult check_vertex_critical(const SimpleGraph& g,
                                        long long max_nodes = -1);

} // namespace sqg

#endif
