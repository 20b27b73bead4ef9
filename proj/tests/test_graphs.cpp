#include "catch2/catch_amalgamated.hpp"

#include <set>

#include "sqg/errors.hpp"
#include "sqg/graphs.hpp"

using namespace sqg;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back({i + 1});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back({i + 1});
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    g.edges.emplace_back(0, n - 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace

TEST_CASE("Kneser graphs", "[graphs]") {
    SimpleGraph petersen = kneser_graph(5, 2);
    REQUIRE(petersen.order() == 10);
    REQUIRE(petersen.edges.size() == 15);

    REQUIRE(kneser_graph(4, 1).edges.size() == 6);  // K_4

    SimpleGraph matching = kneser_graph(6, 3);  // perfect matching on 20 vertices
    REQUIRE(matching.order() == 20);
    REQUIRE(matching.edges.size() == 10);

    REQUIRE_THROWS_AS(kneser_graph(3, 2), parameter_error);
}

TEST_CASE("Schrijver graphs", "[graphs]") {
    SimpleGraph c5 = schrijver_graph(5, 2);
    REQUIRE(c5.order() == 5);
    REQUIRE(c5.edges.size() == 5);
    for (int v = 0; v < 5; ++v) {
        int deg = 0;
        for (auto [a, b] : c5.edges) deg += (a == v) + (b == v);
        REQUIRE(deg == 2);
    }

    REQUIRE(schrijver_graph(6, 1).edges.size() == 15);  // K_6

    SimpleGraph c7 = schrijver_graph(7, 3);
    REQUIRE(c7.order() == 7);
    REQUIRE(c7.edges.size() == 7);

    SimpleGraph sg62 = schrijver_graph(6, 2);
    REQUIRE(sg62.order() == 9);
    REQUIRE(sg62.edges.size() == 18);

    // always a subgraph of the Kneser graph
    REQUIRE_FALSE(is_spanning_subgraph(sg62, kneser_graph(6, 2)));  // fewer vertices
    std::set<Label> kg_labels;
    for (const Label& l : kneser_graph(6, 2).labels) kg_labels.insert(l);
    for (const Label& l : sg62.labels) REQUIRE(kg_labels.count(l) == 1);
}

TEST_CASE("associated and quotient graphs of the pentagon cover", "[graphs]") {
    std::vector<Label> labels = {{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5},
                                 {1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}};
    Complex c;
    for (int i = 0; i < 10; ++i)
        c.add_vertex(labels[i], i % 2 == 0 ? Colour::black : Colour::white);
    std::vector<Face> edges;
    for (int i = 0; i < 10; ++i) {
        Face e{i, (i + 1) % 10};
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    c.add_facets(edges);

    SimpleGraph assoc = associated_graph(c);
    REQUIRE(assoc.order() == 10);
    REQUIRE(assoc.edges.size() == 10);  // double cover of the 5-cycle

    c.set_antipode({{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    Quotient q = quotient_complex(c);
    REQUIRE(q.labels.size() == 5);
    REQUIRE(q.facets.size() == 5);
    REQUIRE(q.graph.edges.size() == 5);
    REQUIRE(is_spanning_subgraph(q.graph, schrijver_graph(5, 2)));
    // not spanning in the Kneser graph: that one also has the dependent sets
    REQUIRE_FALSE(is_spanning_subgraph(q.graph, kneser_graph(5, 2)));
}

TEST_CASE("facet orbits survive label collisions", "[graphs]") {
    // sign-coloured octahedron: all four cells land on the label set {1,2,3}
    Complex c;
    for (int axis = 1; axis <= 3; ++axis) {
        c.add_vertex({axis}, Colour::black);
        c.add_vertex({axis}, Colour::white);
    }
    std::vector<Face> tris;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int d = 0; d < 2; ++d) tris.push_back({a, 2 + b, 4 + d});
    c.add_facets(tris);
    c.set_antipode({{0, 1}, {2, 3}, {4, 5}});
    Quotient q = quotient_complex(c);
    REQUIRE(q.labels.size() == 3);
    REQUIRE(q.facets == std::vector<Face>(4, Face{0, 1, 2}));
    REQUIRE(q.graph.edges.size() == 3);
}

TEST_CASE("exact chromatic numbers of calibration graphs", "[coloring]") {
    for (int m = 1; m <= 8; ++m) {
        ChromaticResult r = chromatic_number(complete(m));
        REQUIRE(r.exact());
        REQUIRE(r.upper == m);
    }
    for (int m = 2; m <= 5; ++m) {
        REQUIRE(chromatic_number(cycle(2 * m)).upper == 2);
        REQUIRE(chromatic_number(cycle(2 * m + 1)).upper == 3);
    }
    REQUIRE(chromatic_number(kneser_graph(5, 2)).upper == 3);   // Petersen
    REQUIRE(chromatic_number(schrijver_graph(6, 2)).upper == 4);
    REQUIRE(chromatic_number(schrijver_graph(8, 3)).upper == 4);
    SimpleGraph empty;
    REQUIRE(chromatic_number(empty).upper == 0);
}

TEST_CASE("budget exhaustion reports honest bounds", "[coloring]") {
    ChromaticResult r = chromatic_number(cycle(5), 0);
    REQUIRE_FALSE(r.exact());
    REQUIRE(r.lower == 2);  // greedy clique finds an edge
    REQUIRE(r.upper == 3);  // greedy colouring
    REQUIRE(colourable(cycle(5), 2, 0) == -1);
    REQUIRE(colourable(cycle(5), 2, -1) == 0);
    REQUIRE(colourable(cycle(5), 3, -1) == 1);
}

TEST_CASE("edge criticality sweeps", "[coloring]") {
    CriticalityResult c5 = check_edge_critical(cycle(5));
    REQUIRE(c5.conclusive);
    REQUIRE(c5.chi == 3);
    REQUIRE(c5.critical);

    CriticalityResult c6 = check_edge_critical(cycle(6));
    REQUIRE(c6.conclusive);
    REQUIRE(c6.chi == 2);
    REQUIRE_FALSE(c6.critical);
    REQUIRE(c6.robust_edges.size() == 6);  // a path still needs two colours

    CriticalityResult k4 = check_edge_critical(complete(4));
    REQUIRE(k4.critical);

    CriticalityResult starved = check_edge_critical(cycle(5), 0);
    REQUIRE_FALSE(starved.conclusive);
}

TEST_CASE("vertex criticality sweeps", "[coloring]") {
    CriticalityResult c5 = check_vertex_critical(cycle(5));
    REQUIRE(c5.conclusive);
    REQUIRE(c5.critical);

    // the Petersen graph keeps chromatic number 3 after any single deletion
    CriticalityResult pet = check_vertex_critical(kneser_graph(5, 2));
    REQUIRE(pet.conclusive);
    REQUIRE_FALSE(pet.critical);

    // Schrijver graphs are vertex-critical
    CriticalityResult sg = check_vertex_critical(schrijver_graph(6, 2));
    REQUIRE(sg.conclusive);
    REQUIRE(sg.critical);
}
